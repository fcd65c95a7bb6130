import math
import random
from fractions import Fraction as F

import pytest
import sympy

from dstir.exactalg import LAM, LambdaPoly, binom_sym, falling_sym, gff
from dstir.numbers import lah, s1_lambda
from dstir.series import (
    TruncatedSeries,
    binom_series,
    deg_exp,
    deg_log,
    exp_series,
    geometric,
    one,
    variable,
)


def test_ring_examples():
    a = TruncatedSeries([1, 1], 3)
    b = TruncatedSeries([1, -1], 3)
    assert a * b == TruncatedSeries([1, 0, -1], 3)
    assert variable(3) ** 0 == one(3)
    assert geometric(6) * TruncatedSeries([1, -1], 6) == one(6)
    assert len(geometric(6)) == 7


def test_truncation_is_consistent():
    f = TruncatedSeries([1, 2, 3, 4, 5])
    g = TruncatedSeries([2, 0, 1, 7, 1])
    for n in range(5):
        assert (f * g)[n] == (f.truncate(n) * g.truncate(n))[n]


def test_usage_errors():
    with pytest.raises(ValueError):
        TruncatedSeries([1, 2]) * TruncatedSeries([1, 2, 3])
    with pytest.raises(ValueError):
        geometric(4).compose(geometric(4))
    with pytest.raises(ValueError):
        exp_series(geometric(3))
    with pytest.raises(ValueError):
        geometric(3).compositional_inverse()
    with pytest.raises(ZeroDivisionError):
        variable(3).reciprocal()
    with pytest.raises(ZeroDivisionError):
        TruncatedSeries([LAM, 1]).reciprocal()


def test_compose_identity_and_geometric():
    f = deg_exp(F(3, 2), 8)
    assert f.compose(variable(8)) == f
    u = geometric(8) - 1  # t/(1-t)
    # u/(1-u) = t/(1-2t)
    assert u.compose(u) == TruncatedSeries([0] + [2 ** (n - 1) for n in range(1, 9)])


def test_log_of_t_over_one_minus_t():
    # log_λ(1/(1-t)) = ((1-t)^{-λ} - 1)/λ has [t^m] = (λ+1)...(λ+m-1)/m!
    N = 6
    got = deg_log(N).compose(geometric(N) - 1)
    for m in range(1, N + 1):
        want = LambdaPoly([1])
        for j in range(1, m):
            want = want * (LAM + j)
        assert got[m] == want / math.factorial(m)
    # and the k = 1 case of the expansion through S_{1,λ}(l+1, 1)
    for n in range(5):
        total = sum(
            (s1_lambda(l + 1, 1) * F(math.comb(n, l), math.factorial(l + 1)) for l in range(n + 1)),
            LambdaPoly(),
        )
        assert got[n + 1] == total


def test_reciprocal():
    assert TruncatedSeries([1, -1], 9).reciprocal() == geometric(9)


def test_reciprocal_random_units():
    rng = random.Random(20240)
    for _ in range(50):
        cs = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(13)]
        if cs[0] == 0:
            cs[0] = F(1)
        f = TruncatedSeries(cs)
        assert f * f.reciprocal() == one(12)


def test_reciprocal_over_lambda_polys():
    f = deg_exp(1, 10)
    assert f * f.reciprocal() == one(10, like=f)
    # e_λ(t)^{-1} = e_{-λ}(-t)
    assert f.reciprocal() == TruncatedSeries([c.flip() for c in deg_exp(1, 10).coeffs]).dilate(-1)


def test_compositional_inverse():
    t = variable(8)
    assert t.compositional_inverse() == t
    e1 = deg_exp(1, 8) - 1
    inv = e1.compositional_inverse()
    assert inv == deg_log(8)
    assert e1.compose(inv) == TruncatedSeries([0, 1], 8)
    assert inv.compose(e1) == TruncatedSeries([0, 1], 8)


def test_compositional_inverse_rational():
    f = TruncatedSeries([0, 2, F(1, 3), -1, 5, 0, F(7, 2)])
    h = f.compositional_inverse()
    t = variable(6)
    assert f.compose(h) == t and h.compose(f) == t


def test_deg_exp_coefficients():
    e = deg_exp(1, 6)
    assert e[2] == (1 - LAM) / 2
    assert e[0] == 1
    x = F(3, 5)
    classical = deg_exp(x, 6, lam=0)
    assert classical.coeffs == tuple(x**n / math.factorial(n) for n in range(7))
    assert deg_exp(x, 6)[4](F(1, 3)) == gff(x, 4, F(1, 3)) / 24
    assert deg_exp(x, 6, lam=F(1, 3))[4] == gff(x, 4, F(1, 3)) / 24


def test_deg_log_coefficients():
    lg = deg_log(8)
    assert lg[2] == (LAM - 1) / 2
    assert lg[1] == 1
    assert lg[0] == 0
    for n in range(1, 9):
        assert lg[n](0) == F((-1) ** (n - 1), n)
        assert deg_log(8, lam=0)[n] == F((-1) ** (n - 1), n)


@pytest.mark.parametrize("n", range(1, 11))
def test_log_coefficient_rewrite_symbolically(n):
    # λ^{n-1} (1)_{n,1/λ} is the polynomial prod_{j=1}^{n-1} (λ - j)
    lam = sympy.Symbol("lam")
    expr = lam ** (n - 1) * sympy.prod([1 - j / lam for j in range(n)])
    poly = sympy.Poly(sympy.cancel(expr), lam)
    ours = falling_sym(LAM - 1, n - 1)
    assert [F(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())] == list(ours.coeffs)
    assert deg_log(n)[n] * math.factorial(n) == ours


def test_binom_series():
    assert binom_series(1, 5) == TruncatedSeries([1, 1], 5)
    assert binom_series(LAM, 4)[2] == binom_sym(LAM, 2)
    assert binom_series(-1, 6) == TruncatedSeries([(-1) ** m for m in range(7)])


@pytest.mark.parametrize("alpha", [F(1, 2), F(-2, 3), F(5)])
def test_binom_series_matches_sympy(alpha):
    t = sympy.Symbol("t")
    ref = sympy.series((1 + t) ** sympy.Rational(alpha.numerator, alpha.denominator), t, 0, 8).removeO()
    ref = sympy.Poly(ref, t)
    want = [F(0)] * 8
    for (deg,), c in ref.terms():
        want[deg] = F(int(c.p), int(c.q))
    assert list(binom_series(alpha, 7).coeffs) == want


def test_exp_series():
    assert exp_series(TruncatedSeries([0], 5)) == one(5)
    assert exp_series(variable(6)) == TruncatedSeries([F(1, math.factorial(n)) for n in range(7)])
    bell = exp_series(deg_exp(1, 4) - 1)
    assert bell[2] == (2 - LAM) / 2


def test_lah_generating_function():
    for k in range(13):
        col = ((variable(12) * geometric(12)) ** k).scale(F(1, math.factorial(k)))
        for n in range(k, 13):
            assert col.egf(n) == lah(n, k)


def test_round_trips_order_16():
    N = 16
    e, lg, t = deg_exp(1, N), deg_log(N), variable(N)
    assert e.compose(lg) == t + 1
    assert lg.compose(e - 1) == t


def test_symbolic_and_rational_rings_agree():
    lam = F(2, 7)
    sym = deg_exp(F(1, 3), 6) * deg_log(6)
    num = deg_exp(F(1, 3), 6, lam=lam) * deg_log(6, lam=lam)
    assert [c(lam) for c in sym.coeffs] == list(num.coeffs)
