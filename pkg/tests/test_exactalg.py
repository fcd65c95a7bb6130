import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dstir.exactalg import (
    LAM,
    Basis,
    BasisPoly,
    LambdaPoly,
    binom_sym,
    convert,
    falling,
    format_rational,
    gff,
    gff_sym,
    grf,
    parse_rational,
    rff_sym,
    rising,
)
from dstir.numbers import lah

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
polys = st.lists(rationals, max_size=5).map(LambdaPoly)
SAMPLE_LAMBDAS = [F(0), F(1), F(-1), F(1, 2), F(-2, 3), F(5, 7)]


def test_parse_rational():
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational("-7") == -7
    assert parse_rational(" 6/4 ") == F(3, 2)
    for bad in ("0.5", "1/0", "a/b", "", "1/2/3"):
        with pytest.raises(ValueError):
            parse_rational(bad)
    assert format_rational(F(-3, 6)) == "-1/2"
    assert format_rational(4) == "4"


def test_lambdapoly_canonical_form():
    assert LambdaPoly([1, 0, 0]).coeffs == (1,)
    assert LambdaPoly([0, 0]).coeffs == ()
    assert LambdaPoly().degree == -1
    assert LambdaPoly([1, -1]) == 1 - LAM
    assert LambdaPoly([2]) == 2
    assert str(LambdaPoly([1, -1, 0])) == "1 - λ"
    assert str(LambdaPoly([F(-1, 2), F(1, 2)])) == "-1/2 + 1/2*λ"
    assert str(LambdaPoly([0, 0, -3])) == "-3*λ^2"
    with pytest.raises(AttributeError):
        LAM.coeffs = ()


def test_flip_negates_odd_coefficients():
    p = LambdaPoly([1, 2, 3, 4])
    assert p.flip().coeffs == (1, -2, 3, -4)
    assert p.flip().flip() == p


@given(polys, polys, rationals)
def test_evaluation_is_ring_homomorphism(p, q, r):
    assert (p + q)(r) == p(r) + q(r)
    assert (p * q)(r) == p(r) * q(r)
    assert (-p)(r) == -p(r)
    assert (p - q)(r) == p(r) - q(r)


@given(polys, rationals)
def test_horner_matches_power_sum(p, r):
    assert p(r) == sum((c * r**i for i, c in enumerate(p.coeffs)), F(0))
    assert p.flip()(r) == p(-r)


@given(polys, polys, polys)
def test_ring_axioms(p, q, s):
    assert p * q == q * p
    assert (p * q) * s == p * (q * s)
    assert p * (q + s) == p * q + p * s
    assert p ** 3 == p * p * p


def test_gff_examples():
    assert gff(1, 0, F(1, 2)) == 1
    assert gff(1, 2, F(1, 2)) == F(1, 2)
    assert gff(3, 3, 0) == 27
    assert grf(1, 3, 1) == 6


def test_gff_sym_examples():
    assert gff_sym(1, 2) == 1 - LAM
    assert gff_sym(F(3, 2), 0) == 1
    assert gff_sym(2, 2) == 4 - 2 * LAM
    assert rff_sym(1, 2) == 1 + LAM
    assert rff_sym(1, 0) == 1
    assert rff_sym(1, 3) == LambdaPoly([1, 3, 2])


def test_falling_rising():
    assert falling(4, 2) == 12
    assert falling(F(5, 2), 0) == 1
    for n in range(8):
        assert rising(1, n) == math.factorial(n)
        assert falling(F(7, 3), n) == gff(F(7, 3), n, 1)


def test_binom_sym():
    assert binom_sym(LAM, 2) == (LAM * LAM - LAM) / 2
    assert binom_sym(LambdaPoly([F(2, 3), 1]), 0) == 1
    assert binom_sym(3, 2) == 3


@pytest.mark.parametrize("r", [F(0), F(1), F(2), F(-3, 2), F(5, 4)])
def test_gff_sym_agrees_with_scalar_product(r):
    for n in range(13):
        sym = gff_sym(r, n)
        assert sym.degree <= n
        for lam in SAMPLE_LAMBDAS:
            assert sym(lam) == gff(r, n, lam)
            assert rff_sym(r, n)(lam) == grf(r, n, lam)


def test_gff_sym_at_lambda_one_is_falling_factorial():
    for n in range(13):
        assert gff_sym(1, n)(1) == falling(1, n) == (1 if n <= 1 else 0)


def test_convert_examples():
    p = BasisPoly.unit(Basis.FALLING_LAMBDA, 2)
    assert convert(p, Basis.FALLING).coeffs == (0, 1 - LAM, 1)
    q = BasisPoly(Basis.RISING, (0, 1 + LAM, F(2, 3)))
    assert convert(q, Basis.RISING) is q
    assert convert(BasisPoly.unit(Basis.RISING, 2), Basis.FALLING).coeffs == (0, 2, 1)


def test_rising_to_falling_matrix_is_lah():
    for n in range(13):
        row = convert(BasisPoly.unit(Basis.RISING, n), Basis.FALLING).padded(n + 1)
        assert list(row) == [lah(n, k) for k in range(n + 1)]


@settings(max_examples=40, deadline=None)
@given(
    st.lists(polys, min_size=1, max_size=8),
    st.sampled_from(list(Basis)),
    st.sampled_from(list(Basis)),
    st.sampled_from(list(Basis)),
)
def test_conversion_round_trip(coeffs, a, b, c):
    p = BasisPoly(a, tuple(coeffs))
    there = convert(convert(p, b), c)
    assert convert(there, a) == p
    assert convert(p, c) == there  # path independence
    assert there.degree == p.degree


@pytest.mark.parametrize("a", list(Basis))
@pytest.mark.parametrize("b", list(Basis))
def test_conversion_matrices_mutually_inverse_to_degree_12(a, b):
    size = 13
    for k in range(size):
        e = BasisPoly.unit(a, k)
        assert convert(convert(e, b), a) == e


@given(st.lists(polys, min_size=1, max_size=6), st.sampled_from(list(Basis)), rationals)
@settings(deadline=None)
def test_evaluation_is_basis_independent(coeffs, b, x):
    p = BasisPoly(Basis.MONOMIAL, tuple(coeffs))
    assert convert(p, b).evaluate(x) == p.evaluate(x)
