"""Bounded-range verification of the degenerate Stirling identities.

Each identity is a generator of ``(params, lhs, rhs)`` triples scanned in
increasing ``n``, then ``k``, then ``r``/``p`` (plus any sample point last).
``check`` compares them exactly and records the first disagreement.

Scan ranges (``N`` is ``n_max``; ``R_MAX`` = 4):

    T1, E16, E19      0 <= k <= n <= N
    T2a, T2b, E22,    0 <= k <= n <= N, 0 <= r <= R_MAX
      E23_1
    T3                0 <= k <= n <= N
    T4                0 <= k <= n, 1 <= n <= N
    T5a               0 <= k <= n <= N, α in ALPHA_SAMPLES
    T5b               0 <= k <= n <= N, α = λ
    T6                1 <= k, k - 1 <= n <= N
    T7, T8, T8limit   0 <= k <= n <= N   (p in place of k for T8)
    T9, T13, T14,     0 <= p <= n <= N
      T15, E57
    T13probe          1 <= p <= n <= N   (expected to fail)
    T10               0 <= p <= n <= N, every x-coefficient and x = 1
    T10corollary      1 <= n <= N
    T12               0 <= p <= n <= N, (λ, x) grid off 1 ± λx = 0
    L11               0 <= m <= n <= N, both matrix products
    E53, E53corrected 0 <= l <= n <= N
    RT_exp_log        coefficients 0..N+2 of three series round trips
    RT_limits         0 <= k <= n <= N, kinds s1 and s2
"""
from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from . import series as ser
from .exactalg import (
    LAM,
    Basis,
    BasisPoly,
    LambdaPoly,
    binom_q,
    binom_sym,
    convert,
    falling_sym,
    format_rational,
    gff,
    gff_sym,
    product_poly,
    rff_sym,
)
from .numbers import (
    bell_number,
    bell_poly,
    lah,
    laguerre_deg,
    r_stirling2,
    r_stirling2_alt,
    r_stirling2_gf,
    s1_classical,
    s1_lambda,
    s2_classical,
    s2_lambda,
    unsigned_s1_lambda,
)

R_MAX = 4
ALPHA_SAMPLES = (Fraction(-2), Fraction(-1, 2), Fraction(1, 3), Fraction(3))
DEFAULT_LAM_GRID = (
    Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 3),
    Fraction(2, 5), Fraction(-3, 7),
)
DEFAULT_X_GRID = (Fraction(1, 2), Fraction(-1, 3), Fraction(2), Fraction(5, 4))

_ZERO = LambdaPoly()


class IdentityId(str, enum.Enum):
    T1 = "T1"
    T2a = "T2a"
    T2b = "T2b"
    T3 = "T3"
    T4 = "T4"
    T5a = "T5a"
    T5b = "T5b"
    T6 = "T6"
    T7 = "T7"
    T8 = "T8"
    T8limit = "T8limit"
    T9 = "T9"
    T10 = "T10"
    T10corollary = "T10corollary"
    T12 = "T12"
    L11 = "L11"
    T13 = "T13"
    T13probe = "T13probe"
    T14 = "T14"
    T15 = "T15"
    E16 = "E16"
    E19 = "E19"
    E22 = "E22"
    E23_1 = "E23_1"
    E53 = "E53"
    E53corrected = "E53corrected"
    E57 = "E57"
    RT_exp_log = "RT_exp_log"
    RT_limits = "RT_limits"


@dataclass(frozen=True)
class CheckMode:
    """How to compare: exactly in Q[λ], or at rational sample points.

    Sampled mode uses the fixed grids plus ``samples`` extra λ and x values
    drawn from ``random.Random(seed)``.
    """

    kind: str = "symbolic"
    seed: int = 0
    samples: int = 2
    lam_grid: tuple = DEFAULT_LAM_GRID
    x_grid: tuple = DEFAULT_X_GRID

    def __post_init__(self):
        if self.kind not in ("symbolic", "sampled"):
            raise ValueError(f"unknown check mode {self.kind!r}")
        if self.samples < 0:
            raise ValueError("samples must be nonnegative")

    @classmethod
    def symbolic(cls) -> "CheckMode":
        return cls("symbolic")

    @classmethod
    def sampled(cls, seed: int = 0, samples: int = 2) -> "CheckMode":
        return cls("sampled", seed=seed, samples=samples)

    def _extras(self, salt: int) -> list:
        rng = random.Random(self.seed * 2 + salt)
        out = []
        while len(out) < self.samples:
            v = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            if v:
                out.append(v)
        return out

    def lambdas(self) -> tuple:
        vals = [v for v in self.lam_grid if v] + self._extras(0)
        return tuple(dict.fromkeys(vals))

    def xs(self) -> tuple:
        return tuple(dict.fromkeys(list(self.x_grid) + self._extras(1)))

    def describe(self) -> dict:
        if self.kind == "symbolic":
            return {"kind": "symbolic"}
        return {
            "kind": "sampled",
            "seed": self.seed,
            "lambdas": [format_rational(v) for v in self.lambdas()],
            "xs": [format_rational(v) for v in self.xs()],
        }


def _render(v) -> str:
    if isinstance(v, LambdaPoly):
        return str(v)
    if isinstance(v, Fraction) or isinstance(v, int):
        return format_rational(v)
    return str(v)


@dataclass(frozen=True)
class Counterexample:
    params: tuple
    lhs: str
    rhs: str

    def to_dict(self) -> dict:
        return {
            "params": {k: _render(v) if isinstance(v, Fraction) else v for k, v in self.params},
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass(frozen=True)
class IdentityReport:
    id: IdentityId
    mode: CheckMode
    n_max: int
    status: str
    cases: int
    bounds: dict = field(default_factory=dict)
    counterexample: Counterexample | None = None
    expected_fail: bool = False

    def __post_init__(self):
        if (self.status == "fail") != (self.counterexample is not None):
            raise ValueError("status 'fail' must come with a counterexample and vice versa")

    @property
    def ok(self) -> bool:
        """True when the outcome is the expected one (probes expect failure)."""
        return self.expected_fail or self.status == "pass"

    def to_dict(self) -> dict:
        d = {
            "id": self.id.value,
            "mode": self.mode.kind,
            "n_max": self.n_max,
            "status": self.status,
            "expected": "fail" if self.expected_fail else "pass",
            "cases": self.cases,
        }
        if self.bounds:
            d["bounds"] = {k: _render(v) if isinstance(v, Fraction) else v for k, v in self.bounds.items()}
        if self.mode.kind == "sampled":
            d["sampling"] = self.mode.describe()
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample.to_dict()
        return d


# -- identity generators ---------------------------------------------------
# Each yields (params, lhs, rhs).  lhs/rhs are LambdaPoly unless the
# identity is inherently pointwise, in which case it receives the mode.

def _c(n, k):
    return math.comb(n, k)


def _sign(e):
    return -1 if e & 1 else 1


def _t1(N):
    for n in range(N + 1):
        for k in range(n + 1):
            lhs = _sum(s2_lambda(j, k) * gff_sym(1, n - j) * _c(n, j) for j in range(k, n + 1))
            rhs = s2_lambda(n + 1, k + 1) + LAM * n * s2_lambda(n, k + 1)
            yield (("n", n), ("k", k)), lhs, rhs


def _e16(N):
    for n in range(N + 1):
        for k in range(n + 1):
            lhs = _sum(s2_lambda(j, k) * gff_sym(1, n - j) * _c(n, j) for j in range(k, n + 1))
            rhs = s2_lambda(n, k + 1) * (k + 1) + s2_lambda(n, k)
            yield (("n", n), ("k", k)), lhs, rhs


def _e19(N):
    for n in range(N + 1):
        for k in range(n + 1):
            lhs = s2_lambda(n + 1, k + 1) + LAM * n * s2_lambda(n, k + 1)
            rhs = s2_lambda(n, k) + s2_lambda(n, k + 1) * (k + 1)
            yield (("n", n), ("k", k)), lhs, rhs


def _t2a(N):
    for n in range(N + 1):
        for k in range(n + 1):
            for r in range(R_MAX + 1):
                yield (("n", n), ("k", k), ("r", r)), r_stirling2(n, k, r), r_stirling2_alt(n, k, r)


def _e22(N):
    for n in range(N + 1):
        for k in range(n + 1):
            for r in range(R_MAX + 1):
                yield (("n", n), ("k", k), ("r", r)), r_stirling2_gf(n, k, r), r_stirling2(n, k, r)


def _shifted_gff_monomial(n, r) -> BasisPoly:
    # (x + r)_{n,λ} = prod_j (x - (jλ - r))
    return BasisPoly(Basis.MONOMIAL, product_poly([LAM * j - r for j in range(n)]))


def _e23_1(N):
    for n in range(N + 1):
        falling_forms = {
            r: convert(_shifted_gff_monomial(n, r), Basis.FALLING).padded(n + 1)
            for r in range(R_MAX + 1)
        }
        for k in range(n + 1):
            for r in range(R_MAX + 1):
                yield (("n", n), ("k", k), ("r", r)), falling_forms[r][k], r_stirling2(n, k, r)


def _t2b(N):
    for n in range(N + 1):
        expanded, target = {}, {}
        for r in range(R_MAX + 1):
            p = BasisPoly(Basis.FALLING, tuple(r_stirling2(n, k, r) for k in range(n + 1)))
            expanded[r] = convert(p, Basis.MONOMIAL).padded(n + 1)
            target[r] = _shifted_gff_monomial(n, r).padded(n + 1)
        for j in range(n + 1):
            for r in range(R_MAX + 1):
                yield (("n", n), ("x^", j), ("r", r)), expanded[r][j], target[r][j]


def _t3(N):
    for n in range(N + 1):
        for k in range(n + 1):
            lhs = _sum(
                rff_sym(1, l - k) * unsigned_s1_lambda(n, l) * _c(l, k) for l in range(k, n + 1)
            ) / math.factorial(n)
            rhs = _sum(unsigned_s1_lambda(l, k) / math.factorial(l) for l in range(k, n + 1))
            yield (("n", n), ("k", k)), lhs, rhs


def _t4(N):
    for n in range(1, N + 1):
        for k in range(n + 1):
            lhs = s1_lambda(n, k) + s1_lambda(n - 1, k) * n
            rhs = _sum(s1_lambda(n, l) * gff_sym(1, l - k) * _c(l, k) for l in range(k, n + 1))
            yield (("n", n), ("k", k)), lhs, rhs


def _t5_forms(n, k, alpha):
    if isinstance(alpha, LambdaPoly):
        binom = binom_sym
    else:
        def binom(a, m):
            return LambdaPoly((binom_q(a, m),))
    a = _sum(s1_lambda(n, l) * gff_sym(alpha, l - k) * _c(l, k) for l in range(k, n + 1))
    b = _sum(
        s1_lambda(l, k) * binom(alpha, n - l) * (_c(n, l) * math.factorial(n - l))
        for l in range(k, n + 1)
    )
    c = _sum(
        s1_lambda(n - l, k) * binom(alpha, l) * (_c(n, l) * math.factorial(l))
        for l in range(n - k + 1)
    )
    return a, b, c


def _t5a(N):
    for n in range(N + 1):
        for k in range(n + 1):
            for alpha in ALPHA_SAMPLES:
                a, b, c = _t5_forms(n, k, alpha)
                yield (("n", n), ("k", k), ("α", alpha), ("form", "first=second")), a, b
                yield (("n", n), ("k", k), ("α", alpha), ("form", "first=third")), a, c


def _t5b(N):
    for n in range(N + 1):
        for k in range(n + 1):
            a, b, c = _t5_forms(n, k, LAM)
            yield (("n", n), ("k", k), ("form", "first=second")), a, b
            yield (("n", n), ("k", k), ("form", "first=third")), a, c


def _t6(N):
    for n in range(N + 1):
        for k in range(1, n + 2):
            lhs = unsigned_s1_lambda(n + 1, k).flip() / math.factorial(n + 1)
            rhs = _sum(
                s1_lambda(l + 1, k) * Fraction(_c(n, l), math.factorial(l + 1))
                for l in range(k - 1, n + 1)
            )
            yield (("n", n), ("k", k)), lhs, rhs


def _log_egf(m: int) -> LambdaPoly:
    # λ^{m-1} (1)_{m,1/λ} rewritten as prod_{j=1}^{m-1} (λ - j)
    return falling_sym(LAM - 1, m - 1)


def _t7_symbolic(N):
    for n in range(N + 1):
        for k in range(n + 1):
            lhs = s1_lambda(n + 1, k + 1)
            acc = _sum(
                _log_egf(n - l) * s1_lambda(l + 1, k)
                / (math.factorial(n - l) * math.factorial(l + 1))
                for l in range(k - 1, n)
            )
            rhs = acc * Fraction(math.factorial(n + 1), k + 1)
            yield (("n", n), ("k", k)), lhs, rhs


def _t7_sampled(N, mode):
    # the printed form, with λ^{-l} and (1)_{n-l,1/λ}, at nonzero rational λ
    lams = mode.lambdas()
    for n in range(N + 1):
        for k in range(n + 1):
            lhs_poly = s1_lambda(n + 1, k + 1)
            for lam in lams:
                acc = Fraction(0)
                for l in range(k - 1, n):
                    acc += (
                        lam ** (-l) / math.factorial(n - l) * gff(1, n - l, 1 / lam)
                        * s1_lambda(l + 1, k)(lam) / math.factorial(l + 1)
                    )
                rhs = lam ** (n - 1) / (k + 1) * math.factorial(n + 1) * acc
                yield (("n", n), ("k", k), ("λ", lam)), lhs_poly(lam), rhs


def _t8(N):
    for n in range(N + 1):
        for p in range(n + 1):
            lhs = s1_lambda(n + 1, p + 1)
            rhs = _ZERO
            for k in range(p, n + 1):
                inner = _sum(
                    s1_lambda(l, p) * (_sign(k - l) * _c(k, l) * math.factorial(k - l))
                    for l in range(p, k + 1)
                )
                rhs = rhs + inner * falling_sym(LAM, n - k) * _c(n, k)
            yield (("n", n), ("p", p)), lhs, rhs


def _t8limit(N):
    for n in range(N + 1):
        for p in range(n + 1):
            lhs = s1_lambda(n + 1, p + 1)(0)
            rhs = sum(
                (_sign(n - l) * _c(n, l) * math.factorial(n - l) * s1_classical(l, p)
                 for l in range(p, n + 1)),
                Fraction(0),
            )
            yield (("n", n), ("p", p)), lhs, rhs
            yield (("n", n), ("p", p), ("side", "classical")), s1_classical(n + 1, p + 1), rhs


def _t9(N):
    for n in range(N + 1):
        for p in range(n + 1):
            lhs = _sum(unsigned_s1_lambda(k, p).flip() / math.factorial(k) for k in range(p, n + 1))
            rhs = _sum(s1_lambda(k, p) * Fraction(_c(n, k), math.factorial(k)) for k in range(p, n + 1))
            yield (("n", n), ("p", p)), lhs, rhs


def _t10(N):
    for n in range(N + 1):
        for p in range(n + 1):
            acc = BasisPoly(Basis.MONOMIAL, ())
            for k in range(p, n + 1):
                acc = acc + bell_poly(n - k).scale(s2_lambda(k, p) * _c(n, k))
            lhs = ((_ZERO,) * p + acc.coeffs + (_ZERO,) * (n + 1))[: n + 1]
            rhs = tuple(s2_lambda(n, j) * _c(j, p) for j in range(n + 1))
            for j in range(n + 1):
                yield (("n", n), ("p", p), ("x^", j)), lhs[j], rhs[j]
            at_one_l = _sum(s2_lambda(k, p) * bell_number(n - k) * _c(n, k) for k in range(p, n + 1))
            at_one_r = _sum(s2_lambda(n, k) * _c(k, p) for k in range(p, n + 1))
            yield (("n", n), ("p", p), ("x", 1)), at_one_l, at_one_r


def _t10corollary(N):
    for n in range(1, N + 1):
        lhs = _sum(s2_lambda(n, k) * k for k in range(1, n + 1))
        rhs = _sum(bell_number(k) * gff_sym(1, n - k) * _c(n, k) for k in range(n))
        yield (("n", n),), lhs, rhs


def _t12_sampled(N, mode):
    points = [
        (lam, x)
        for lam in mode.lambdas()
        for x in mode.xs()
        if 1 + lam * x != 0 and 1 - lam * x != 0
    ]
    for n in range(N + 1):
        for p in range(n + 1):
            for lam, x in points:
                lhs = laguerre_deg(n - p, p - 1, -x, -lam)
                u = x / (1 + lam * x)
                acc = sum(
                    (_c(k, p) * gff(1, k - p, lam) * lah(n, k) * u ** (k - p)
                     for k in range(p, n + 1)),
                    Fraction(0),
                )
                rhs = Fraction(math.factorial(p), math.factorial(n)) * acc
                yield (("n", n), ("p", p), ("λ", lam), ("x", x)), lhs, rhs


def _l11(N):
    for n in range(N + 1):
        for m in range(n + 1):
            delta = LambdaPoly((1,)) if n == m else _ZERO
            p21 = _sum(s2_lambda(n, k) * s1_lambda(k, m) for k in range(m, n + 1))
            p12 = _sum(s1_lambda(n, k) * s2_lambda(k, m) for k in range(m, n + 1))
            yield (("n", n), ("m", m), ("product", "S2*S1")), p21, delta
            yield (("n", n), ("m", m), ("product", "S1*S2")), p12, delta


def _t13(N):
    for n in range(N + 1):
        for p in range(n + 1):
            lhs = s2_lambda(n, p).flip() * _sign(n)
            rhs = _sum(s2_lambda(n, k) * (lah(k, p) * _sign(k)) for k in range(p, n + 1))
            yield (("n", n), ("p", p)), lhs, rhs


def _t13probe(N):
    # the statement as printed, with L(n,k) in the summand
    for n in range(N + 1):
        for p in range(1, n + 1):
            lhs = s2_lambda(n, p).flip() * _sign(n)
            rhs = _sum(s2_lambda(n, k) * (lah(n, k) * _sign(k)) for k in range(p, n + 1))
            yield (("n", n), ("p", p)), lhs, rhs


def _t14(N):
    for n in range(N + 1):
        for p in range(n + 1):
            lhs = s2_lambda(n, p).flip()
            rhs = _sum(
                s2_lambda(k, p) * gff_sym(p, n - k).flip() * (_sign(k) * _c(n, k))
                for k in range(p, n + 1)
            ) * _sign(p)
            yield (("n", n), ("p", p)), lhs, rhs


def _t15(N):
    for n in range(N + 1):
        for p in range(n + 1):
            lhs = unsigned_s1_lambda(n, p).flip()
            rhs = _sum(s1_lambda(k, p) * lah(n, k) for k in range(p, n + 1))
            yield (("n", n), ("p", p)), lhs, rhs


def _e53(N):
    for n in range(N + 1):
        for l in range(n + 1):
            rhs = _sum(unsigned_s1_lambda(n, k) * s2_lambda(k, l) for k in range(l, n + 1))
            # equality with the λ-free left side forces deg_λ rhs <= 0
            yield (("n", n), ("l", l)), LambdaPoly((lah(n, l),)), rhs


def _e53_corrected(N):
    # <x>_{k,λ} = (x)_{k,-λ} expands in falling factorials with S_{2,-λ}
    for n in range(N + 1):
        for l in range(n + 1):
            rhs = _sum(unsigned_s1_lambda(n, k) * s2_lambda(k, l).flip() for k in range(l, n + 1))
            yield (("n", n), ("l", l)), LambdaPoly((lah(n, l),)), rhs


def _e57(N):
    for n in range(N + 1):
        for p in range(n + 1):
            lhs = _sum(s2_lambda(n, k) * (lah(k, p) * _sign(k)) for k in range(p, n + 1))
            rhs = _sum(
                s2_lambda(k, p) * gff_sym(p, n - k).flip() * (_sign(n - k) * _c(n, k))
                for k in range(p, n + 1)
            ) * _sign(p)
            yield (("n", n), ("p", p)), lhs, rhs


def _rt_exp_log(N):
    order = N + 2
    e = ser.deg_exp(1, order)
    lg = ser.deg_log(order)
    t = ser.variable(order)
    checks = (
        ("e(log(1+t))", e.compose(lg), t + 1),
        ("log(e(t))", lg.compose(e - 1), t),
        ("inverse(e(t)-1)", (e - 1).compositional_inverse(), lg),
    )
    for n in range(order + 1):
        for name, got, want in checks:
            yield (("n", n), ("round_trip", name)), got[n], want[n]


def _rt_limits(N):
    for n in range(N + 1):
        for k in range(n + 1):
            yield (("n", n), ("k", k), ("kind", "s1")), s1_lambda(n, k)(0), s1_classical(n, k)
            yield (("n", n), ("k", k), ("kind", "s2")), s2_lambda(n, k)(0), s2_classical(n, k)


def _sum(terms) -> LambdaPoly:
    total = _ZERO
    for t in terms:
        total = total + t
    return total


@dataclass(frozen=True)
class _Entry:
    symbolic: object = None     # generator(N) of exact triples
    sampled: object = None      # generator(N, mode) of pointwise triples
    default: str = "symbolic"
    bounds: tuple = ()
    expected_fail: bool = False


IDENTITIES: dict = {
    IdentityId.T1: _Entry(_t1),
    IdentityId.T2a: _Entry(_t2a, bounds=(("r_max", R_MAX),)),
    IdentityId.T2b: _Entry(_t2b, bounds=(("r_max", R_MAX),)),
    IdentityId.T3: _Entry(_t3),
    IdentityId.T4: _Entry(_t4),
    IdentityId.T5a: _Entry(_t5a, bounds=(("alpha", [format_rational(a) for a in ALPHA_SAMPLES]),)),
    IdentityId.T5b: _Entry(_t5b, bounds=(("alpha", "λ"),)),
    IdentityId.T6: _Entry(_t6),
    IdentityId.T7: _Entry(_t7_symbolic, _t7_sampled, default="sampled"),
    IdentityId.T8: _Entry(_t8),
    IdentityId.T8limit: _Entry(_t8limit),
    IdentityId.T9: _Entry(_t9),
    IdentityId.T10: _Entry(_t10),
    IdentityId.T10corollary: _Entry(_t10corollary),
    IdentityId.T12: _Entry(None, _t12_sampled, default="sampled"),
    IdentityId.L11: _Entry(_l11),
    IdentityId.T13: _Entry(_t13),
    IdentityId.T13probe: _Entry(_t13probe, expected_fail=True),
    IdentityId.T14: _Entry(_t14),
    IdentityId.T15: _Entry(_t15),
    IdentityId.E16: _Entry(_e16),
    IdentityId.E19: _Entry(_e19),
    IdentityId.E22: _Entry(_e22, bounds=(("r_max", R_MAX),)),
    IdentityId.E23_1: _Entry(_e23_1, bounds=(("r_max", R_MAX),)),
    IdentityId.E53: _Entry(_e53),
    IdentityId.E53corrected: _Entry(_e53_corrected),
    IdentityId.E57: _Entry(_e57),
    IdentityId.RT_exp_log: _Entry(_rt_exp_log),
    IdentityId.RT_limits: _Entry(_rt_limits),
}


def _sample_points(triples: Iterator, mode: CheckMode) -> Iterator:
    """Evaluate exact triples at every λ of the grid."""
    lams = mode.lambdas()
    for params, lhs, rhs in triples:
        if not isinstance(lhs, LambdaPoly) and not isinstance(rhs, LambdaPoly):
            yield params, lhs, rhs
            continue
        lhs_p = lhs if isinstance(lhs, LambdaPoly) else LambdaPoly((lhs,))
        rhs_p = rhs if isinstance(rhs, LambdaPoly) else LambdaPoly((rhs,))
        for lam in lams:
            yield params + (("λ", lam),), lhs_p(lam), rhs_p(lam)


def default_mode(identity: IdentityId, seed: int = 0, samples: int = 2) -> CheckMode:
    if IDENTITIES[IdentityId(identity)].default == "sampled":
        return CheckMode.sampled(seed, samples)
    return CheckMode.symbolic()


def check(identity, n_max: int, mode: CheckMode | None = None) -> IdentityReport:
    """Scan one identity over its range and report the first failure."""
    identity = IdentityId(identity)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    entry = IDENTITIES[identity]
    if mode is None:
        mode = default_mode(identity)
    if mode.kind == "symbolic" and entry.symbolic is None:
        # rational functions of x: no exact route, fall back to the grid
        mode = CheckMode.sampled()
    if mode.kind == "symbolic":
        triples = entry.symbolic(n_max)
    elif entry.sampled is not None:
        triples = entry.sampled(n_max, mode)
    else:
        triples = _sample_points(entry.symbolic(n_max), mode)

    cases = 0
    counterexample = None
    for params, lhs, rhs in triples:
        cases += 1
        if lhs != rhs:
            counterexample = Counterexample(params, _render(lhs), _render(rhs))
            break
    return IdentityReport(
        id=identity,
        mode=mode,
        n_max=n_max,
        status="fail" if counterexample else "pass",
        cases=cases,
        bounds=dict(entry.bounds),
        counterexample=counterexample,
        expected_fail=entry.expected_fail,
    )


def check_all(
    n_max: int,
    mode: CheckMode | None = None,
    ids=None,
    seed: int = 0,
    samples: int = 2,
) -> list:
    """Run identities (all by default) in IdentityId order.

    ``mode=None`` gives each identity its default mode; sampled defaults use
    ``seed`` and ``samples``.
    """
    ids = list(IdentityId) if ids is None else [IdentityId(i) for i in ids]
    order = {ident: i for i, ident in enumerate(IdentityId)}
    reports = []
    for ident in sorted(dict.fromkeys(ids), key=order.__getitem__):
        m = mode if mode is not None else default_mode(ident, seed, samples)
        reports.append(check(ident, n_max, m))
    return reports


__all__ = [
    "IdentityId",
    "CheckMode",
    "Counterexample",
    "IdentityReport",
    "IDENTITIES",
    "R_MAX",
    "ALPHA_SAMPLES",
    "check",
    "check_all",
    "default_mode",
]
