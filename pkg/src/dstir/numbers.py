"""Degenerate Stirling, Lah, r-Stirling, Bell and Laguerre numbers.

Every family here has a primary route (recurrence or closed form) and a
generating-function route (:func:`gf_coeff`, :func:`r_stirling2_gf`,
:func:`bell_gf_coeff`, :func:`laguerre_gf_coeff`) so the two can be
checked against each other.
"""
from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactalg import (
    LAM,
    Basis,
    BasisPoly,
    LambdaPoly,
    binom_q,
    falling,
    gff_sym,
    grf,
)
from . import series as ser

_ZERO = LambdaPoly()
_ONE = LambdaPoly((1,))


class StirlingKind(enum.Enum):
    S1_LAMBDA = "s1"
    S2_LAMBDA = "s2"
    UNSIGNED_S1_LAMBDA = "us1"
    LAH = "lah"
    S1_CLASSICAL = "s1classical"
    S2_CLASSICAL = "s2classical"


def _lah_closed(n: int, k: int) -> Fraction:
    if n == 0 and k == 0:
        return Fraction(1)
    if k < 1 or k > n:
        return Fraction(0)
    return Fraction(math.factorial(n) // math.factorial(k) * math.comb(n - 1, k - 1))


def _next_row(kind: StirlingKind, rows: list) -> tuple:
    n = len(rows) - 1  # building row n+1 from row n
    prev = rows[n]

    def at(k):
        return prev[k] if 0 <= k <= n else _ZERO

    if kind is StirlingKind.S2_LAMBDA:
        # S(n+1,k) = S(n,k-1) + (k - nλ) S(n,k)
        return tuple(at(k - 1) + (LAM * (-n) + k) * at(k) for k in range(n + 2))
    if kind is StirlingKind.S1_LAMBDA:
        # S(n+1,k) = S(n,k-1) + (kλ - n) S(n,k)
        return tuple(at(k - 1) + (LAM * k - n) * at(k) for k in range(n + 2))
    if kind is StirlingKind.UNSIGNED_S1_LAMBDA:
        # sign-twisted S1 recurrence: [n+1,k] = [n,k-1] + (n - kλ)[n,k]
        return tuple(at(k - 1) + (LAM * (-k) + n) * at(k) for k in range(n + 2))
    if kind is StirlingKind.S2_CLASSICAL:
        return tuple(at(k - 1) + at(k) * k for k in range(n + 2))
    if kind is StirlingKind.S1_CLASSICAL:
        return tuple(at(k - 1) - at(k) * n for k in range(n + 2))
    if kind is StirlingKind.LAH:
        return tuple(LambdaPoly((_lah_closed(n + 1, k),)) for k in range(n + 2))
    raise ValueError(kind)


_TABLES: dict = {kind: [(_ONE,)] for kind in StirlingKind}
_LOCK = threading.Lock()


@dataclass(frozen=True)
class Triangle:
    """Rows 0..n_max of one number family; reads outside the triangle are 0."""

    kind: StirlingKind
    rows: tuple

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk) -> LambdaPoly:
        n, k = nk
        if n < 0 or k < 0 or k > n:
            return _ZERO
        return self.rows[n][k]

    def matrix(self, size: int | None = None) -> list:
        size = len(self.rows) if size is None else size
        return [[self[n, k] for k in range(size)] for n in range(size)]

    def at_lambda(self, lam) -> list:
        return [[c(lam) for c in row] for row in self.rows]


def triangle(kind: StirlingKind, n_max: int) -> Triangle:
    """Memoized table, grown row by row up to ``n_max``."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    rows = _TABLES[kind]
    if len(rows) <= n_max:
        with _LOCK:
            while len(rows) <= n_max:
                rows.append(_next_row(kind, rows))
    return Triangle(kind, tuple(rows[: n_max + 1]))


def _entry(kind: StirlingKind, n: int, k: int) -> LambdaPoly:
    if n < 0 or k < 0 or k > n:
        return _ZERO
    return triangle(kind, n).rows[n][k]


def s2_lambda(n: int, k: int) -> LambdaPoly:
    return _entry(StirlingKind.S2_LAMBDA, n, k)


def s1_lambda(n: int, k: int) -> LambdaPoly:
    return _entry(StirlingKind.S1_LAMBDA, n, k)


def unsigned_s1_lambda(n: int, k: int) -> LambdaPoly:
    """(-1)^(n-k) S_{1,λ}(n,k), read from the S1 table."""
    v = s1_lambda(n, k)
    return -v if (n - k) & 1 else v


def s1_classical(n: int, k: int) -> Fraction:
    return _entry(StirlingKind.S1_CLASSICAL, n, k).constant


def s2_classical(n: int, k: int) -> Fraction:
    return _entry(StirlingKind.S2_CLASSICAL, n, k).constant


def lah(n: int, k: int) -> Fraction:
    if n < 0 or k < 0:
        return Fraction(0)
    return _lah_closed(n, k)


# -- r-Stirling numbers ----------------------------------------------------

def r_stirling2(n: int, k: int, r: int) -> LambdaPoly:
    """S^{(r)}_{2,λ}(n+r, k+r) = sum_{l=k}^{n} C(n,l) S_{2,λ}(l,k) (r)_{n-l,λ}."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if k < 0 or k > n:
        return _ZERO
    total = _ZERO
    for l in range(k, n + 1):
        total = total + s2_lambda(l, k) * gff_sym(r, n - l) * math.comb(n, l)
    return total


def r_stirling2_alt(n: int, k: int, r: int) -> LambdaPoly:
    """Second form: sum_{l=k}^{n} C(l,k) S_{2,λ}(n,l) (r)_{l-k}."""
    if k < 0 or k > n:
        return _ZERO
    total = _ZERO
    for l in range(k, n + 1):
        total = total + s2_lambda(n, l) * (falling(r, l - k) * math.comb(l, k))
    return total


@lru_cache(maxsize=None)
def _r_stirling_column(k: int, r: int, order: int) -> tuple:
    e1 = ser.deg_exp(1, order)
    col = ser.deg_exp(r, order) * (e1 - 1) ** k
    return tuple(c / math.factorial(k) for c in col.egf_coeffs())


def r_stirling2_gf(n: int, k: int, r: int) -> LambdaPoly:
    """n! [t^n] of e_λ^r(t) (e_λ(t)-1)^k / k!."""
    if k < 0 or k > n:
        return _ZERO
    return _r_stirling_column(k, r, n)[n]


# -- generating-function route for the triangles ---------------------------

@lru_cache(maxsize=None)
def _gf_column(kind: StirlingKind, k: int, order: int) -> tuple:
    if kind is StirlingKind.S2_LAMBDA:
        base = ser.deg_exp(1, order) - 1
    elif kind is StirlingKind.S1_LAMBDA:
        base = ser.deg_log(order)
    elif kind is StirlingKind.UNSIGNED_S1_LAMBDA:
        # -log_λ(1 - t)
        base = -ser.deg_log(order).dilate(-1)
    elif kind is StirlingKind.LAH:
        base = ser.variable(order) * ser.geometric(order)
    elif kind is StirlingKind.S2_CLASSICAL:
        base = ser.deg_exp(1, order, lam=0) - 1
    elif kind is StirlingKind.S1_CLASSICAL:
        base = ser.deg_log(order, lam=0)
    else:
        raise ValueError(kind)
    col = (base ** k).egf_coeffs()
    kf = math.factorial(k)
    return tuple(LambdaPoly((c / kf,)) if not isinstance(c, LambdaPoly) else c / kf for c in col)


def gf_coeff(kind: StirlingKind, n: int, k: int) -> LambdaPoly:
    """n! [t^n] of the k-th column generating function of ``kind``."""
    if n < 0 or k < 0 or k > n:
        return _ZERO
    return _gf_column(kind, k, n)[n]


# -- Bell polynomials ------------------------------------------------------

def bell_poly(n: int) -> BasisPoly:
    """φ_{n,λ}(x) = sum_k S_{2,λ}(n,k) x^k, in the monomial basis."""
    return BasisPoly(Basis.MONOMIAL, tuple(s2_lambda(n, k) for k in range(n + 1)))


def bell_number(n: int) -> LambdaPoly:
    total = _ZERO
    for k in range(n + 1):
        total = total + s2_lambda(n, k)
    return total


@lru_cache(maxsize=None)
def _bell_gf(x: Fraction, order: int) -> tuple:
    g = (ser.deg_exp(1, order) - 1).scale(x)
    return tuple(ser.exp_series(g).egf_coeffs())


def bell_gf_coeff(n: int, x) -> LambdaPoly:
    """n! [t^n] exp(x (e_λ(t) - 1))."""
    return _bell_gf(Fraction(x), n)[n]


# -- degenerate Laguerre polynomials --------------------------------------

def _laguerre_arg(x: Fraction, lam: Fraction) -> Fraction:
    d = 1 + lam * x
    if d == 0:
        raise ValueError(f"1 + λx vanishes at x={x}, λ={lam}")
    return x / d


def laguerre_deg(n: int, alpha, x, lam) -> Fraction:
    """Closed form sum_k C(n+α, n-k) (-1)^k <1>_{k,λ} / k! (x/(1+λx))^k."""
    alpha, x, lam = Fraction(alpha), Fraction(x), Fraction(lam)
    u = _laguerre_arg(x, lam)
    total = Fraction(0)
    for k in range(n + 1):
        term = binom_q(n + alpha, n - k) * grf(1, k, lam) * u**k / math.factorial(k)
        total += -term if k & 1 else term
    return total


def laguerre_gf_coeff(n: int, alpha, x, lam) -> Fraction:
    """[t^n] of (1-t)^{-α-1} e_λ^{-1}(t/(1-t) · x/(1+λx))."""
    alpha, x, lam = Fraction(alpha), Fraction(x), Fraction(lam)
    u = _laguerre_arg(x, lam)
    inner = (ser.variable(n) * ser.geometric(n)).scale(u)
    e_inv = ser.deg_exp(-1, n, lam=lam).compose(inner)
    prefactor = ser.binom_series(-alpha - 1, n).dilate(-1)
    return (prefactor * e_inv)[n]


def laguerre_classical(n: int, alpha, x) -> Fraction:
    """L_n^{(α)}(x) = sum_k C(n+α, n-k) (-x)^k / k!."""
    alpha, x = Fraction(alpha), Fraction(x)
    return sum(
        (binom_q(n + alpha, n - k) * (-x) ** k / math.factorial(k) for k in range(n + 1)),
        Fraction(0),
    )


__all__ = [
    "StirlingKind",
    "Triangle",
    "triangle",
    "s1_lambda",
    "s2_lambda",
    "unsigned_s1_lambda",
    "s1_classical",
    "s2_classical",
    "lah",
    "r_stirling2",
    "r_stirling2_alt",
    "r_stirling2_gf",
    "gf_coeff",
    "bell_poly",
    "bell_number",
    "bell_gf_coeff",
    "laguerre_deg",
    "laguerre_gf_coeff",
    "laguerre_classical",
]
