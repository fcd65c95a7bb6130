"""Truncated power series in t over Q or Q[λ].

Coefficients are stored in ordinary form, ``f[n] = [t^n] f``; use
:meth:`TruncatedSeries.egf` for the exponential normalization ``n! [t^n] f``.
The same class serves both coefficient rings: a series whose coefficients
include any :class:`LambdaPoly` is promoted to Q[λ] throughout.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .exactalg import LAM, LambdaPoly, binom_q, binom_sym, gff

__all__ = [
    "TruncatedSeries",
    "one",
    "variable",
    "geometric",
    "deg_exp",
    "deg_log",
    "binom_series",
    "exp_series",
]


def _normalize(coeffs) -> tuple:
    cs = list(coeffs)
    if any(isinstance(c, LambdaPoly) for c in cs):
        return tuple(c if isinstance(c, LambdaPoly) else LambdaPoly((c,)) for c in cs)
    return tuple(Fraction(c) for c in cs)


def _inv(c):
    if isinstance(c, LambdaPoly):
        return c.inverse()
    if not c:
        raise ZeroDivisionError("zero is not invertible")
    return 1 / Fraction(c)


class TruncatedSeries:
    """Immutable power series truncated after ``t**order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = list(coeffs)
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            cs = cs[: order + 1] + [0] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", _normalize(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def symbolic(self) -> bool:
        return isinstance(self.coeffs[0], LambdaPoly)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def egf(self, n: int):
        """n! [t^n]."""
        return self.coeffs[n] * math.factorial(n)

    def egf_coeffs(self) -> list:
        return [self.egf(n) for n in range(len(self.coeffs))]

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, order)

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction, LambdaPoly)):
            return TruncatedSeries((self.coeffs[0] + other,) + self.coeffs[1:])
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries([a * c for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LambdaPoly)):
            return self.scale(other)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        N = len(a)
        out = [a[0] * 0] * N
        for i in range(N):
            ai = a[i]
            if not ai:
                continue
            for j in range(N - i):
                if b[j]:
                    out[i + j] = out[i + j] + ai * b[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = one(self.order, like=self)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(tuple(hash(c) for c in self.coeffs))

    def __repr__(self) -> str:
        return "TruncatedSeries([" + ", ".join(str(c) for c in self.coeffs) + "])"

    # -- substitution ------------------------------------------------------
    def dilate(self, c) -> "TruncatedSeries":
        """f(c t)."""
        out, p = [], Fraction(1) if not isinstance(c, LambdaPoly) else LambdaPoly((1,))
        for a in self.coeffs:
            out.append(a * p)
            p = p * c
        return TruncatedSeries(out)

    def compose(self, g: "TruncatedSeries") -> "TruncatedSeries":
        """f(g(t)) by Horner's rule; ``g`` must have zero constant term."""
        self._check(g)
        if g.coeffs[0]:
            raise ValueError("inner series of a composition must have zero constant term")
        acc = TruncatedSeries([self.coeffs[-1]], self.order)
        for a in reversed(self.coeffs[:-1]):
            acc = acc * g + a
        return acc

    def reciprocal(self) -> "TruncatedSeries":
        a = self.coeffs
        inv0 = _inv(a[0])
        out = [inv0]
        for n in range(1, len(a)):
            s = a[0] * 0
            for i in range(1, n + 1):
                if a[i]:
                    s = s + a[i] * out[n - i]
            out.append(-s * inv0)
        return TruncatedSeries(out)

    def compositional_inverse(self) -> "TruncatedSeries":
        """h with f(h(t)) = t, solved order by order (back-substitution)."""
        a = self.coeffs
        if a[0]:
            raise ValueError("series must have zero constant term to be inverted")
        if len(a) < 2:
            return TruncatedSeries(a)
        inv1 = _inv(a[1])
        zero = a[0] * 0
        h = [zero, inv1]
        for n in range(2, len(a)):
            # [t^n] f(h) with h_n = 0; the missing term is a_1 * h_n
            trial = TruncatedSeries(h + [zero])
            c = TruncatedSeries(a[: n + 1]).compose(trial)[n]
            h.append(-c * inv1)
        return TruncatedSeries(h)

    def __call__(self, g: "TruncatedSeries") -> "TruncatedSeries":
        return self.compose(g)


# -- constructors ----------------------------------------------------------

def one(order: int, like: TruncatedSeries | None = None) -> TruncatedSeries:
    unit = LambdaPoly((1,)) if like is not None and like.symbolic else Fraction(1)
    return TruncatedSeries([unit], order)


def variable(order: int) -> TruncatedSeries:
    return TruncatedSeries([0, 1], order)


def geometric(order: int) -> TruncatedSeries:
    return TruncatedSeries([1] * (order + 1))


def deg_exp(x, order: int, lam=None) -> TruncatedSeries:
    """Degenerate exponential e_λ^x(t) = sum (x)_{n,λ} t^n / n!.

    With ``lam=None`` the coefficients live in Q[λ] (``x`` may be a scalar
    or a LambdaPoly); otherwise λ is fixed at the given rational value.
    """
    if lam is None:
        x = x if isinstance(x, LambdaPoly) else LambdaPoly((x,))
        out, term = [], LambdaPoly((1,))
        for n in range(order + 1):
            out.append(term / math.factorial(n))
            term = term * (x - LAM * n)
        return TruncatedSeries(out)
    if isinstance(x, LambdaPoly):
        x = x(lam)
    return TruncatedSeries([gff(x, n, lam) / math.factorial(n) for n in range(order + 1)])


def deg_log(order: int, lam=None) -> TruncatedSeries:
    """log_λ(1+t): [t^n] = prod_{j=1}^{n-1} (λ - j) / n! for n >= 1."""
    lam_ = LAM if lam is None else Fraction(lam)
    out = [lam_ * 0]
    c = lam_ * 0 + 1
    for n in range(1, order + 1):
        out.append(c / math.factorial(n))
        c = c * (lam_ - n)
    return TruncatedSeries(out)


def binom_series(alpha, order: int) -> TruncatedSeries:
    """(1+t)^alpha with [t^m] = alpha choose m."""
    if isinstance(alpha, LambdaPoly):
        return TruncatedSeries([binom_sym(alpha, m) for m in range(order + 1)])
    return TruncatedSeries([binom_q(alpha, m) for m in range(order + 1)])


def exp_series(g: TruncatedSeries) -> TruncatedSeries:
    """exp(g) = sum g^k / k! for ``g`` with zero constant term."""
    if g[0]:
        raise ValueError("exp_series needs a series with zero constant term")
    total = one(g.order, like=g)
    term = total
    for k in range(1, g.order + 1):
        term = (term * g).scale(Fraction(1, k))
        total = total + term
    return total
