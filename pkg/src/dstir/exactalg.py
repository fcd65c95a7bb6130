"""Exact scalars, polynomials in the degeneracy parameter, and x-bases.

Scalars are :class:`fractions.Fraction`.  Elements of Q[λ] are
:class:`LambdaPoly`.  Polynomials in ``x`` are :class:`BasisPoly` values,
written over one of five graded bases (monomials and four factorial
families) and converted through the monomial basis.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

__all__ = [
    "Fraction",
    "LambdaPoly",
    "LAM",
    "Basis",
    "BasisPoly",
    "gff",
    "grf",
    "gff_sym",
    "rff_sym",
    "falling",
    "rising",
    "falling_sym",
    "binom_sym",
    "binom_q",
    "convert",
    "basis_matrix",
    "product_poly",
    "parse_rational",
    "format_rational",
]


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer string.  Decimals are rejected."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational of the form p/q: {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(p, q)


def format_rational(c: Scalar) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class LambdaPoly:
    """Immutable dense polynomial in λ with rational coefficients.

    ``coeffs[i]`` is the coefficient of λ**i.  Trailing zeros are trimmed,
    so the zero polynomial has an empty coefficient tuple and equality is
    coefficient-tuple equality.  Plain ints and Fractions mix freely with
    LambdaPoly in arithmetic and comparisons.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("LambdaPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: list) -> "LambdaPoly":
        # coeffs already Fractions
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = cls.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "LambdaPoly":
        return cls((c,))

    @classmethod
    def lam(cls) -> "LambdaPoly":
        return cls((0, 1))

    # -- structure ---------------------------------------------------------
    @property
    def degree(self) -> int:
        """λ-degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def flip(self) -> "LambdaPoly":
        """Substitute λ -> -λ."""
        return LambdaPoly._raw([-c if i & 1 else c for i, c in enumerate(self.coeffs)])

    def __call__(self, value):
        """Evaluate at a scalar or substitute another LambdaPoly (Horner)."""
        if isinstance(value, LambdaPoly):
            acc = LambdaPoly()
            for c in reversed(self.coeffs):
                acc = acc * value + c
            return acc
        value = Fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def inverse(self) -> "LambdaPoly":
        if len(self.coeffs) != 1:
            raise ZeroDivisionError(f"{self} is not a unit in Q[λ]")
        return LambdaPoly._raw([1 / self.coeffs[0]])

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, LambdaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LambdaPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly._raw([-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LambdaPoly()
            return LambdaPoly._raw([c * other for c in self.coeffs])
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LambdaPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return LambdaPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LambdaPoly):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of LambdaPoly by zero")
            inv = 1 / Fraction(other)
            return LambdaPoly._raw([c * inv for c in self.coeffs])
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = LambdaPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant)
        return hash(self.coeffs)

    # -- printing ----------------------------------------------------------
    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = format_rational(mag)
            else:
                var = "λ" if i == 1 else f"λ^{i}"
                body = var if mag == 1 else f"{format_rational(mag)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LambdaPoly({str(self)!r})"


LAM = LambdaPoly.lam()


def _as_poly(x) -> LambdaPoly:
    return x if isinstance(x, LambdaPoly) else LambdaPoly((x,))


# -- factorial products ----------------------------------------------------

def gff(x: Scalar, n: int, lam: Scalar) -> Fraction:
    """Generalized falling factorial x(x-lam)...(x-(n-1)lam) at rational lam."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x, lam = Fraction(x), Fraction(lam)
    out = Fraction(1)
    for j in range(n):
        out *= x - j * lam
    return out


def grf(x: Scalar, n: int, lam: Scalar) -> Fraction:
    """Generalized rising factorial x(x+lam)...(x+(n-1)lam)."""
    return gff(x, n, -Fraction(lam))


def gff_sym(r, n: int) -> LambdaPoly:
    """(r)_{n,λ} as an element of Q[λ]; ``r`` may itself be a LambdaPoly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    r = _as_poly(r)
    out = LambdaPoly((1,))
    for j in range(n):
        out = out * (r - LAM * j)
    return out


def rff_sym(r, n: int) -> LambdaPoly:
    """<r>_{n,λ} = r(r+λ)...(r+(n-1)λ) in Q[λ]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    r = _as_poly(r)
    out = LambdaPoly((1,))
    for j in range(n):
        out = out * (r + LAM * j)
    return out


def falling(x: Scalar, n: int) -> Fraction:
    return gff(x, n, 1)


def rising(x: Scalar, n: int) -> Fraction:
    return gff(x, n, -1)


def falling_sym(alpha, m: int) -> LambdaPoly:
    """Classical falling factorial alpha(alpha-1)...(alpha-m+1) in Q[λ]."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    alpha = _as_poly(alpha)
    out = LambdaPoly((1,))
    for j in range(m):
        out = out * (alpha - j)
    return out


def binom_sym(alpha, m: int) -> LambdaPoly:
    """Generalized binomial coefficient alpha choose m, alpha in Q[λ]."""
    return falling_sym(alpha, m) / math.factorial(m)


def binom_q(a: Scalar, m: int) -> Fraction:
    """Rational-top binomial coefficient; zero for negative ``m``."""
    if m < 0:
        return Fraction(0)
    return falling(a, m) / math.factorial(m)


# -- bases in x ------------------------------------------------------------

class Basis(enum.Enum):
    MONOMIAL = "monomial"            # x^k
    FALLING = "falling"              # (x)_k
    RISING = "rising"                # <x>_k
    FALLING_LAMBDA = "falling_lambda"  # (x)_{k,λ}
    RISING_LAMBDA = "rising_lambda"    # <x>_{k,λ}


def _basis_root(basis: Basis, j: int) -> LambdaPoly:
    # k-th element is prod_{j<k} (x - root_j)
    if basis is Basis.FALLING:
        return LambdaPoly((j,))
    if basis is Basis.RISING:
        return LambdaPoly((-j,))
    if basis is Basis.FALLING_LAMBDA:
        return LAM * j
    if basis is Basis.RISING_LAMBDA:
        return LAM * (-j)
    return LambdaPoly()


def product_poly(roots: Sequence) -> tuple:
    """Monomial coefficients (in x) of prod (x - root) over Q[λ]."""
    coeffs = [LambdaPoly((1,))]
    for root in roots:
        root = _as_poly(root)
        nxt = [LambdaPoly()] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - root * c
        coeffs = nxt
    return tuple(coeffs)


@lru_cache(maxsize=None)
def _to_monomial(basis: Basis, size: int) -> tuple:
    rows = []
    for k in range(size):
        row = product_poly([_basis_root(basis, j) for j in range(k)])
        rows.append(row)
    return tuple(rows)


@lru_cache(maxsize=None)
def _from_monomial(basis: Basis, size: int) -> tuple:
    # x^j = e_j - sum_{i<j} T[j][i] x^i, expanded recursively
    T = _to_monomial(basis, size)
    U = []
    for j in range(size):
        row = [LambdaPoly()] * size
        row[j] = LambdaPoly((1,))
        for i in range(j):
            t = T[j][i]
            if not t:
                continue
            for k in range(i + 1):
                if U[i][k]:
                    row[k] = row[k] - t * U[i][k]
        U.append(tuple(row))
    return tuple(U)


def basis_matrix(source: Basis, target: Basis, size: int) -> tuple:
    """Matrix M with source element k = sum_j M[k][j] * target element j."""
    return tuple(
        convert(BasisPoly.unit(source, k), target).padded(size) for k in range(size)
    )


@dataclass(frozen=True)
class BasisPoly:
    """Polynomial in x over one of the five bases, coefficients in Q[λ]."""

    basis: Basis
    coeffs: tuple

    def __post_init__(self):
        cs = [_as_poly(c) for c in self.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def unit(cls, basis: Basis, k: int) -> "BasisPoly":
        return cls(basis, (LambdaPoly(),) * k + (LambdaPoly((1,)),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def padded(self, size: int) -> tuple:
        return self.coeffs + (LambdaPoly(),) * (size - len(self.coeffs))

    def convert(self, target: Basis) -> "BasisPoly":
        return convert(self, target)

    def __add__(self, other: "BasisPoly") -> "BasisPoly":
        if other.basis is not self.basis:
            other = convert(other, self.basis)
        size = max(len(self.coeffs), len(other.coeffs))
        a, b = self.padded(size), other.padded(size)
        return BasisPoly(self.basis, tuple(x + y for x, y in zip(a, b)))

    def scale(self, c) -> "BasisPoly":
        return BasisPoly(self.basis, tuple(x * c for x in self.coeffs))

    def evaluate(self, x: Scalar, lam: Scalar | None = None):
        """Value at rational x; exact in Q[λ] unless ``lam`` is given."""
        mono = convert(self, Basis.MONOMIAL).coeffs
        x = Fraction(x)
        acc = LambdaPoly()
        for c in reversed(mono):
            acc = acc * x + c
        return acc if lam is None else acc(lam)


def convert(p: BasisPoly, target: Basis) -> BasisPoly:
    """Re-express ``p`` in ``target``, going through the monomial basis."""
    if p.basis is target:
        return p
    size = len(p.coeffs)
    if size == 0:
        return BasisPoly(target, ())
    mono = [LambdaPoly()] * size
    if p.basis is Basis.MONOMIAL:
        mono = list(p.coeffs)
    else:
        T = _to_monomial(p.basis, size)
        for k, c in enumerate(p.coeffs):
            if c:
                for i in range(k + 1):
                    if T[k][i]:
                        mono[i] = mono[i] + c * T[k][i]
    if target is Basis.MONOMIAL:
        return BasisPoly(target, tuple(mono))
    U = _from_monomial(target, size)
    out = [LambdaPoly()] * size
    for j, m in enumerate(mono):
        if m:
            for k in range(j + 1):
                if U[j][k]:
                    out[k] = out[k] + m * U[j][k]
    return BasisPoly(target, tuple(out))
