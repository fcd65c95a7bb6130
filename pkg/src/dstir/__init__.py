"""Exact computation of degenerate Stirling-type numbers and their identities."""
from .exactalg import LAM, Basis, BasisPoly, Fraction, LambdaPoly, convert
from .series import TruncatedSeries
from .numbers import StirlingKind, Triangle, triangle

__version__ = "0.1.0"
