"""Exact weighted Sylvester sums over the gaps of a two-generator semigroup."""
from .scalar import QuadRational, Scalar, format_scalar, parse_scalar
from .semigroup import CoprimePair, frobenius_number, gap_polynomial, gap_set
from .sums import SumResult, alternating_sum, sylvester_sum

__all__ = [
    "CoprimePair",
    "QuadRational",
    "Scalar",
    "SumResult",
    "alternating_sum",
    "format_scalar",
    "frobenius_number",
    "gap_polynomial",
    "gap_set",
    "parse_scalar",
    "sylvester_sum",
]
