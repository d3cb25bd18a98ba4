"""Gaps of the numerical semigroup generated by two coprime integers."""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .scalar import Scalar, as_scalar, from_integral, integral_form

__all__ = [
    "CoprimePair",
    "GapPolynomial",
    "GapSet",
    "falling_factorial",
    "frobenius_number",
    "gap_polynomial",
    "gap_set",
    "gh_polynomials",
    "poly_derivative_eval",
    "poly_mul",
    "representation_count",
]


@dataclass(frozen=True)
class CoprimePair:
    a: int
    b: int

    def __post_init__(self) -> None:
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise TypeError("a and b must be integers")
        if self.a < 1 or self.b < 1:
            raise ValueError(f"a and b must be positive, got ({self.a}, {self.b})")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"gcd({self.a}, {self.b}) = {gcd(self.a, self.b)}, expected 1")

    @property
    def degenerate(self) -> bool:
        return self.a == 1 or self.b == 1

    def swapped(self) -> CoprimePair:
        return CoprimePair(self.b, self.a)


@dataclass(frozen=True)
class GapSet:
    pair: CoprimePair
    gaps: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.gaps)

    def __iter__(self):
        return iter(self.gaps)

    def __contains__(self, n: object) -> bool:
        i = bisect_left(self.gaps, n)  # type: ignore[arg-type]
        return i < len(self.gaps) and self.gaps[i] == n


@dataclass(frozen=True)
class GapPolynomial:
    pair: CoprimePair
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def representation_count(n: int, pair: CoprimePair) -> int:
    """Number of (s, t) >= 0 with s*a + t*b == n."""
    if n < 0:
        return 0
    a, b = pair.a, pair.b
    return sum(1 for s in range(n // a + 1) if (n - s * a) % b == 0)


def gap_set(pair: CoprimePair) -> GapSet:
    """Nonrepresentable positive integers, by residue class mod a.

    For r = n mod a, take s in [0, a) with b*s = r (mod a).  Then b*s is the
    least representable number in the class, and the gaps of the class are
    a*k + r for 0 <= k < (b*s - r)/a.
    """
    a, b = pair.a, pair.b
    if pair.degenerate:
        return GapSet(pair, ())
    b_inv = pow(b, -1, a)
    gaps: list[int] = []
    for r in range(1, a):
        s = r * b_inv % a
        gaps.extend(range(r, b * s, a))
    gaps.sort()
    return GapSet(pair, tuple(gaps))


def frobenius_number(pair: CoprimePair) -> int:
    if pair.degenerate:
        return -1
    return (pair.a - 1) * (pair.b - 1) - 1


def gap_polynomial(pair: CoprimePair) -> GapPolynomial:
    """Coefficients c_n = 1 - r(n) for n = 0 .. ab - a - b (empty if degenerate)."""
    if pair.degenerate:
        return GapPolynomial(pair, ())
    coeffs = [0] * (frobenius_number(pair) + 1)
    for n in gap_set(pair).gaps:
        coeffs[n] = 1
    return GapPolynomial(pair, tuple(coeffs))


def gh_polynomials(pair: CoprimePair) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Numerator g and denominator h with f = g/h, as coefficient tuples.

    Each block (x^(ak) - x^k)/(x - 1) is x^k + ... + x^(ak-1).
    """
    a, b = pair.a, pair.b
    if a < 2 or b < 2:
        raise ValueError("g and h need a, b >= 2")
    g = [0] * (a * (b - 1))
    for k in range(1, b):
        for n in range(k, a * k):
            g[n] += 1
    h = (1,) * b
    return tuple(g), h


def poly_mul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return tuple(out)


def falling_factorial(n: int, k: int) -> int:
    out = 1
    for j in range(k):
        out *= n - j
    return out


def _zmul(p: tuple[int, int], q: tuple[int, int], d: int) -> tuple[int, int]:
    return p[0] * q[0] + d * p[1] * q[1], p[0] * q[1] + p[1] * q[0]


class _IntegralHorner:
    """Evaluates sum w[n] alpha^(n-lo) den^(hi-1-n) over [lo, hi) on integers.

    alpha = x + y*sqrt(d) is kept as an integer pair.  Ranges are split in
    halves and recombined as left*den^len(right) + alpha^len(left)*right, so
    the big multiplications happen between operands of similar size.
    """

    LEAF = 32

    def __init__(self, w: Sequence[int], x: int, y: int, d: int, den: int) -> None:
        self.w, self.alpha, self.d, self.den = w, (x, y), d, den
        self._apow: dict[int, tuple[int, int]] = {0: (1, 0), 1: (x, y)}
        self._dpow: dict[int, int] = {}

    def alpha_pow(self, e: int) -> tuple[int, int]:
        if e not in self._apow:
            half = self.alpha_pow(e // 2)
            sq = _zmul(half, half, self.d)
            self._apow[e] = _zmul(sq, self.alpha, self.d) if e % 2 else sq
        return self._apow[e]

    def den_pow(self, e: int) -> int:
        if e not in self._dpow:
            self._dpow[e] = self.den**e
        return self._dpow[e]

    def __call__(self, lo: int, hi: int) -> tuple[int, int]:
        if hi - lo <= self.LEAF:
            x, y = self.alpha
            re = im = 0
            dp = 1
            for n in range(hi - 1, lo - 1, -1):
                if y:
                    re, im = re * x + self.d * im * y, re * y + im * x
                else:
                    re *= x
                if self.w[n]:
                    re += self.w[n] * dp
                dp *= self.den
            return re, im
        mid = (lo + hi) // 2
        left, right = self(lo, mid), self(mid, hi)
        q = self.den_pow(hi - mid)
        ar = _zmul(self.alpha_pow(mid - lo), right, self.d)
        return left[0] * q + ar[0], left[1] * q + ar[1]


def poly_derivative_eval(p: Sequence[int], k: int, lam) -> Scalar:
    """Exact value of the k-th derivative of ``sum p[n] x^n`` at ``lam``.

    Horner's rule over the weights p[n] * n(n-1)...(n-k+1), run on integers
    with lam = alpha/den and the denominator den**(deg-k) restored at the end.
    """
    lam = as_scalar(lam)
    deg = len(p) - 1
    if deg < k:
        return Fraction(0)
    x, y, d, den = integral_form(lam)
    weights = [c * falling_factorial(n, k) if c else 0 for n, c in enumerate(p)]
    re, im = _IntegralHorner(weights, x, y, d, den)(k, deg + 1)
    return from_integral(re, im, d, den ** (deg - k))
