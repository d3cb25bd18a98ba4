"""Exact scalars: rationals and elements of a quadratic field Q(sqrt(d)).

Rationals are plain :class:`fractions.Fraction` values.  A
:class:`QuadRational` holds ``rational + surd*sqrt(radicand)``; any
arithmetic result whose surd part vanishes collapses back to a Fraction,
so a Fraction is the single canonical form of every rational value.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt, lcm
from typing import Union

__all__ = [
    "QuadRational",
    "Scalar",
    "ScalarError",
    "IncompatibleRadicands",
    "as_scalar",
    "conj",
    "format_decimal",
    "format_scalar",
    "from_integral",
    "integral_form",
    "is_one",
    "is_zero",
    "norm",
    "parse_scalar",
    "radicand_of",
    "scalar_arith",
    "scalar_pow",
]


class ScalarError(ValueError):
    """Malformed scalar text or an invalid scalar construction."""


class IncompatibleRadicands(ScalarError):
    pass


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class QuadRational:
    """``rational + surd*sqrt(radicand)`` with exact rational parts.

    The radicand is any nonzero integer that is not a perfect square; it is
    not reduced to its squarefree part, so ``sqrt(8)`` and ``2*sqrt(2)`` live
    in different (incompatible) representations.
    """

    __slots__ = ("_rat", "_surd", "_d")

    def __init__(self, rational, surd, radicand: int) -> None:
        radicand = int(radicand)
        if radicand == 0 or _is_square(radicand):
            raise ScalarError(f"radicand {radicand} is zero or a perfect square")
        self._rat = _frac(rational)
        self._surd = _frac(surd)
        self._d = radicand

    @property
    def rational_part(self) -> Fraction:
        return self._rat

    @property
    def surd_part(self) -> Fraction:
        return self._surd

    @property
    def radicand(self) -> int:
        return self._d

    @classmethod
    def make(cls, rational, surd, radicand: int) -> Scalar:
        """Build a canonical scalar: a Fraction when ``surd`` is zero."""
        if surd == 0:
            return _frac(rational)
        return cls(rational, surd, radicand)

    def _coerce(self, other) -> QuadRational | None:
        if isinstance(other, QuadRational):
            if other._d != self._d:
                raise IncompatibleRadicands(
                    f"cannot mix sqrt({self._d}) and sqrt({other._d})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadRational(other, 0, self._d)
        return None

    def conjugate(self) -> QuadRational:
        return QuadRational(self._rat, -self._surd, self._d)

    def norm(self) -> Fraction:
        return self._rat * self._rat - self._d * self._surd * self._surd

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRational.make(self._rat + o._rat, self._surd + o._surd, self._d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRational.make(self._rat - o._rat, self._surd - o._surd, self._d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadRational.make(self._rat * other, self._surd * other, self._d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        x, y, u, v = self._rat, self._surd, o._rat, o._surd
        return QuadRational.make(x * u + self._d * y * v, x * v + y * u, self._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return QuadRational.make(self._rat / other, self._surd / other, self._d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self._inverse()

    def _inverse(self) -> Scalar:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return QuadRational.make(self._rat / n, -self._surd / n, self._d)

    def __neg__(self) -> QuadRational:
        return QuadRational(-self._rat, -self._surd, self._d)

    def __pos__(self) -> QuadRational:
        return self

    def __pow__(self, n: int) -> Scalar:
        if not isinstance(n, int):
            return NotImplemented
        base: Scalar = self
        if n < 0:
            base = self._inverse()
            n = -n
        result: Scalar = Fraction(1)
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadRational):
            return (self._rat, self._surd, self._d) == (other._rat, other._surd, other._d)
        if isinstance(other, (int, Fraction)):
            # canonical QuadRationals always carry a nonzero surd part
            return self._surd == 0 and self._rat == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._surd == 0:
            return hash(self._rat)
        return hash((self._rat, self._surd, self._d))

    def __bool__(self) -> bool:
        return bool(self._rat) or bool(self._surd)

    def __repr__(self) -> str:
        return f"QuadRational({self._rat!r}, {self._surd!r}, {self._d})"

    def __str__(self) -> str:
        return format_scalar(self)


Scalar = Union[Fraction, QuadRational]


def as_scalar(x) -> Scalar:
    if isinstance(x, QuadRational):
        return x if x.surd_part != 0 else x.rational_part
    if isinstance(x, (Fraction, int)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


def radicand_of(x: Scalar) -> int | None:
    return x.radicand if isinstance(x, QuadRational) else None


def is_zero(x: Scalar) -> bool:
    return not x


def is_one(x: Scalar) -> bool:
    return x == 1


def conj(x: Scalar) -> Scalar:
    return x.conjugate() if isinstance(x, QuadRational) else x


def norm(x: Scalar) -> Fraction:
    return x.norm() if isinstance(x, QuadRational) else x * x


_OPS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "div": lambda x, y: x / y,
}


def scalar_arith(op: str, x: Scalar, y: Scalar | None = None) -> Scalar:
    if op == "neg":
        return as_scalar(-x)
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if op == "div" and is_zero(y):
        raise ZeroDivisionError("division by zero")
    return as_scalar(fn(x, y))


def scalar_pow(x: Scalar, n: int) -> Scalar:
    if n < 0 and is_zero(x):
        raise ZeroDivisionError("zero base with negative exponent")
    return as_scalar(x**n)


# Integral form: x == (re + im*sqrt(d)) / den with integers and den > 0.
# Lets long sums run on plain ints instead of normalizing a Fraction per step.

def integral_form(x: Scalar) -> tuple[int, int, int, int]:
    if isinstance(x, QuadRational):
        p, q = x.rational_part, x.surd_part
        den = lcm(p.denominator, q.denominator)
        return (p.numerator * (den // p.denominator),
                q.numerator * (den // q.denominator), x.radicand, den)
    x = Fraction(x)
    return x.numerator, 0, 0, x.denominator


def from_integral(re: int, im: int, d: int, den: int) -> Scalar:
    if im == 0:
        return Fraction(re, den)
    return QuadRational(Fraction(re, den), Fraction(im, den), d)


# Text format.

_RAT = r"\d+(?:/\d+)?"
_INT_RE = re.compile(rf"([+-]?)({_RAT})")
_QUAD_RE = re.compile(
    rf"(?:(?P<rat>[+-]?{_RAT})(?=[+-]))?"
    rf"(?P<sign>[+-])?(?P<coef>{_RAT})?\*?sqrt\((?P<d>[+-]?\d+)\)"
)


def _parse_rat(sign: str, body: str) -> Fraction:
    num, _, den = body.partition("/")
    if den and int(den) == 0:
        raise ScalarError(f"zero denominator in {body!r}")
    value = Fraction(int(num), int(den) if den else 1)
    return -value if sign == "-" else value


def parse_scalar(text: str) -> Scalar:
    """Parse ``p``, ``p/q`` or ``[p/q+-]r/s*sqrt(d)`` into an exact scalar.

    Whitespace is ignored.  ``sqrt(d)`` alone, ``-sqrt(2)`` and
    ``1+sqrt(2)`` are accepted; the radicand must be nonzero and not a
    perfect square.
    """
    s = "".join(str(text).split())
    m = _INT_RE.fullmatch(s)
    if m:
        return _parse_rat(m.group(1), m.group(2))
    m = _QUAD_RE.fullmatch(s)
    if not m:
        raise ScalarError(f"cannot parse scalar {text!r}")
    rat = Fraction(0)
    if m.group("rat"):
        r = m.group("rat")
        sign, body = (r[0], r[1:]) if r[0] in "+-" else ("", r)
        rat = _parse_rat(sign, body)
    coef = _parse_rat(m.group("sign") or "", m.group("coef") or "1")
    d = int(m.group("d"))
    if d == 0 or _is_square(d):
        raise ScalarError(f"radicand {d} is zero or a perfect square")
    return QuadRational.make(rat, coef, d)


def _format_rat(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(x: Scalar) -> str:
    """Canonical text: ``p``, ``p/q`` or ``p/q+r/s*sqrt(d)``."""
    if isinstance(x, QuadRational) and x.surd_part != 0:
        surd = x.surd_part
        sign = "-" if surd < 0 else "+"
        return f"{_format_rat(x.rational_part)}{sign}{_format_rat(abs(surd))}*sqrt({x.radicand})"
    return _format_rat(Fraction(as_scalar(x)))


def _round_div(num: int, den: int) -> int:
    """num/den rounded to nearest, ties to even (den > 0)."""
    q, r = divmod(num, den)
    if 2 * r > den or (2 * r == den and q % 2):
        q += 1
    return q


def _fixed(units: int, digits: int) -> str:
    sign = "-" if units < 0 else ""
    units = abs(units)
    if digits == 0:
        return f"{sign}{units}"
    s = str(units).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def _round_real(re: int, im: int, d: int, den: int, digits: int) -> int:
    """round((re + im*sqrt(d)) / den * 10**digits) for d > 0 non-square."""
    scale = 10**digits
    if im == 0:
        return _round_div(re * scale, den)
    # floor(k + t) with t irrational equals floor(k + floor(t)); no ties occur
    t2 = 4 * im * im * scale * scale * d  # (2*im*scale*sqrt(d))**2
    floor_2u = isqrt(t2) if im > 0 else -isqrt(t2) - 1
    return (2 * re * scale + den + floor_2u) // (2 * den)


def format_decimal(x: Scalar, digits: int) -> str:
    """Correctly rounded fixed-point approximation with ``digits`` decimals."""
    re, im, d, den = integral_form(x)
    if im == 0 or d > 0:
        return _fixed(_round_real(re, im, d, den, digits), digits)
    real = _fixed(_round_real(re, 0, 0, den, digits), digits)
    imag = _fixed(_round_real(0, im, -d, den, digits), digits)
    if imag.startswith("-"):
        return f"{real}-{imag[1:]}i"
    return f"{real}+{imag}i"
