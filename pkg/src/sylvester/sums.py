"""Weighted Sylvester sums ``sum over gaps n of lam**(n-1) * n**m``.

Several independent routes compute the same number: closed forms in the
two generators, derivatives of the gap polynomial, Apostol-Bernoulli
expansions and direct enumeration.  :func:`sylvester_sum` dispatches
between them and, with ``method="all"``, insists that they agree exactly.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .scalar import Scalar, as_scalar, format_scalar, from_integral, integral_form, is_one, is_zero
from .semigroup import CoprimePair, gap_polynomial, gap_set, poly_derivative_eval
from .special import apostol_bernoulli, bernoulli, stirling2_row

__all__ = [
    "DEFAULT_ORACLE_CAP",
    "METHODS",
    "AuxiliaryX",
    "DegeneratePower",
    "MethodDisagreement",
    "OracleCapExceeded",
    "SumResult",
    "alternating_sum",
    "applicable_methods",
    "auto_method",
    "auxiliary_x",
    "sum_classical_lambda1",
    "sum_derivative",
    "sum_oracle",
    "sum_s2_closed",
    "sum_theorem1",
    "sum_theorem_m",
    "sum_theorem_m1",
    "sylvester_sum",
]

DEFAULT_ORACLE_CAP = 10**6

METHODS = (
    "theorem1",
    "s2_closed",
    "derivative",
    "theorem_m",
    "theorem_m1",
    "classical_lambda1",
    "oracle",
)


class DegeneratePower(ValueError):
    """lam**a or lam**b equals 1 where a formula divides by it minus one."""


class OracleCapExceeded(ValueError):
    pass


class MethodDisagreement(ArithmeticError):
    def __init__(self, values: dict[str, Scalar], request: tuple) -> None:
        self.values = values
        self.request = request
        shown = ", ".join(f"{k}={format_scalar(v)}" for k, v in values.items())
        super().__init__(f"methods disagree for (a, b, m, lambda)={request}: {shown}")


@dataclass(frozen=True)
class AuxiliaryX:
    X1: Scalar
    X2: Scalar


@dataclass(frozen=True)
class SumResult:
    value: Scalar
    method_used: str
    elapsed: float  # seconds
    cross_checked: bool
    values: dict[str, Scalar] = field(default_factory=dict)


def _pair(pair) -> CoprimePair:
    return pair if isinstance(pair, CoprimePair) else CoprimePair(*pair)


def _lam(lam) -> Scalar:
    lam = as_scalar(lam)
    if is_zero(lam):
        raise ValueError("lambda must be nonzero")
    return lam


def _check_m(m: int) -> None:
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")


def _nondegenerate_powers(pair: CoprimePair, lam: Scalar) -> tuple[Scalar, Scalar]:
    la, lb = lam**pair.a, lam**pair.b
    bad = [f"lambda^{e} = 1" for e, v in (("a", la), ("b", lb)) if is_one(v)]
    if bad:
        raise DegeneratePower(" and ".join(bad) + f" for (a, b) = ({pair.a}, {pair.b})")
    return la, lb


def auxiliary_x(pair, lam) -> AuxiliaryX:
    pair, lam = _pair(pair), _lam(lam)
    a, b = pair.a, pair.b
    la, lb = lam**a, lam**b
    lab = la * lb
    return AuxiliaryX(
        as_scalar((a + b) * lab - a * la - b * lb),
        as_scalar((a + b) ** 2 * lab - a * a * la - b * b * lb),
    )


def sum_oracle(pair, m: int, lam, cap: int = DEFAULT_ORACLE_CAP) -> Scalar:
    """Direct summation over the gap set.

    With lam = alpha/den the terms are accumulated as one integer numerator
    over den**(n-1), scaling the running total up as n grows.
    """
    pair, lam = _pair(pair), _lam(lam)
    _check_m(m)
    if pair.a * pair.b > cap:
        raise OracleCapExceeded(f"ab = {pair.a * pair.b} exceeds oracle cap {cap}")
    x, y, d, den = integral_form(lam)
    re = im = 0
    pre, pim = 1, 0  # alpha**(n-1)
    last = 1
    steps: dict[int, tuple[int, int, int]] = {}
    for n in gap_set(pair).gaps:
        delta = n - last
        if delta:
            if delta not in steps:
                sx, sy = _zpow(x, y, d, delta)
                steps[delta] = (sx, sy, den**delta)
            sx, sy, q = steps[delta]
            re, im = re * q, im * q
            if sy:
                pre, pim = pre * sx + d * pim * sy, pre * sy + pim * sx
            else:
                pre, pim = pre * sx, pim * sx
            last = n
        w = n**m
        re += w * pre
        im += w * pim
    return from_integral(re, im, d, den ** (last - 1))


def _zpow(x: int, y: int, d: int, e: int) -> tuple[int, int]:
    rx, ry = 1, 0
    for _ in range(e):
        rx, ry = rx * x + d * ry * y, rx * y + ry * x
    return rx, ry


def sum_theorem1(pair, lam) -> Scalar:
    """Closed form for m = 1; needs lam**a != 1 and lam**b != 1."""
    pair, lam = _pair(pair), _lam(lam)
    a, b = pair.a, pair.b
    la, lb = _nondegenerate_powers(pair, lam)
    lab = lam ** (a * b)
    x1 = (a + b) * la * lb - a * la - b * lb
    da, db = la - 1, lb - 1
    return as_scalar(
        1 / (lam - 1) ** 2
        + a * b * lab / (lam * da * db)
        - (lab - 1) * x1 / (lam * da**2 * db**2)
    )


def sum_s2_closed(pair, lam) -> Scalar:
    """Closed form for m = 2, written with the auxiliary X1, X2 values.

    Obtained as lam*f''(lam) + f'(lam) from the m = 1 closed form.
    """
    pair, lam = _pair(pair), _lam(lam)
    a, b = pair.a, pair.b
    la, lb = _nondegenerate_powers(pair, lam)
    lab = lam ** (a * b)
    aux = auxiliary_x(pair, lam)
    x1, x2 = aux.X1, aux.X2
    da, db = la - 1, lb - 1
    dd = da * db
    return as_scalar(
        -(lam + 1) / (lam - 1) ** 3
        + a * a * b * b * lab / (lam * dd)
        - (2 * a * b * lab * x1 + (lab - 1) * x2) / (lam * dd**2)
        + 2 * (lab - 1) * x1 * x1 / (lam * dd**3)
    )


def stirling_weights(m: int) -> tuple[int, ...]:
    """Coefficients of lam**(k-1) f^(k)(lam), k = 1..m, in the m-th sum."""
    return stirling2_row(m)[1:]


def sum_derivative(pair, m: int, lam) -> Scalar:
    """Sum through derivatives of the gap polynomial f.

    n**m = sum_k {m over k} n(n-1)...(n-k+1), hence the m-th sum equals
    sum_k {m over k} lam**(k-1) f^(k)(lam); for m = 0 it is f(lam)/lam.
    """
    pair, lam = _pair(pair), _lam(lam)
    _check_m(m)
    f = gap_polynomial(pair).coefficients
    if m == 0:
        return as_scalar(poly_derivative_eval(f, 0, lam) / lam)
    total: Scalar = Fraction(0)
    lam_pow: Scalar = Fraction(1)
    for k, w in enumerate(stirling_weights(m), start=1):
        if w:
            total = total + w * lam_pow * poly_derivative_eval(f, k, lam)
        lam_pow = lam_pow * lam
    return as_scalar(total)


def sum_theorem_m(pair, m: int, lam) -> Scalar:
    """Apostol-Bernoulli expansion valid when lam**a != 1 and lam**b != 1."""
    pair, lam = _pair(pair), _lam(lam)
    _check_m(m)
    a, b = pair.a, pair.b
    la, lb = _nondegenerate_powers(pair, lam)
    A = apostol_bernoulli(m + 2, la)
    B = apostol_bernoulli(m + 2, lb)
    own = apostol_bernoulli(m + 1, lam)

    def inner(ell: int) -> Scalar:
        # sum_i C(ell+2, i) a^(i-1) b^(ell-i+1) A_i B_(ell-i+2); i = 0 and
        # i = ell+2 drop out because A_0 = B_0 = 0
        s: Scalar = Fraction(0)
        for i in range(1, ell + 2):
            s = s + comb(ell + 2, i) * a ** (i - 1) * b ** (ell - i + 1) * A[i] * B[ell - i + 2]
        return s

    rows = [inner(ell) for ell in range(m + 1)]
    first: Scalar = Fraction(0)
    for ell, row in enumerate(rows):
        first = first + Fraction(comb(m, ell) * (a * b) ** (m - ell), (ell + 1) * (ell + 2)) * row
    second = Fraction(1, (m + 1) * (m + 2)) * rows[m]
    return as_scalar(
        lam ** (a * b - 1) * first
        - second / lam
        - own[m + 1] / ((m + 1) * lam)
    )


def sum_theorem_m1(pair, m: int, lam) -> Scalar:
    """Expansion for exactly one of lam**a, lam**b equal to 1.

    When lam**b == 1 the generators are swapped first (the sum is symmetric).
    """
    pair, lam = _pair(pair), _lam(lam)
    _check_m(m)
    if is_one(lam):
        raise ValueError("theorem_m1 needs lambda != 1")
    a, b = pair.a, pair.b
    la_one, lb_one = is_one(lam**a), is_one(lam**b)
    assert not (la_one and lb_one), "lam**a == lam**b == 1 forces lam == 1 for coprime a, b"
    if not (la_one or lb_one):
        raise DegeneratePower(
            f"neither lambda^a nor lambda^b equals 1 for (a, b) = ({a}, {b}); use theorem_m"
        )
    if lb_one:
        a, b = b, a
    Bc = bernoulli(m + 1)
    AB = apostol_bernoulli(m + 1, lam**b)
    own = apostol_bernoulli(m + 1, lam)
    total: Scalar = Fraction(0)
    for ell in range(1, m + 2):  # ell = 0 only meets AB[0] = 0
        row: Scalar = Fraction(0)
        for i in range(ell):  # i = ell meets AB[0] = 0
            if Bc[i]:
                row = row + comb(ell, i) * a**i * b ** (m - i + 1) * Bc[i] * AB[ell - i]
        total = total + Fraction(comb(m + 1, ell) * a ** (m - ell + 1), m - ell + 2) * row
    return as_scalar(total / ((m + 1) * lam) - own[m + 1] / ((m + 1) * lam))


def sum_classical_lambda1(pair, m: int) -> Fraction:
    pair = _pair(pair)
    a, b = pair.a, pair.b
    if m == 0:
        return Fraction((a - 1) * (b - 1), 2)
    if m == 1:
        return Fraction((a - 1) * (b - 1) * (2 * a * b - a - b - 1), 12)
    if m == 2:
        return Fraction((a - 1) * (b - 1) * a * b * (a * b - a - b), 12)
    raise ValueError("classical lambda = 1 formulas cover m <= 2 only; use derivative or oracle")


def applicable_methods(pair, m: int, lam, cap: int = DEFAULT_ORACLE_CAP) -> list[str]:
    pair, lam = _pair(pair), _lam(lam)
    _check_m(m)
    out: list[str] = []
    if is_one(lam):
        if m <= 2:
            out.append("classical_lambda1")
    else:
        la_one, lb_one = is_one(lam**pair.a), is_one(lam**pair.b)
        if la_one or lb_one:
            out.append("theorem_m1")
        else:
            if m == 1:
                out.append("theorem1")
            if m == 2:
                out.append("s2_closed")
            out.append("theorem_m")
    out.append("derivative")
    if pair.a * pair.b <= cap:
        out.append("oracle")
    return out


def auto_method(pair, m: int, lam) -> str:
    pair, lam = _pair(pair), _lam(lam)
    if is_one(lam):
        return "classical_lambda1" if m <= 2 else "derivative"
    if is_one(lam**pair.a) or is_one(lam**pair.b):
        return "theorem_m1"
    if m >= 2:
        return "theorem_m"
    return "theorem1" if m == 1 else "derivative"


def run_method(method: str, pair, m: int, lam, cap: int = DEFAULT_ORACLE_CAP) -> Scalar:
    pair, lam = _pair(pair), _lam(lam)
    if method == "oracle":
        return sum_oracle(pair, m, lam, cap=cap)
    if method == "derivative":
        return sum_derivative(pair, m, lam)
    if method == "theorem_m":
        return sum_theorem_m(pair, m, lam)
    if method == "theorem_m1":
        return sum_theorem_m1(pair, m, lam)
    if method == "theorem1":
        if m != 1:
            raise ValueError("theorem1 computes m = 1 only")
        return sum_theorem1(pair, lam)
    if method == "s2_closed":
        if m != 2:
            raise ValueError("s2_closed computes m = 2 only")
        return sum_s2_closed(pair, lam)
    if method == "classical_lambda1":
        if not is_one(lam):
            raise ValueError("classical_lambda1 needs lambda = 1")
        return sum_classical_lambda1(pair, m)
    raise ValueError(f"unknown method {method!r}; expected auto, all or one of {', '.join(METHODS)}")


def sylvester_sum(pair, m: int, lam, method: str = "auto",
                  cap: int = DEFAULT_ORACLE_CAP) -> SumResult:
    """Evaluate the weighted sum with the requested method.

    ``method="all"`` runs every applicable method (the oracle only when
    ab <= cap) and raises :class:`MethodDisagreement` unless all of them
    return the same exact value.  ``cross_checked`` is true when the oracle
    took part in that agreement.
    """
    pair, lam = _pair(pair), _lam(lam)
    _check_m(m)
    start = time.perf_counter()
    if method == "all":
        values = {name: run_method(name, pair, m, lam, cap)
                  for name in applicable_methods(pair, m, lam, cap)}
        distinct = set(values.values())
        if len(distinct) != 1:
            raise MethodDisagreement(values, (pair.a, pair.b, m, format_scalar(lam)))
        value = next(iter(distinct))
        return SumResult(value, "all", time.perf_counter() - start,
                         "oracle" in values and len(values) > 1, values)
    if method == "auto":
        method = auto_method(pair, m, lam)
    value = run_method(method, pair, m, lam, cap)
    return SumResult(value, method, time.perf_counter() - start, False, {method: value})


def alternating_sum(pair, m: int) -> Scalar:
    """``sum over gaps of (-1)**n * n**m``, which is minus the lam = -1 sum."""
    return as_scalar(-sylvester_sum(pair, m, Fraction(-1)).value)
