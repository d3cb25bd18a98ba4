"""Binomials, Stirling numbers, Bernoulli, Euler-at-zero and Apostol-Bernoulli numbers.

All tables are exact and memoized; the caches are ``functools.lru_cache``
instances, which are internally locked, and they hold immutable tuples.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .scalar import Scalar, as_scalar, is_one

__all__ = [
    "apostol_bernoulli",
    "apostol_bernoulli_by_recurrence",
    "bernoulli",
    "binomial",
    "euler_at_zero",
    "stirling2",
    "stirling2_explicit",
    "stirling2_row",
]


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def stirling2_row(n: int) -> tuple[int, ...]:
    """Row ``{n over 0} ... {n over n}`` by the standard recurrence."""
    if n == 0:
        return (1,)
    prev = stirling2_row(n - 1) + (0,)
    return tuple(
        (k * prev[k] if k else 0) + (prev[k - 1] if k else 0)
        for k in range(n + 1)
    )


def stirling2(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return stirling2_row(n)[k]


def stirling2_explicit(n: int, k: int) -> int:
    """Alternating-sum formula ``1/k! * sum (-1)^(k-j) C(k,j) j^n``."""
    total = sum((-1) ** (k - j) * comb(k, j) * j**n for j in range(k + 1))
    return total // factorial(k)


@lru_cache(maxsize=None)
def bernoulli(N: int) -> tuple[Fraction, ...]:
    """Classical Bernoulli numbers B_0..B_N (B_1 = -1/2)."""
    B: list[Fraction] = [Fraction(1)]
    for n in range(1, N + 1):
        s = sum(comb(n + 1, k) * B[k] for k in range(n))
        B.append(-s / (n + 1))
    return tuple(B[: N + 1])


@lru_cache(maxsize=None)
def euler_at_zero(N: int) -> tuple[Fraction, ...]:
    """E_0(0)..E_N(0) from ``2 E_n(0) + sum_{k<n} C(n,k) E_k(0) = 2[n=0]``."""
    E: list[Fraction] = []
    for n in range(N + 1):
        s = sum(comb(n, k) * E[k] for k in range(n))
        E.append(Fraction((2 if n == 0 else 0) - s) / 2)
    return tuple(E)


def _check_lambda(lam) -> Scalar:
    lam = as_scalar(lam)
    if is_one(lam):
        raise ValueError(
            "Apostol-Bernoulli numbers need lambda != 1 "
            "(the explicit formula divides by lambda - 1)"
        )
    return lam


@lru_cache(maxsize=1024)
def _apostol_explicit(N: int, lam: Scalar) -> tuple[Scalar, ...]:
    inv = 1 / (lam - 1)
    ratio = -lam * inv  # (-1)^j lam^j (lam-1)^(-j) folded into one power
    weights = [inv]
    for j in range(1, N):
        weights.append(weights[-1] * ratio * j)
    values: list[Scalar] = [Fraction(0)]
    for n in range(1, N + 1):
        row = stirling2_row(n - 1)
        acc = sum((row[j] * weights[j] for j in range(n) if row[j]), Fraction(0))
        values.append(as_scalar(n * acc))
    return tuple(values[: N + 1])


def apostol_bernoulli(N: int, lam) -> tuple[Scalar, ...]:
    """Apostol-Bernoulli numbers of ``z/(lam*e^z - 1)`` for n = 0..N.

    Uses the explicit Stirling-number formula with the inner sum starting at
    j = 0, which is what makes the n = 1 value come out as 1/(lam - 1).
    """
    return _apostol_explicit(N, _check_lambda(lam))


def apostol_bernoulli_by_recurrence(N: int, lam) -> tuple[Scalar, ...]:
    # (lam e^z - 1) * sum A_n z^n/n! = z, coefficient of z^n/n!:
    # lam * sum_k C(n,k) A_k - A_n = [n == 1]
    lam = _check_lambda(lam)
    A: list[Scalar] = []
    for n in range(N + 1):
        s = sum((comb(n, k) * A[k] for k in range(n)), Fraction(0))
        A.append(as_scalar(((1 if n == 1 else 0) - lam * s) / (lam - 1)))
    return tuple(A)
