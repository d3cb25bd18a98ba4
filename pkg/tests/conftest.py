from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest

from sylvester.scalar import parse_scalar

SWEEP_LAMBDAS = ["2", "1/2", "-1", "-5/3", "5", "sqrt(2)", "1+sqrt(2)"]


def coprime_pairs(lo: int, hi: int, strict: bool = True):
    for a in range(lo, hi + 1):
        for b in range(a + 1 if strict else lo, hi + 1):
            if gcd(a, b) == 1:
                yield a, b


def sieve_gaps(a: int, b: int) -> list[int]:
    """Mark every s*a + t*b up to ab and return what is left unmarked."""
    limit = a * b
    hit = [False] * (limit + 1)
    for s in range(0, limit // a + 1):
        for t in range(0, (limit - s * a) // b + 1):
            hit[s * a + t * b] = True
    return [n for n in range(1, limit + 1) if not hit[n]]


def naive_sum(a: int, b: int, m: int, lam) -> object:
    """Term-by-term scalar sum over the sieve gaps."""
    lam = parse_scalar(lam) if isinstance(lam, str) else lam
    total = Fraction(0)
    for n in sieve_gaps(a, b):
        total = total + lam ** (n - 1) * n**m
    return total


@pytest.fixture
def lam_of():
    return parse_scalar


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(results):
        rows = results[criterion]
        ok = all(r[0] for r in rows)
        failed = sum(1 for r in rows if not r[0])
        note = f" ({failed} of {len(rows)} checks failed)" if failed else ""
        terminalreporter.write_line(f"{criterion}: {'PASS' if ok else 'FAIL'}{note}")
