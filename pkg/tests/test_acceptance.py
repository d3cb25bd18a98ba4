"""Exit criteria for the package.  Every comparison is exact.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines as they happen; they are also repeated in the terminal summary.
"""
from __future__ import annotations

import time
from fractions import Fraction

import pytest

from sylvester.scalar import format_scalar, parse_scalar
from sylvester.semigroup import (
    CoprimePair,
    frobenius_number,
    gap_polynomial,
    gap_set,
    gh_polynomials,
    poly_mul,
    representation_count,
)
from sylvester.special import apostol_bernoulli, apostol_bernoulli_by_recurrence, euler_at_zero
from sylvester.sums import (
    applicable_methods,
    run_method,
    sum_oracle,
    sum_theorem1,
    sum_theorem_m,
    sum_theorem_m1,
    sylvester_sum,
)

from conftest import SWEEP_LAMBDAS, coprime_pairs

RESULTS: dict[str, list[tuple[bool, str]]] = {}


def record(criterion: str, ok: bool, detail: str) -> None:
    RESULTS.setdefault(criterion, []).append((ok, detail))
    print(f"[{criterion}] {'PASS' if ok else 'FAIL'}: {detail}")


# (a, b, m, lambda, expected) exactly as stated in criterion 1
STATED_VALUES = [
    (3, 17, 1, "2", "37515351605"),
    (3, 17, 1, "5", "900879734470832437423896"),
    (3, 17, 1, "1/2", "8822132865/1073741824"),
    (3, 17, 1, "-1", "408"),
    (3, 17, 1, "-5/3", "760508529478902941119864/205891132094649"),
    (3, 17, 1, "sqrt(2)", "34250061+6965604*sqrt(2)"),
    (3, 17, 1, "-sqrt(2)", "34250061-6965604*sqrt(2)"),
    (4, 11, 1, "-1", "80"),
    (4, 11, 2, "-1", "1870"),
]


@pytest.mark.parametrize("a, b, m, lam, expected", STATED_VALUES,
                         ids=[f"S{m}({a},{b};{lam})" for a, b, m, lam, _ in STATED_VALUES])
def test_c1_stated_values(a, b, m, lam, expected):
    lam, expected = parse_scalar(lam), parse_scalar(expected)
    start = time.perf_counter()
    closed = sylvester_sum((a, b), m, lam)
    t_closed = time.perf_counter() - start
    start = time.perf_counter()
    oracle = sum_oracle((a, b), m, lam)
    t_oracle = time.perf_counter() - start
    ok = closed.value == expected and oracle == expected and max(t_closed, t_oracle) < 0.1
    record("C1", ok,
           f"S_{m}^({format_scalar(lam)})({a},{b}) expected {format_scalar(expected)}; "
           f"{closed.method_used}={format_scalar(closed.value)} ({t_closed * 1e3:.1f} ms), "
           f"oracle={format_scalar(oracle)} ({t_oracle * 1e3:.1f} ms)")
    assert closed.value == expected
    assert oracle == expected
    assert t_closed < 0.1 and t_oracle < 0.1


def test_c2_gap_sets():
    expected = {
        (3, 17): (1, 2, 4, 5, 7, 8, 10, 11, 13, 14, 16, 19, 22, 25, 28, 31),
        (4, 11): (1, 2, 3, 5, 6, 7, 9, 10, 13, 14, 17, 18, 21, 25, 29),
    }
    ok = all(gap_set(CoprimePair(*p)).gaps == g for p, g in expected.items())
    record("C2", ok, "gap_set(3,17) and gap_set(4,11) equal the enumerated lists")
    assert ok


@pytest.fixture(scope="module")
def sweep():
    """Every applicable method on coprime 2 <= a < b <= 25, m <= 6, sweep lambdas."""
    start = time.perf_counter()
    cells = {}
    for a, b in coprime_pairs(2, 25):
        for lam_text in SWEEP_LAMBDAS:
            lam = parse_scalar(lam_text)
            for m in range(7):
                cells[a, b, m, lam_text] = {
                    name: run_method(name, (a, b), m, lam)
                    for name in applicable_methods((a, b), m, lam)
                }
    return cells, time.perf_counter() - start


def test_c3_three_way_equivalence(sweep):
    cells, elapsed = sweep
    bad = [k for k, v in cells.items()
           if "oracle" not in v or any(x != v["oracle"] for x in v.values())]
    m1_cells = sum(1 for v in cells.values() if "theorem_m1" in v)
    ok = not bad and elapsed < 120
    record("C3", ok, f"{len(cells)} cells ({m1_cells} via theorem_m1), "
                     f"{len(bad)} disagreements, {elapsed:.1f} s (limit 120 s)")
    assert not bad, bad[:5]
    assert elapsed < 120


def test_c4_apostol_bernoulli():
    failures = []
    for lam_text in ["2", "-1", "1/2", "-5/3", "5", "sqrt(2)"]:
        lam = parse_scalar(lam_text)
        explicit = apostol_bernoulli(12, lam)
        if explicit != apostol_bernoulli_by_recurrence(12, lam):
            failures.append(f"explicit != recurrence at {lam_text}")
        l1 = lam - 1
        closed = [0, 1 / l1, -2 * lam / l1**2, 3 * lam * (lam + 1) / l1**3,
                  -4 * lam * (lam**2 + 4 * lam + 1) / l1**4,
                  5 * lam * (lam**3 + 11 * lam**2 + 11 * lam + 1) / l1**5]
        if list(explicit[:6]) != closed:
            failures.append(f"closed forms n <= 5 at {lam_text}")
    E = euler_at_zero(10)
    for a in (1, 3, 5, 7, 9):
        A = apostol_bernoulli(10, Fraction(-1) ** a)
        if A[0] != 0 or any(A[n] != -n * E[n - 1] / 2 for n in range(1, 11)):
            failures.append(f"Euler relation for a = {a}")
    record("C4", not failures, "explicit = recurrence (n <= 12), closed forms n <= 5, "
                               "Euler relation n <= 10" + (f"; {failures}" if failures else ""))
    assert not failures


def test_c5_theorem_m_reduces_to_theorem1(sweep):
    cells, _ = sweep
    checked = [k for k, v in cells.items() if "theorem1" in v]
    bad = [k for k in checked if cells[k]["theorem1"] != cells[k]["theorem_m"]]
    # recompute directly so the check does not lean on the sweep dictionary alone
    for a, b, m, lam_text in checked:
        lam = parse_scalar(lam_text)
        if sum_theorem_m((a, b), 1, lam) != sum_theorem1((a, b), lam):
            bad.append((a, b, m, lam_text))
    ok = bool(checked) and not bad
    record("C5", ok, f"theorem_m(m=1) == theorem1 on {len(checked)} sweep cells")
    assert ok, bad[:5]


def test_c6_corollary():
    count, bad = 0, []
    for a, b in coprime_pairs(2, 40, strict=False):
        if a % 2 == 0 and b % 2 == 1:
            count += 1
            s1 = sum_theorem_m1((a, b), 1, -1)
            s2 = sum_theorem_m1((a, b), 2, -1)
            if s1 != Fraction(b * (a * b - a - b) + 1, 4):
                bad.append((a, b, 1))
            if s2 != Fraction(a * b * (b - 1) * (2 * a * b - a - 3 * b), 12):
                bad.append((a, b, 2))
            if s1 != sum_oracle((a, b), 1, -1) or s2 != sum_oracle((a, b), 2, -1):
                bad.append((a, b, "oracle"))
    record("C6", not bad, f"lambda = -1 corollary formulas on {count} (even a, odd b) pairs")
    assert not bad


def test_c7_structural_invariants():
    bad = []
    pairs = list(coprime_pairs(2, 40, strict=False))
    for a, b in pairs:
        pair = CoprimePair(a, b)
        f = gap_polynomial(pair).coefficients
        g, h = gh_polynomials(pair)
        if poly_mul(f, h) != g:
            bad.append((a, b, "g = f h"))
        gaps = gap_set(pair).gaps
        if 2 * len(gaps) != (a - 1) * (b - 1) or gaps[-1] != frobenius_number(pair) \
                or frobenius_number(pair) != (a - 1) * (b - 1) - 1:
            bad.append((a, b, "count/frobenius"))
        F = len(f) - 1
        if any(f[n] + f[F - n] != 1 for n in range(F + 1)):
            bad.append((a, b, "self-complementary"))
        if any(representation_count(n, pair) > 1 for n in range(0, a * b, max(1, a * b // 97))):
            bad.append((a, b, "r(n) <= 1 below ab"))
    record("C7", not bad, f"g = f*h, gap count, Frobenius number, self-complementarity "
                          f"on {len(pairs)} ordered pairs <= 40")
    assert not bad


@pytest.mark.slow
def test_c8_closed_form_speedup():
    pair, m, lam = (1009, 1013), 2, Fraction(1, 2)
    start = time.perf_counter()
    closed = sum_theorem_m(pair, m, lam)
    t_closed = time.perf_counter() - start
    start = time.perf_counter()
    oracle = sum_oracle(pair, m, lam, cap=2 * 10**6)
    t_oracle = time.perf_counter() - start
    ok = closed == oracle and t_oracle >= 10 * t_closed
    record("C8", ok, f"(1009,1013) m=2 lambda=1/2: closed {t_closed:.3f} s, "
                     f"oracle {t_oracle:.3f} s, speedup {t_oracle / t_closed:.0f}x, "
                     f"values {'identical' if closed == oracle else 'DIFFER'}")
    assert closed == oracle
    assert t_oracle >= 10 * t_closed
