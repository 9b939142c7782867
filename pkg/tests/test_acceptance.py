"""The nine acceptance criteria, one test each, at their stated tolerances.

Every test records a single ``criterion N: PASS|FAIL ...`` line; the lines are
printed together in the terminal summary (see conftest.py).
"""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from hecke_clifford import numeric
from hecke_clifford.suites import (
    center_checks,
    conjecture_checks,
    fusion_checks,
    module_checks,
    psi_lemma_checks,
    suite_divisibility,
    suite_murphy,
    suite_relations,
)
from hecke_clifford.representations import dimension_identity
from hecke_clifford.tableaux import enumerate_strict_partitions


def report(number: int, checks, extra: str = "", informational: bool = False):
    failed = [c.label for c in checks if c.status == "fail"]
    vacuous = [c.label for c in checks if c.status == "vacuous"]
    status = "PASS" if not failed else "FAIL"
    tail = f"{len(checks)} checks"
    if vacuous:
        tail += f", {len(vacuous)} vacuous"
    if failed:
        tail += f", failed: {', '.join(failed[:5])}"
    if informational:
        tail += " (informational)"
    line = f"criterion {number}: {status}  {tail}{'  ' + extra if extra else ''}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return failed


def test_criterion_1_relations_and_murphy():
    t0 = time.perf_counter()
    checks = [c for n in (2, 3, 4) for c in suite_relations(n) + suite_murphy(n)]
    elapsed = time.perf_counter() - t0
    failed = report(1, checks, f"{elapsed:.1f} s")
    assert not failed
    assert elapsed < 60


def test_criterion_2_psi_calculus():
    checks = psi_lemma_checks(points=20, seed=0)
    failed = report(2, checks, "20 random exact points")
    assert not failed
    assert not [c for c in checks if c.status == "vacuous"]


def test_criterion_3_fusion():
    cfg = numeric.NumericConfig(q=1.2, tolerance=1e-6)
    t0 = time.perf_counter()
    checks = [c for n in range(1, 5) for s in enumerate_strict_partitions(n) for c in fusion_checks(s, cfg)]
    elapsed = time.perf_counter() - t0
    failed = report(3, checks, f"{elapsed:.1f} s")
    assert not failed
    assert elapsed <= 600


def test_criterion_4_divisibility():
    checks = [c for n in range(1, 5) for c in suite_divisibility(n)]
    failed = report(4, checks)
    assert not failed
    # a statement may be vacuous for small shapes, but never for every shape
    statements = {c.label.split("/")[0] for c in checks}
    exercised = {c.label.split("/")[0] for c in checks if c.status == "pass"}
    assert statements == exercised
    assert "theta-left-divisibility-last-pair" in exercised


def test_criterion_5_modules():
    checks = [c for n in range(1, 5) for s in enumerate_strict_partitions(n) for c in module_checks(s)]
    failed = report(5, checks)
    assert not failed


def test_criterion_6_dimension_identity():
    results = {n: dimension_identity(n) for n in range(1, 6)}
    failed = [n for n, (ok, _, _) in results.items() if not ok]
    line = f"criterion 6: {'PASS' if not failed else 'FAIL'}  " + ", ".join(
        f"n={n}: {total}={target}" for n, (_, total, target) in results.items()
    )
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failed
    assert results[3][1] == 48


def test_criterion_7_center():
    checks = [c for n in range(1, 6) for c in center_checks(n)]
    failed = report(7, checks)
    assert not failed


def test_criterion_8_conjecture():
    # Only conjectured: a failure is reported on the line, never asserted.
    checks = [c for n in range(1, 4) for c in conjecture_checks(n)]
    scalars = "; ".join(f"{c.label.split('/')[-1]}: {c.detail}" for c in checks)
    report(8, checks, scalars, informational=True)
    assert len(checks) == sum(len(enumerate_strict_partitions(n)) for n in range(1, 4))


@pytest.mark.parametrize("tol", [1e-6])
def test_criterion_9_degeneration(tol):
    errors = {(a, b): numeric.degeneration_check(a, b, tol=tol) for a, b in ((0, 1), (1, 2), (0, 2))}
    failed = [k for k, (ok, _) in errors.items() if not ok]
    line = f"criterion 9: {'PASS' if not failed else 'FAIL'}  " + ", ".join(
        f"contents {a},{b}: error {err:.1e}" for (a, b), (_, err) in errors.items()
    )
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failed
