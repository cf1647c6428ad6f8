"""Acceptance criteria 1-9.  Each test prints one PASS/FAIL line.

Criteria 1 and 2 share their sweeps with 5, 6 and 8; those sweeps run once
per session.
"""

import random

import pytest

from edsolve import experiments as ex
from edsolve.bench import GROWTH_BASE, LEAF_SLACK, fit_growth, run_growth

pytestmark = pytest.mark.acceptance


def report(log, criterion, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}"
    log.append(line)
    print(line)
    return ok


@pytest.fixture(scope="session")
def exhaustive_audit():
    return ex.exhaustive(n=6, ks=range(4))


@pytest.fixture(scope="session")
def random_audit():
    return ex.randomized(count=500, seed=2024)


def test_c1_exhaustive_six_vertex(exhaustive_audit, acceptance_log):
    a = exhaustive_audit
    ok = a.instances == 2**15 * 4 and not a.disagreements
    detail = f"{a.instances} (graph, k) pairs, {len(a.disagreements)} disagreements"
    assert report(acceptance_log, 1, ok, detail), a.disagreements[:10]


def test_c2_randomized(random_audit, acceptance_log):
    a = random_audit
    ok = a.instances == 500 and not a.disagreements
    detail = f"{a.instances} instances, {a.oracle_checked} oracle-checked, {len(a.disagreements)} disagreements"
    assert report(acceptance_log, 2, ok, detail), a.disagreements[:10]


def test_c3_leaf_solver(acceptance_log):
    count, nones, bad = ex.leaf_equivalence(count=400, seed=7)
    ok = count >= 300 and nones > 0 and not bad
    detail = f"{count} states ({nones} infeasible), {len(bad)} mismatches"
    assert report(acceptance_log, 3, ok, detail), bad[:5]


def test_c4_matching(acceptance_log):
    count, bad = ex.matching_check(max_edges=12)
    ok = not bad
    detail = f"{count} graphs with <= 12 edges plus Petersen, {len(bad)} mismatches"
    assert report(acceptance_log, 4, ok, detail), bad[:5]


def test_c5_branch_guarantees(exhaustive_audit, random_audit, acceptance_log):
    runs = exhaustive_audit.runs + random_audit.runs
    bad = exhaustive_audit.violations + random_audit.violations
    detail = f"{runs} search trees, {len(bad)} node violations"
    assert report(acceptance_log, 5, not bad, detail), bad[:5]


def test_c6_macro_group_audit(exhaustive_audit, random_audit, acceptance_log):
    groups = exhaustive_audit.groups + random_audit.groups
    exceptions = exhaustive_audit.group_exceptions + random_audit.group_exceptions
    rate = 1.0 if not groups else 1 - len(exceptions) / groups
    detail = f"{groups} groups, pass rate {rate:.4%} (need >= 99%), {len(exceptions)} exceptions"
    for label, grp in exceptions[:20]:
        print(f"    exception {grp.rule}/{grp.kind} deltas={grp.deltas} "
              f"weight={grp.weight(ex.AUDIT_BASE):.4f} trace={grp.trace} on {label}")
    assert report(acceptance_log, 6, groups > 0 and rate >= 0.99, detail)


@pytest.mark.parametrize("family", ["paths", "cubic"])
def test_c7_growth(family, acceptance_log):
    rows = run_growth(family, 8, random.Random(0))
    ks = {r.k for r in rows}
    fit = fit_growth(rows)
    over = [r.as_dict() for r in rows if not r.within_bound]
    fitted = ", ".join(f"{a} base {v['base']:.3f} (claimed {v['claimed_base']})" for a, v in fit.items())
    ok = max(ks) == 8 and not over
    detail = (f"{family}: {len(rows)} runs, k in [{min(ks)}, {max(ks)}], "
              f"bound {LEAF_SLACK:g}*base^k with {GROWTH_BASE}, {len(over)} over; fit {fitted}")
    assert report(acceptance_log, 7, ok, detail), over


def test_c8_kernel(exhaustive_audit, random_audit, acceptance_log):
    kernels = exhaustive_audit.kernels + random_audit.kernels
    failures = exhaustive_audit.kernel_failures + random_audit.kernel_failures
    regime = exhaustive_audit.bound_checked + random_audit.bound_checked
    boundary = exhaustive_audit.boundary_cases + random_audit.boundary_cases
    detail = (f"{kernels} kernels ({regime} in the k+1<=m<=2k-1 regime, {boundary} at m=2k), "
              f"{len(failures)} failures")
    assert report(acceptance_log, 8, kernels > 0 and not failures, detail), failures[:10]


def test_c9_reductions(acceptance_log):
    count, mmm_bad = ex.mmm_exhaustive(n=6, ks=range(4))
    conv_bad = ex.conversion_check(count=300)
    mat_bad = ex.matrix_check(count=200)
    bad = mmm_bad + conv_bad + mat_bad
    detail = (f"mmm {count} (graph, k) pairs, {len(mmm_bad)} bad; conversion {len(conv_bad)} bad; "
              f"matrix 200 instances, {len(mat_bad)} bad")
    assert report(acceptance_log, 9, not bad, detail), bad[:10]
