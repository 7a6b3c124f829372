"""Acceptance criteria.  Each test prints one PASS/FAIL line; equality is exact."""

import io
import time

import pytest

from oddlength.cli import run_cli
from oddlength.enumeration import WeightSpec, cached_table, enumerate_group
from oddlength.groups import IndexSet, PermutationA, PermutationB
from oddlength.poly import ONE, X, IntPolynomial
from oddlength.qseries import (
    closed_chessboard_minus, closed_chessboard_plus, closed_conjA, closed_conjB,
    closed_sn_full, closed_sn_quotient,
)
from oddlength.stats import (
    odd_length_a, odd_length_a_alternating, odd_length_b, odd_stats_b,
)
from oddlength.verifier import CheckParams, IdentityId, check_identity

MAX_A, MAX_B = 10, 8


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[acceptance] criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    return emit


def all_sets(kind, n):
    bits = IndexSet.full(kind, n).mask.bit_length()
    return [IndexSet.from_mask(kind, n, m) for m in range(1 << bits)]


def sweep(kind, n, weight, workers=1):
    """Quotient sums for every index set of one rank, indexed by mask."""
    rows = cached_table(kind, n, workers=workers).quotient_sums(weight)
    return [IntPolynomial(r.tolist()) for r in rows]


def mismatches(kind, n, weight, closed):
    got = sweep(kind, n, weight)
    return [(n, sorted(I.members)) for I in all_sets(kind, n) if got[I.mask] != closed(n, I)]


def test_criterion_1_chessboard_theorem(report):
    start = time.perf_counter()
    bad, checked = [], 0
    for n in range(1, MAX_A + 1):
        bad += mismatches("A", n, WeightSpec("plus"), closed_chessboard_plus)
        checked += 1 << (n - 1)
        if n % 2 == 0:
            bad += mismatches("A", n, WeightSpec("minus"), closed_chessboard_minus)
            checked += 1 << (n - 1)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed <= 300
    report(1, ok, f"{checked} (n, I, class) instances for n <= {MAX_A}, "
                  f"{len(bad)} mismatches, {elapsed:.1f} s (target 300 s)")
    assert not bad, bad[:5]
    assert elapsed <= 300


def test_criterion_2_chi_weighted(report):
    bad, checked = [], 0
    for n in range(1, MAX_A + 1):
        bad += mismatches("A", n, WeightSpec("chessboard", apply_chi=True), closed_conjA)
        checked += 1 << (n - 1)
    report(2, not bad, f"{checked} chi-weighted instances for n <= {MAX_A}, {len(bad)} mismatches")
    assert not bad, bad[:5]


def test_criterion_3_quotient_and_full_group(report):
    bad, checked = [], 0
    for n in range(1, MAX_A + 1):
        bad += mismatches("A", n, WeightSpec(), closed_sn_quotient)
        checked += 1 << (n - 1)
        full = sweep("A", n, WeightSpec())[0]
        if full != closed_sn_full(n):
            bad.append((n, "full"))
    anchors = {5: (ONE - X**2) * (ONE - X**4)}
    for m in range(1, MAX_A // 2 + 1):
        prod = ONE - X**m
        for j in range(1, m):
            prod = prod * (ONE - X**(2 * j))
        anchors[2 * m] = prod
    for n, expected in anchors.items():
        if sweep("A", n, WeightSpec())[0] != expected:
            bad.append((n, "anchor"))
    report(3, not bad, f"{checked} quotients, {MAX_A} full groups and {len(anchors)} anchored "
                       f"specialisations, {len(bad)} mismatches")
    assert not bad, bad[:5]


def test_criterion_4_type_b(report):
    start = time.perf_counter()
    bad, checked = [], 0
    for n in range(1, MAX_B + 1):
        bad += mismatches("B", n, WeightSpec(), closed_conjB)
        checked += 1 << n
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed <= 600
    report(4, ok, f"{checked} (n, J) instances for n <= {MAX_B} "
                  f"({cached_table('B', MAX_B).total_count()} elements of B_{MAX_B}), "
                  f"{len(bad)} mismatches, {elapsed:.1f} s (target 600 s)")
    assert not bad, bad[:5]
    assert elapsed <= 600


def test_criterion_5_worked_examples(report):
    la = odd_length_a(PermutationA((4, 2, 1, 5, 3)))
    lb = odd_length_b(PermutationB((-2, 4, 3, -1)))
    ok = (la, lb) == (3, 4)
    report(5, ok, f"L_A([4,2,1,5,3]) = {la} (want 3), L_B([-2,4,3,-1]) = {lb} (want 4)")
    assert ok


def test_criterion_6_definition_cross_checks(report):
    bad = []
    counts = [0, 0, 0]
    for n in range(1, 8):
        for w in enumerate_group("A", n):
            counts[0] += 1
            if odd_length_a_alternating(w) != odd_length_a(w):
                bad.append(("alternating", w.window))
    for n in range(1, 7):
        for w in enumerate_group("B", n):
            counts[1] += 1
            if odd_stats_b(w).total != odd_length_b(w):
                bad.append(("oinv+oneg+onsp", w.window))
        for w in enumerate_group("A", n):
            counts[2] += 1
            if odd_length_b(PermutationB(w.window)) != odd_length_a(w):
                bad.append(("restriction", w.window))
    report(6, not bad, f"alternating sum on {counts[0]} elements of S_n (n <= 7), "
                       f"oinv+oneg+onsp on {counts[1]} elements of B_n (n <= 6), "
                       f"L_B = L_A on {counts[2]} elements of S_n (n <= 6), {len(bad)} mismatches")
    assert not bad, bad[:5]


SUITE = [
    IdentityId.lemma2_8_chessB, IdentityId.lemma3_1_chessA, IdentityId.eq_chessA0,
    IdentityId.lemma3_2_zero, IdentityId.prop2_7_ascending, IdentityId.prop2_9_fact2,
    IdentityId.prop2_10_zero_removal, IdentityId.prop3_3_scr, IdentityId.prop3_4_scl,
    IdentityId.prop3_5_scrr, IdentityId.prop3_6_sclr, IdentityId.prop5_2_shiftB,
    IdentityId.prop5_3_inflateB, IdentityId.prop2_1_additivity,
    IdentityId.compressed_iff_m_eq_mtilde,
]


def test_criterion_7_identity_suite(report):
    params = CheckParams(max_n_a=9, max_n_b=7)
    reports = [check_identity(i, params) for i in SUITE]
    failed = [(r.identity.value, r.status) for r in reports if r.status != "pass"]
    total = sum(r.instances for r in reports)
    report(7, not failed, f"{len(reports) - len(failed)}/{len(reports)} identities pass at "
                          f"A <= 9, B <= 7 over {total} instances, none vacuous"
                          + (f"; failing: {failed}" if failed else ""))
    assert not failed


def test_criterion_8_determinism(report):
    docs = {}
    for workers in (1, 2, 8):
        buf = io.StringIO()
        for n in range(1, MAX_A + 1):
            restricts = ["plus", "minus"] if n % 2 == 0 else ["plus"]
            for r in restricts:
                code = run_cli(["gf", "--group", "A", "--n", str(n), "--all-sets", "--restrict", r,
                                "--threads", str(workers), "--format", "json"], stdout=buf)
                assert code == 0
        docs[workers] = buf.getvalue()
    ok = docs[1] == docs[2] == docs[8]
    report(8, ok, f"criterion-1 JSON for 1, 2 and 8 workers "
                  f"{'bit-identical' if ok else 'differs'} ({len(docs[1])} bytes each)")
    assert ok
