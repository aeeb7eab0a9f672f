"""
Acceptance gate: one test per criterion, exact equality throughout, with
the stated single-threaded time budgets.  Each test records a PASS/FAIL line
shown in the terminal summary.
"""

import time

import pytest

from dyck321 import dyck, involutions, verify
from dyck321.bijections import bijection_B, bijection_K, bijection_M, bijection_M_direct
from dyck321.codes import AscentDescentCode, code_of, lk_labels, transform_lrmax_to_excedance
from dyck321.dyck import DyckPath, ascent_descent_lengths
from dyck321.involutions import lk
from dyck321.perm321 import lrmax_skeleton

RUNNING = DyckPath("UDUDUUDUUDDDUUUDDDUD")


@pytest.fixture(autouse=True)
def cold_caches():
    dyck._enumerate_cached.cache_clear()
    involutions.lk.cache_clear()
    verify.map_table.cache_clear()


def timed(f, *args, **kwargs):
    start = time.perf_counter()
    out = f(*args, **kwargs)
    return out, time.perf_counter() - start


def test_criterion_1_identities(record_criterion):
    rep, secs = timed(verify.verify_identities, 11, 1, workers=1)
    ok = rep.passed and secs < 30
    record_criterion(1, "M = B∘L = K∘L', K⁻¹∘B = L'∘L, B⁻¹∘K = L∘L' for n = 1..11", ok,
                     f"{rep.checked} checks, {rep.failure_count} failures, {secs:.1f}s")
    assert rep.checked == 4 * sum(len(dyck.enumerate_dyck(n)) for n in range(1, 12))
    assert rep.passed, rep.failures
    assert secs < 30


def test_criterion_2_theorem(record_criterion):
    rep, secs = timed(verify.verify_theorem, 11, 1, workers=1)
    ok = rep.passed and secs < 120
    record_criterion(2, "(L'∘L)^n = R for n = 1..11", ok,
                     f"{rep.checked} paths, {rep.failure_count} failures, {secs:.1f}s")
    assert rep.checked == sum(len(dyck.enumerate_dyck(n)) for n in range(1, 12))
    assert rep.passed, rep.failures
    assert secs < 120


def test_criterion_3_corollary(record_criterion):
    rep, secs = timed(verify.verify_corollary, 10, 0, orbit_max_n=12)
    orders = rep.details["orders"]
    sizes = rep.details["orbit_sizes"]
    ok = (rep.passed and secs < 60
          and all(orders[n] == 2 * n for n in range(3, 11))
          and orders[2] == 2 and orders[1] == orders[0] == 1
          and all(sizes[n] == 2 * n for n in range(4, 13)))
    record_criterion(3, "order of L'∘L is 2n (n = 3..10), orbit of u^(n-1)d^(n-1)ud is 2n (n = 4..12)",
                     ok, f"{secs:.1f}s")
    assert ok, rep.to_dict()


def test_criterion_4_worked_examples(record_criterion):
    small = DyckPath("UUDUUUUDDDUDDUDD")
    checks = {
        "ascent-descent code": code_of(small) == AscentDescentCode(8, (2, 6, 7), (1, 4, 6)),
        "uu/dd labels": lk_labels(RUNNING) == AscentDescentCode(10, (4, 5, 7, 8), (3, 5, 7, 8)),
        "L image runs": ascent_descent_lengths(lk(RUNNING)) == ((4, 1, 2, 1, 2), (3, 2, 2, 1, 2)),
        "B image": bijection_B(RUNNING) == (2, 3, 5, 1, 4, 7, 6, 8, 10, 9),
        "K image": bijection_K(RUNNING) == (1, 2, 4, 6, 3, 5, 9, 7, 8, 10),
        "M image": bijection_M(RUNNING) == (1, 2, 5, 3, 6, 4, 8, 9, 7, 10),
        "M direct image": bijection_M_direct(RUNNING) == (1, 2, 5, 3, 6, 4, 8, 9, 7, 10),
        "LRMax skeleton": lrmax_skeleton((4, 1, 3, 7, 2, 5, 8, 9, 6)) == ((4, 7, 8, 9), (1, 4, 7, 8)),
        "code transform": transform_lrmax_to_excedance(
            AscentDescentCode(13, (2, 3, 4, 8, 9, 12), (1, 3, 4, 6, 7, 10)))
        == AscentDescentCode(13, (1, 2, 7, 8, 11, 12), (1, 2, 5, 7, 8, 11)),
    }
    failed = [k for k, v in checks.items() if not v]
    record_criterion(4, "worked examples reproduced", not failed,
                     f"{len(checks) - len(failed)}/{len(checks)}")
    assert not failed


def test_criterion_5_path_pairs(record_criterion):
    rep, secs = timed(verify.verify_pairs, 12, 0, geometric_max=10, diagonal_max=8)
    ok = rep.passed and secs < 180
    record_criterion(5, "phi round trip (n ≤ 12); flip45, rotate180, tweak (n ≤ 10); "
                        "n minimal diagonals (n ≤ 8)", ok,
                     f"{rep.checked} checks, {rep.failure_count} failures, {secs:.1f}s")
    assert rep.passed, rep.failures
    assert secs < 180


def test_criterion_6_proposition(record_criterion):
    rep = verify.verify_proposition(6, 1, convention="clockwise")
    outcomes = rep.details["outcomes"]
    ok = rep.passed and outcomes["clockwise"] == "pass" and set(outcomes) == {"clockwise", "forward"}
    record_criterion(6, "flattened after corner turn ⟺ flat predecessor, n ≤ 6", ok,
                     f"convention=clockwise; outcomes {outcomes}; "
                     f"mismatches {rep.details['mismatches']}")
    assert ok, rep.to_dict()


def test_criterion_7_bijectivity(record_criterion):
    rep = verify.verify_bijectivity(9, 0)
    record_criterion(7, "B, K, M biject Dyck n-paths onto filtered 321-avoiders, n ≤ 9",
                     rep.passed, f"{rep.checked} checks")
    assert rep.passed, rep.failures


def test_criterion_8_oracles(record_criterion):
    rep = verify.verify_oracles(10, 0, transposition_max=8)
    record_criterion(8, "lk_graphical = lk (n ≤ 10); transposition product = M (n ≤ 8)",
                     rep.passed, f"{rep.checked} checks")
    assert rep.passed, rep.failures
