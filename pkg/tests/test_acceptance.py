"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` or
``python3 tests/test_acceptance.py``.  All comparisons are exact; the stated
time budgets are checked as well.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from fractions import Fraction

import pytest

from sperndeg.cover import cov, generic_points, is_pebble_set, pebble_set, regular_polygon
from sperndeg.degree import boundary_degree, cycle_degree, lift_steps, map_degree_at, pair_degree
from sperndeg.document import parse, serialize
from sperndeg.fixtures import PENTAGON_POINTS, WORKED_SEQUENCE, fixture_text, load_fixture, names
from sperndeg.generator import enumerate_anl_sequences, enumerate_labellings, random_instance, random_nl_cycle
from sperndeg.render import render_svg
from sperndeg.theorems import (
    check_antipodal_cycle_parity,
    check_fully_coloured,
    check_mod2,
    check_polytopal,
    check_tucker,
)


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, elapsed, budget, detail=""):
        within = elapsed < budget
        status = "PASS" if ok and within else "FAIL"
        line = f"[{status}] criterion {number:2d}: {title} ({elapsed:.3f}s, budget {budget:g}s)"
        if detail:
            line += f" {detail}"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
        assert within, line

    return emit


def _transition_degree(seq, i, n):
    # independent oracle: count i -> i+1 minus i+1 -> i directly
    j = i % n + 1
    m = len(seq)
    fw = sum(1 for k in range(m) if (seq[k], seq[(k + 1) % m]) == (i, j))
    bw = sum(1 for k in range(m) if (seq[k], seq[(k + 1) % m]) == (j, i))
    return fw - bw


def test_01_worked_degree_example(report):
    seq = WORKED_SEQUENCE
    cycle_degree(seq, 3)
    t0 = time.perf_counter()
    deg = cycle_degree(seq, 3)
    elapsed = time.perf_counter() - t0
    pairs = [pair_degree(seq, i, 3) for i in (1, 2, 3)]
    ok = deg == 3 and pairs == [3, 3, 3] and [_transition_degree(seq, i, 3) for i in (1, 2, 3)] == pairs
    report(1, "worked sequence has degree 3, all pair degrees agree", ok, elapsed, 0.001, f"pairs={pairs}")


def test_02_pentagon_cover_sets(report):
    doc = load_fixture("pentagon_pebbles")
    P = doc.polytope_obj()
    expected = {
        "p1": [(1, 2, 3), (1, 2, 4), (1, 2, 5)],
        "p2": [(1, 3, 5), (1, 4, 5), (2, 3, 5), (2, 4, 5)],
        "p3": [(1, 3, 4), (2, 3, 4), (3, 4, 5)],
        "O": [(1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5)],
    }
    t0 = time.perf_counter()
    got = {k: sorted(cov(P, y).simplices) for k, y in PENTAGON_POINTS.items()}
    elapsed = time.perf_counter() - t0
    bundled = [tuple(Fraction(c) for c in p) for p in PENTAGON_POINTS.values()]
    ok = got == expected and len(got["O"]) == 5 and list(doc.points) == bundled
    report(2, "pentagon cover sets reproduced, |cov(O)| = 5", ok, elapsed, 0.010)


def test_03_pair_degrees_and_lift_sum(report):
    rng = random.Random(20240603)
    bad = 0
    t0 = time.perf_counter()
    for _ in range(1000):
        m, n = rng.randint(1, 50), rng.randint(1, 9)
        seq = random_nl_cycle(m, n, rng)
        pairs = [pair_degree(seq, i, n) for i in range(1, n + 1)]
        lift = sum(lift_steps(seq, n))
        q = cycle_degree(seq, n)
        if len(set(pairs)) != 1 or lift != q * n or pairs[0] != q:
            bad += 1
        elif n >= 3 and [_transition_degree(seq, i, n) for i in range(1, n + 1)] != pairs:
            bad += 1
    elapsed = time.perf_counter() - t0
    report(3, "1000 random neighbouring cycles: pair degrees equal, lift sum agrees", bad == 0, elapsed, 1.0, f"mismatches={bad}")


def test_04_brute_force_bounds(report):
    t0 = time.perf_counter()
    tri = load_fixture("triangle_9").triangulation()
    cases = violations = 0
    for lab in enumerate_labellings(tri, 3, "free"):
        v = check_fully_coloured(tri, lab)
        cases += 1
        violations += not (v.holds and len(v.witnesses) >= abs(v.degree))
    doc = load_fixture("annulus")
    T, P = doc.triangulation(), doc.polytope_obj()
    nl_cases = nl_violations = 0
    for lab in enumerate_labellings(T, 4, "nl-boundary", cap=10**6):
        v = check_polytopal(T, lab, P)
        nl_cases += 1
        nl_violations += not (v.holds and len(v.witnesses) >= v.bound)
    elapsed = time.perf_counter() - t0
    ok = cases == 3**9 == 19683 and violations == 0 and nl_violations == 0 and 0 < nl_cases <= 10**6
    report(4, "exhaustive fully-coloured and polytopal bounds", ok, elapsed, 60,
           f"triangle={cases} annulus_nl={nl_cases} violations={violations + nl_violations}")


def test_05_degree_oracle_equivalence(report):
    bad = 0
    t0 = time.perf_counter()
    for seed in range(1000):
        T, lab, P = random_instance(seed)
        deg = boundary_degree(T, lab).total
        rng = random.Random(seed)
        values = [map_degree_at(T, lab, P, y) for y in generic_points(P, 5, rng)]
        bad += any(v != deg for v in values)
    elapsed = time.perf_counter() - t0
    report(5, "map degree at 5 generic points equals boundary degree on 1000 instances", bad == 0, elapsed, 30,
           f"mismatches={bad}")


def test_06_antipodal_cycles_are_odd(report):
    t0 = time.perf_counter()
    total = bad = 0
    pieces = Counter()
    for m in range(1, 7):
        for seq in enumerate_anl_sequences(m, 2):
            total += 1
            v = check_antipodal_cycle_parity(seq, 2)
            ell = v.details["pieces"]
            pieces[ell] += 1
            if not (v.degree % 2 == 1 and ell % 2 == 1 and all(abs(p) == 1 for p in v.details["piece_degrees"])):
                bad += 1
    elapsed = time.perf_counter() - t0
    report(6, "antipodal neighbouring cycles (2m <= 12, n = 2) have odd degree", bad == 0 and total > 0, elapsed, 10,
           f"sequences={total} pieces={dict(sorted(pieces.items()))}")


def test_07_tucker_exhaustive(report):
    doc = load_fixture("symmetric_disk_two_interior")
    T = doc.triangulation()
    t0 = time.perf_counter()
    cases = bad = 0
    for sl in enumerate_labellings(T, 2, "antipodal", no_boundary_complementary=True):
        v = check_tucker(T, sl)
        cases += 1
        bad += not (len(v.witnesses) >= abs(v.degree) >= 1)
    elapsed = time.perf_counter() - t0
    boundary = sum(len(c.vertex_loop) for c in T.boundary.cycles)
    ok = bad == 0 and cases > 0 and boundary == 8 and T.num_vertices - boundary == 2
    report(7, "Tucker bound on every admissible labelling of the symmetric disk", ok, elapsed, 60,
           f"labellings={cases}")


def test_08_caption_fixtures(report):
    t0 = time.perf_counter()
    nonagon = load_fixture("nonagon_degree3")
    a = check_fully_coloured(nonagon.triangulation(), nonagon.labelling())
    octagon = load_fixture("octagon_two_holes")
    b = check_polytopal(octagon.triangulation(), octagon.labelling(), octagon.polytope_obj())
    disk = load_fixture("symmetric_disk_degree3")
    c = check_tucker(disk.triangulation(), disk.labelling())
    elapsed = time.perf_counter() - t0
    ok = (
        a.holds and abs(a.degree) == 3 and len(a.witnesses) >= 3
        and b.holds and b.degree == 4 and len(b.witnesses) == 8
        and c.holds and abs(c.degree) == 3 and len(c.witnesses) == 3
    )
    report(8, "caption fixtures: degree 3 / 3 triangles, degree 4 / 8 triangles, degree 3 / 3 edges", ok, elapsed, 1,
           f"({a.degree},{len(a.witnesses)}) ({b.degree},{len(b.witnesses)}) ({c.degree},{len(c.witnesses)})")


def test_09_pebble_sets(report):
    t0 = time.perf_counter()
    sizes = {}
    ok = True
    for n in range(3, 13):
        P = regular_polygon(n)
        pts = pebble_set(P)
        sizes[n] = len(pts)
        ok &= len(pts) == n - 2 and bool(is_pebble_set(P, pts))
    elapsed = time.perf_counter() - t0
    report(9, "verified pebble sets of n - 2 points for 3 <= n <= 12", ok, elapsed, 30)


def test_10_sperner_bridge(report):
    doc = load_fixture("triangle_7")
    T, P = doc.triangulation(), doc.polytope_obj()
    t0 = time.perf_counter()
    cases = bad = 0
    for lab in enumerate_labellings(T, 3, "sperner", P=P):
        cases += 1
        v = check_fully_coloured(T, lab)
        bad += not (abs(boundary_degree(T, lab).total) == 1 and len(v.witnesses) >= 1)
    elapsed = time.perf_counter() - t0
    report(10, "every Sperner labelling of the 7-vertex triangle has degree +-1 and a full triangle",
           bad == 0 and cases > 0, elapsed, 5, f"labellings={cases}")


def test_11_mod2_non_orientable(report):
    doc = load_fixture("mobius_band")
    T, lab, P = doc.triangulation(), doc.labelling(), doc.polytope_obj()
    t0 = time.perf_counter()
    from sperndeg.cover import find_generic_point

    v = check_mod2(T, lab, P, find_generic_point(P))
    elapsed = time.perf_counter() - t0
    ok = not T.orientable and v.degree == 1 and v.holds and len(v.witnesses) >= 1
    report(11, "Moebius band with mod-2 degree 1 has a fully coloured triangle", ok, elapsed, 1,
           f"witnesses={len(v.witnesses)}")


def test_12_format_stability(report):
    t0 = time.perf_counter()
    ok = all(serialize(parse(fixture_text(name))) == fixture_text(name) for name in names())
    for name in names():
        doc = load_fixture(name)
        if doc.dimension != 2 or len(doc.vertices[0]) != 2:
            continue
        first = render_svg(doc.triangulation(), doc.labelling(), title=doc.note)
        second = render_svg(doc.triangulation(), doc.labelling(), title=doc.note)
        ok &= first == second
    elapsed = time.perf_counter() - t0
    report(12, "parse/serialize byte-identical on all fixtures, render byte-stable", ok, elapsed, 5)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
