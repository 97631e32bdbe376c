"""Compare the compiled and pure-Python label-scan kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each row times one kernel on the same input under both backends and prints
the best-of-``repeat`` wall time and the speedup.  The last rows time whole
checks with the backend swapped in, which shows how much of the end-to-end
cost the kernels actually account for.
"""

from __future__ import annotations

import argparse
import random
import timeit
from array import array

from sperndeg import kernels
from sperndeg.cover import find_generic_point, regular_polygon
from sperndeg.degree import _cover_table, boundary_degree
from sperndeg.fixtures import load_fixture
from sperndeg.generator import enumerate_labellings, random_labelling, random_nl_cycle, refine
from sperndeg.theorems import check_fully_coloured


def _kernel_cases():
    rng = random.Random(1)
    seq = array("q", random_nl_cycle(200_000, 7, rng))

    T = refine(load_fixture("annulus").triangulation(), 4)
    P = regular_polygon(4)
    lab = random_labelling(T, 4, "nl-boundary", 3)
    table = _cover_table(P, find_generic_point(P))
    flat, labels = T.simplex_array, lab.array

    D = refine(load_fixture("symmetric_disk_two_interior").triangulation(), 3)
    sl = random_labelling(D, 2, "antipodal", 5)
    edges = array("q", [v for e in D.edges for v in e])
    signed = array("q", sl.labels)
    return [
        ("transition_counts", "200k-step cycle, n=7", lambda m: m.transition_counts(seq, 7)),
        ("table_scan", f"{len(T.simplices)} triangles", lambda m: m.table_scan(flat, 3, labels, table, 4)),
        ("distinct_label_simplices", f"{len(T.simplices)} triangles", lambda m: m.distinct_label_simplices(flat, 3, labels)),
        ("opposite_pairs", f"{len(D.edges)} edges", lambda m: m.opposite_pairs(edges, signed)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    impls = kernels.backends()
    if "cython" not in impls:
        print("compiled kernels are not built; only the Python backend is available")
    print(f"{'case':<28}{'input':<26}" + "".join(f"{k:>12}" for k in impls) + f"{'speedup':>10}")

    for name, desc, fn in _kernel_cases():
        times = {k: min(timeit.repeat(lambda: fn(m), number=1, repeat=args.repeat)) for k, m in impls.items()}
        _row(name, desc, times)

    tri = load_fixture("triangle_9").triangulation()
    ann = load_fixture("annulus")
    T, P = ann.triangulation(), ann.polytope_obj()

    def sweep_triangle():
        for lab in enumerate_labellings(tri, 3, "free"):
            check_fully_coloured(tri, lab)

    def sweep_annulus():
        for k, lab in enumerate(enumerate_labellings(T, 4, "nl-boundary")):
            boundary_degree(T, lab)
            if k == 20_000:
                break

    for name, desc, fn in [("end-to-end", "3^9 fully-coloured", sweep_triangle),
                           ("end-to-end", "20k annulus degrees", sweep_annulus)]:
        times = {}
        saved = kernels._impl
        try:
            for k, m in impls.items():
                kernels._impl = m
                times[k] = min(timeit.repeat(fn, number=1, repeat=max(1, args.repeat // 2)))
        finally:
            kernels._impl = saved
        _row(name, desc, times)


def _row(name, desc, times):
    cells = "".join(f"{1000 * t:>10.2f}ms" for t in times.values())
    speed = times["python"] / times["cython"] if "cython" in times else 1.0
    print(f"{name:<28}{desc:<26}{cells}{speed:>9.1f}x")


if __name__ == "__main__":
    main()
