"""Both kernel implementations agree with each other and with direct loops."""

from array import array

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sperndeg import kernels

BACKENDS = kernels.backends()


def _direct_transitions(seq, n):
    m = len(seq)
    fw, bw = [0] * n, [0] * n
    for k in range(m):
        a, b = seq[k], seq[(k + 1) % m]
        for i in range(1, n + 1):
            j = i % n + 1
            fw[i - 1] += (a, b) == (i, j)
            bw[i - 1] += (a, b) == (j, i)
    return fw, bw


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 9).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n), min_size=1, max_size=40))))
def test_transition_counts_agree(data):
    n, seq = data
    results = {name: mod.transition_counts(array("q", seq), n) for name, mod in BACKENDS.items()}
    first = next(iter(results.values()))
    assert all(r == first for r in results.values())
    ok, lift, fw, bw = first
    if ok:
        assert [list(fw), list(bw)] == list(_direct_transitions(seq, n))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9), st.integers(0, 9)), min_size=1, max_size=30),
       st.lists(st.integers(1, 4), min_size=10, max_size=10))
def test_scans_agree(simplices, labels):
    flat = array("q", [v for s in simplices for v in s])
    lab = array("q", labels)
    table = array("b", [((i * 7) % 3) - 1 for i in range(4 ** 3)])
    expected_hits = [k for k, s in enumerate(simplices) if len({labels[v] for v in s}) == 3]
    for mod in BACKENDS.values():
        assert list(mod.distinct_label_simplices(flat, 3, lab)) == expected_hits
        total, hits = mod.table_scan(flat, 3, lab, table, 4)
        idx = [(labels[a] - 1) * 16 + (labels[b] - 1) * 4 + (labels[c] - 1) for a, b, c in simplices]
        assert total == sum(table[i] for i in idx)
        assert list(hits) == [k for k, i in enumerate(idx) if table[i]]


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=20),
       st.lists(st.sampled_from([1, -1, 2, -2, 3]), min_size=6, max_size=6))
def test_opposite_pairs_agree(edges, labels):
    flat = array("q", [v for e in edges for v in e])
    expected = [k for k, (a, b) in enumerate(edges) if labels[a] == -labels[b]]
    for mod in BACKENDS.values():
        assert list(mod.opposite_pairs(flat, array("q", labels))) == expected


def test_backend_selection():
    assert kernels.BACKEND in BACKENDS
    assert "python" in BACKENDS


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled extension not built")
def test_compiled_backend_is_default():
    assert kernels.BACKEND == "cython"
