"""Pure-Python kernels. Reference behaviour for ``_ckernels.pyx``."""

from __future__ import annotations


def transition_counts(seq, n):
    """Scan a cyclic label sequence.

    Returns ``(neighboring, lift_sum, forward, backward)`` where
    ``forward[i - 1]`` counts consecutive pairs ``(i, i + 1)`` (``(n, 1)``
    for ``i = n``), ``backward[i - 1]`` counts the reversed pairs and
    ``lift_sum`` is the sum of the steps in {-1, 0, +1} of the lifted walk.
    """
    m = len(seq)
    forward = [0] * n
    backward = [0] * n
    lift = 0
    ok = True
    for k in range(m):
        a = seq[k]
        b = seq[k + 1] if k + 1 < m else seq[0]
        if b == a % n + 1:
            forward[a - 1] += 1
        if a == b % n + 1:
            backward[b - 1] += 1
        if a == b:
            continue
        diff = b - a
        # test +-1 before the wrap-around so that n = 2 stays unambiguous
        if diff == 1:
            lift += 1
        elif diff == -1:
            lift -= 1
        elif diff == 1 - n:
            lift += 1
        elif diff == n - 1:
            lift -= 1
        else:
            ok = False
    return ok, lift, forward, backward


def table_scan(flat, width, labels, table, n):
    """Sum ``table`` entries indexed by each simplex's ordered label tuple."""
    total = 0
    hits = []
    count = len(flat) // width
    for k in range(count):
        idx = 0
        base = k * width
        for j in range(width):
            idx = idx * n + (labels[flat[base + j]] - 1)
        t = table[idx]
        if t:
            total += t
            hits.append(k)
    return total, hits


def distinct_label_simplices(flat, width, labels):
    hits = []
    count = len(flat) // width
    for k in range(count):
        base = k * width
        vals = [labels[flat[base + j]] for j in range(width)]
        if len(set(vals)) == width:
            hits.append(k)
    return hits


def opposite_pairs(flat, labels):
    hits = []
    for k in range(len(flat) // 2):
        if labels[flat[2 * k]] == -labels[flat[2 * k + 1]]:
            hits.append(k)
    return hits
