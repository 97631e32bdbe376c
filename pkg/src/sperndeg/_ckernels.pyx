# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels. Same contracts as ``_pykernels``."""


def transition_counts(const long long[::1] seq, long long n):
    cdef Py_ssize_t m = seq.shape[0]
    cdef Py_ssize_t k
    cdef long long a, b, diff, lift = 0
    cdef bint ok = True
    forward = [0] * n
    backward = [0] * n
    cdef list fw = forward, bw = backward
    for k in range(m):
        a = seq[k]
        b = seq[k + 1] if k + 1 < m else seq[0]
        if b == a % n + 1:
            fw[a - 1] += 1
        if a == b % n + 1:
            bw[b - 1] += 1
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


def table_scan(const long long[::1] flat, Py_ssize_t width, const long long[::1] labels,
               const signed char[::1] table, long long n):
    cdef Py_ssize_t count = flat.shape[0] // width
    cdef Py_ssize_t k, j, base
    cdef long long idx, total = 0
    cdef signed char t
    cdef list hits = []
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


def distinct_label_simplices(const long long[::1] flat, Py_ssize_t width, const long long[::1] labels):
    cdef Py_ssize_t count = flat.shape[0] // width
    cdef Py_ssize_t k, i, j, base
    cdef bint distinct
    cdef list hits = []
    for k in range(count):
        base = k * width
        distinct = True
        for i in range(width):
            for j in range(i + 1, width):
                if labels[flat[base + i]] == labels[flat[base + j]]:
                    distinct = False
                    break
            if not distinct:
                break
        if distinct:
            hits.append(k)
    return hits


def opposite_pairs(const long long[::1] flat, const long long[::1] labels):
    cdef Py_ssize_t count = flat.shape[0] // 2
    cdef Py_ssize_t k
    cdef list hits = []
    for k in range(count):
        if labels[flat[2 * k]] == -labels[flat[2 * k + 1]]:
            hits.append(k)
    return hits
