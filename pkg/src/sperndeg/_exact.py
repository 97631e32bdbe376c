"""Exact rational linear algebra for the geometric predicates.

Everything here works on :class:`fractions.Fraction` (or ``int``) entries
and never touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Sequence

Point = tuple  # tuple[Fraction, ...]


def as_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise TypeError(f"not a rational coordinate: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def as_point(coords) -> Point:
    return tuple(as_fraction(c) for c in coords)


def sign(x) -> int:
    return (x > 0) - (x < 0)


def sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def dot(p, q):
    return sum((a * b for a, b in zip(p, q)), Fraction(0))


def det(rows: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    k = len(rows)
    if k == 0:
        return Fraction(1)
    if k == 1:
        return Fraction(rows[0][0])
    if k == 2:
        (a, b), (c, d) = rows
        return Fraction(a * d - b * c)
    if k == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return Fraction(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))
    m = [list(map(Fraction, r)) for r in rows]
    result = Fraction(1)
    for col in range(k):
        pivot = next((r for r in range(col, k) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        p = m[col][col]
        result *= p
        for r in range(col + 1, k):
            f = m[r][col]
            if f:
                f /= p
                row, prow = m[r], m[col]
                for c in range(col, k):
                    row[c] -= f * prow[c]
    return result


def _echelon(rows):
    """Row-reduce a copy of ``rows``; return (reduced rows, pivot columns)."""
    m = [list(map(Fraction, r)) for r in rows]
    pivots = []
    if not m:
        return m, pivots
    width = len(m[0])
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(_echelon(rows)[1])


def affinely_independent(points) -> bool:
    if len(points) <= 1:
        return True
    base = points[0]
    return rank([sub(p, base) for p in points[1:]]) == len(points) - 1


def in_affine_hull(points, y) -> bool:
    base = points[0]
    dirs = [sub(p, base) for p in points[1:]]
    if not dirs:
        return tuple(y) == tuple(base)
    return rank(dirs + [sub(y, base)]) == rank(dirs)


def barycentric(points, y):
    """Barycentric coordinates of ``y`` w.r.t. affinely independent ``points``.

    Returns ``None`` when ``y`` is not in the affine hull.
    """
    k = len(points)
    dim = len(y)
    # columns: one unknown per point; rows: coordinates plus the affine row
    rows = [[points[j][i] for j in range(k)] + [y[i]] for i in range(dim)]
    rows.append([1] * k + [1])
    m, pivots = _echelon(rows)
    if k in pivots:
        return None
    if len(pivots) < k:
        raise ValueError("points are affinely dependent")
    lam = [Fraction(0)] * k
    for row, col in zip(m, pivots):
        lam[col] = row[k]
    return tuple(lam)


def normal_vector(dirs):
    """A vector orthogonal to ``d - 1`` direction vectors in R^d (cofactor rule)."""
    d = len(dirs) + 1
    out = []
    for j in range(d):
        minor = [[r[c] for c in range(d) if c != j] for r in dirs]
        v = det(minor)
        out.append(v if j % 2 == 0 else -v)
    return tuple(out)
