from fractions import Fraction as F

import pytest

from sperndeg._exact import (
    affinely_independent,
    as_fraction,
    as_point,
    barycentric,
    det,
    in_affine_hull,
    normal_vector,
    rank,
)


def test_as_fraction_accepts_ints_and_strings():
    assert as_fraction(3) == 3
    assert as_fraction("-2/6") == F(-1, 3)
    assert as_point([1, "1/2"]) == (F(1), F(1, 2))


@pytest.mark.parametrize("bad", [0.5, True, None])
def test_as_fraction_rejects_inexact(bad):
    with pytest.raises((TypeError, ValueError)):
        as_fraction(bad)


def test_det_matches_cofactor_expansion():
    rows = [[2, 0, 1, 3], [1, 1, 0, 2], [0, 3, 1, 1], [4, 1, 2, 0]]

    def cofactor(m):
        if len(m) == 1:
            return m[0][0]
        return sum((-1) ** j * m[0][j] * cofactor([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m)))

    assert det(rows) == cofactor(rows)
    assert det([[1, 2], [2, 4]]) == 0


def test_rank_and_affine_hull():
    pts = [(0, 0, 0), (1, 0, 0), (0, 1, 0)]
    assert affinely_independent(pts)
    assert not affinely_independent(pts + [(1, 1, 0)])
    assert in_affine_hull(pts, (5, 7, 0))
    assert not in_affine_hull(pts, (0, 0, 1))
    assert rank([[1, 2], [2, 4]]) == 1


def test_barycentric_roundtrip():
    pts = [as_point(p) for p in [(0, 0), (4, 0), (0, 2)]]
    lam = barycentric(pts, (1, F(1, 2)))
    assert sum(lam) == 1
    assert tuple(sum(l * p[k] for l, p in zip(lam, pts)) for k in range(2)) == (1, F(1, 2))
    assert barycentric([(0, 0, 0), (1, 0, 0)], (0, 1, 0)) is None


def test_normal_vector_is_orthogonal():
    dirs = [as_point(p) for p in [(1, 2, 3), (0, 1, -1)]]
    n = normal_vector(dirs)
    assert any(n)
    assert all(sum(a * b for a, b in zip(n, d)) == 0 for d in dirs)
