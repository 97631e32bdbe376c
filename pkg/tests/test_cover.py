import itertools
from fractions import Fraction as F

import pytest

from sperndeg.complex import build_triangulation
from sperndeg.cover import (
    acs_violation,
    carrier,
    centrally_symmetric_polygon,
    check_triangulates,
    cov,
    crosspolytope,
    find_generic_point,
    generic_witness,
    is_acs_polytope,
    is_alternating,
    is_generic,
    is_pebble_set,
    is_sperner,
    make_polytope,
    pebble_set,
    regular_polygon,
    standard_simplex,
)
from sperndeg.errors import InvalidPolytope, NotATriangulationOfP, NotCentrallySymmetric
from sperndeg.fixtures import PENTAGON, PENTAGON_POINTS, load_fixture
from sperndeg.labelling import Labelling


def _tri_contains(a, b, c, y):
    """Closed triangle containment via three cross products (test oracle)."""
    def cross(p, q, r):
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    s = [cross(a, b, y), cross(b, c, y), cross(c, a, y)]
    return all(x >= 0 for x in s) or all(x <= 0 for x in s)


def _oracle_cov(vertices, y):
    pts = [tuple(F(c) for c in p) for p in vertices]
    out = []
    for i, j, k in itertools.combinations(range(len(pts)), 3):
        if _tri_contains(pts[i], pts[j], pts[k], y):
            out.append((i + 1, j + 1, k + 1))
    return out


def test_pentagon_cover_sets():
    P = make_polytope(PENTAGON)
    assert cov(P, PENTAGON_POINTS["p1"]).simplices == ((1, 2, 3), (1, 2, 4), (1, 2, 5))
    assert cov(P, PENTAGON_POINTS["p2"]).simplices == ((1, 3, 5), (1, 4, 5), (2, 3, 5), (2, 4, 5))
    assert cov(P, PENTAGON_POINTS["p3"]).simplices == ((1, 3, 4), (2, 3, 4), (3, 4, 5))
    assert cov(P, PENTAGON_POINTS["O"]).simplices == ((1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5))
    for y in PENTAGON_POINTS.values():
        assert list(cov(P, y).simplices) == _oracle_cov(PENTAGON, tuple(F(c) for c in y))
    pebbles = [PENTAGON_POINTS[k] for k in ("p1", "p2", "p3")]
    assert is_pebble_set(P, pebbles)
    assert not is_pebble_set(P, pebbles + [PENTAGON_POINTS["O"]])


def test_triangle_cover_is_single_simplex():
    P = standard_simplex(2)
    c = cov(P, (F(1, 5), F(1, 7)))
    assert c.simplices == ((1, 2, 3),)
    assert (3, 1, 2) in c
    assert c.generic


def test_genericity():
    P = make_polytope([(0, 0), (2, 0), (2, 2), (0, 2)])
    assert generic_witness(P, (1, 1)) is not None
    assert not is_generic(P, (1, 1))
    y = find_generic_point(P)
    assert is_generic(P, y) and P.in_interior(y)
    lower = cov(P, (1, 1)).lower_faces
    assert (1, 3) in lower and (2, 4) in lower


def test_polygon_validation():
    with pytest.raises(InvalidPolytope):
        make_polytope([(0, 0), (0, 1), (1, 0)])  # clockwise
    with pytest.raises(InvalidPolytope):
        make_polytope([(0, 0), (1, 0), (2, 0), (1, 1)])  # collinear vertex
    with pytest.raises(InvalidPolytope):
        make_polytope([(0, 0), (4, 0), (1, 1), (0, 4)])  # reflex vertex


def test_three_dimensional_facets():
    cube = make_polytope(list(itertools.product((0, 1), repeat=3)))
    assert len(cube.facets) == 6
    assert all(len(f.vertices) == 4 for f in cube.facets)
    assert len(crosspolytope(3).facets) == 8
    with pytest.raises(InvalidPolytope):
        make_polytope(list(itertools.product((0, 2), repeat=3)) + [(1, 1, 1)])
    with pytest.raises(InvalidPolytope):
        make_polytope(list(itertools.product((0, 2), repeat=3)) + [(1, 0, 0)])


def test_regular_polygons_are_valid():
    for n in range(3, 13):
        P = regular_polygon(n)
        assert P.n == n and len(P.facets) == n
        assert all(x * x + y * y == 1 for x, y in P.vertices)


@pytest.mark.parametrize("n", range(3, 13))
def test_pebble_set_construction(n):
    P = regular_polygon(n)
    pts = pebble_set(P)
    assert len(pts) == n - 2
    assert is_pebble_set(P, pts)
    covers = [set(_oracle_cov(P.vertices, y)) for y in pts]
    assert all(not (a & b) for a, b in itertools.combinations(covers, 2))


def test_carrier_and_sperner():
    P = standard_simplex(2)
    assert carrier(P, (0, 0)) == (1,)
    assert carrier(P, (F(1, 2), 0)) == (1, 2)
    assert carrier(P, (F(1, 4), F(1, 4))) == (1, 2, 3)
    with pytest.raises(NotATriangulationOfP):
        carrier(P, (1, 1))
    doc = load_fixture("triangle_7")
    T = doc.triangulation()
    check_triangulates(T, P)
    assert is_sperner(T, P, doc.labelling())
    assert not is_sperner(T, P, Labelling(3, (2, 2, 3, 1, 3, 2, 2)))
    small = build_triangulation(2, [(0, 0), (F(1, 2), 0), (0, F(1, 2))], [(0, 1, 2)])
    with pytest.raises(NotATriangulationOfP):
        check_triangulates(small, P)


@pytest.mark.parametrize("labels,expected", [
    ((2, -3, 5), True),
    ((-1, 2, -4), True),
    ((1, -2, -3), False),
    ((1, 2, 3), False),
    ((1, -1, 2), False),
    ((3, -2, 1), True),
])
def test_is_alternating(labels, expected):
    assert is_alternating(labels) is expected


def test_acs_polytopes():
    for n in range(2, 7):
        assert is_acs_polytope(centrally_symmetric_polygon(n))
    assert is_acs_polytope(crosspolytope(2))
    assert acs_violation(crosspolytope(3)) is None
    with pytest.raises(NotCentrallySymmetric):
        acs_violation(regular_polygon(5))
