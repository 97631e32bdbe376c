"""Bundled example instances.

Each builder constructs its instance from scratch; the JSON files under
``data/`` are the canonical serializations of these builders and are
regenerated with ``python3 -m sperndeg.fixtures <directory>``.  Several are
analogues of hand-drawn figures: the geometry is ours, chosen so that the
quantities the figures illustrate (degree, number of witnesses) come out the
same.
"""

from __future__ import annotations

import math
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .complex import build_triangulation
from .cover import regular_polygon, standard_simplex
from .document import Instance, parse, serialize
from .generator import _split_at, polygon_fan, refine, symmetric_disk, triangulate_polygon
from .labelling import Labelling, SignedLabelling

__all__ = ["BUILDERS", "build", "load_fixture", "names", "write_all"]

WORKED_SEQUENCE = (1, 2, 2, 1, 2, 3, 1, 2, 3, 2, 1, 1, 2, 2, 3, 1, 2, 3, 1)

PENTAGON = ((0, 0), (4, 0), (5, 3), (2, 5), (-1, 3))
PENTAGON_POINTS = {"p1": (2, 1), "p2": (0, Fraction(5, 2)), "p3": (3, 4), "O": (1, 2)}

UNIT_SQUARE = ((0, 0), (1, 0), (1, 1), (0, 1))


def _with_points(T, pts):
    verts, tris = T.vertices, T.simplices
    for p in pts:
        verts, tris = _split_at(verts, tris, tuple(Fraction(c) for c in p))
    return build_triangulation(2, verts, tris)


def worked_sequence_fan() -> Instance:
    P = regular_polygon(len(WORKED_SEQUENCE))
    T = polygon_fan(P.vertices, center=(0, 0))
    lab = Labelling(3, WORKED_SEQUENCE + (1,))
    return Instance.from_objects(
        T, lab, note="19-gon coned to its centre; the boundary reads the worked sequence, degree 3"
    )


def nonagon_degree3() -> Instance:
    P = regular_polygon(9)
    T = polygon_fan(P.vertices, center=(0, 0))
    lab = Labelling(3, (1, 2, 3) * 3 + (1,))
    return Instance.from_objects(
        T, lab, polytope=standard_simplex(2).vertices,
        note="boundary degree 3 with exactly three fully coloured triangles",
    )


def octagon_two_holes() -> Instance:
    outer = [(2, 0), (5, 0), (7, 2), (7, 5), (5, 7), (2, 7), (0, 5), (0, 2)]
    holes = [[(1, 2), (3, 2), (3, 4), (1, 4)], [(4, 3), (6, 3), (6, 5), (4, 5)]]
    T = triangulate_polygon(outer, holes)
    labels = [0] * T.num_vertices
    for c in T.boundary.cycles:
        for i, v in enumerate(c.vertex_loop):
            labels[v] = i % 4 + 1
    return Instance.from_objects(
        T, Labelling(4, labels), polytope=UNIT_SQUARE,
        note="n = 4, outer degree 2 and each hole degree 1; exactly eight fully labelled triangles",
    )


def symmetric_square_degree1() -> Instance:
    T = symmetric_disk(2)
    sl = SignedLabelling(2, (1, 2, -1, -2, 1))
    return Instance.from_objects(T, sl, note="antipodal boundary of degree 1 with one complementary edge")


def symmetric_disk_degree3() -> Instance:
    T = symmetric_disk(6)
    sl = SignedLabelling(2, (1, 2, -1, -2) * 3 + (1,))
    return Instance.from_objects(T, sl, note="antipodal boundary of degree 3 with three complementary edges")


def boundary_complementary() -> Instance:
    T = symmetric_disk(2)
    sl = SignedLabelling(2, (1, -1, -1, 1, 2))
    return Instance.from_objects(T, sl, note="antipodal labelling with complementary boundary edges")


def ky_fan_hexagon() -> Instance:
    ring = symmetric_disk(3).vertices[:6]
    tris = [(0, 2, 4), (0, 1, 2), (2, 3, 4), (4, 5, 0)]
    T = build_triangulation(2, ring, tris)
    sl = SignedLabelling(3, (1, 2, 3, -1, -2, -3))
    return Instance.from_objects(T, sl, note="no complementary edges; one alternating triangle")


def mobius_band() -> Instance:
    m = 5

    def rp(x):
        return Fraction(x).limit_denominator(64)

    pts = []
    for k in range(m):
        u = 2 * math.pi * k / m
        for v in (-0.5, 0.5):
            r = 1 + v * math.cos(u / 2)
            pts.append((rp(r * math.cos(u)), rp(r * math.sin(u)), rp(v * math.sin(u / 2))))

    def idx(k, s):
        return 2 * (k % m) + (s if (k // m) % 2 == 0 else 1 - s)

    tris = []
    for k in range(m):
        tris.append((idx(k, 0), idx(k, 1), idx(k + 1, 0)))
        tris.append((idx(k, 1), idx(k + 1, 1), idx(k + 1, 0)))
    T = build_triangulation(2, pts, tris, orientable=False)
    labels = [0] * T.num_vertices
    loop = T.boundary.cycles[0].vertex_loop
    for i, v in enumerate(loop):
        labels[v] = 1 if i < 3 else 2 if i < 6 else 3
    return Instance.from_objects(
        T, Labelling(3, labels), polytope=standard_simplex(2).vertices,
        note="Moebius band in space; its single boundary loop winds once around the triangle",
    )


def pentagon_pebbles() -> Instance:
    T = build_triangulation(2, [(0, 0), (1, 0), (0, 1)], [(0, 1, 2)])
    return Instance.from_objects(
        T, Labelling(5, (1, 4, 5)), polytope=PENTAGON,
        points=[PENTAGON_POINTS[k] for k in ("p1", "p2", "p3", "O")],
        note="pentagon with pebbles p1, p2, p3 and an interior point O (listed in that order)",
    )


def annulus() -> Instance:
    outer = [(0, 0), (3, 0), (3, 3), (0, 3)]
    hole = [(1, 1), (2, 1), (2, 2), (1, 2)]
    T = _with_points(triangulate_polygon(outer, [hole]), [(Fraction(1, 2), Fraction(1, 4)), (Fraction(11, 4), Fraction(3, 2))])
    labels = [1] * T.num_vertices
    for c in T.boundary.cycles:
        for i, v in enumerate(c.vertex_loop):
            labels[v] = i % 4 + 1
    return Instance.from_objects(T, Labelling(4, labels), polytope=UNIT_SQUARE, note="annulus with two interior vertices")


def _triangle(points) -> object:
    return _with_points(refine(build_triangulation(2, standard_simplex(2).vertices, [(0, 1, 2)]), 1), points)


def triangle_7() -> Instance:
    T = _triangle([(Fraction(1, 5), Fraction(1, 5))])
    # corners 1, 2, 3; midpoints of edges 01, 02, 12 then the interior point
    lab = Labelling(3, (1, 2, 3, 1, 3, 2, 2))
    return Instance.from_objects(T, lab, polytope=standard_simplex(2).vertices, note="triangle with 7 vertices, Sperner labelled")


def triangle_9() -> Instance:
    pts = [(Fraction(1, 5), Fraction(1, 5)), (Fraction(3, 5), Fraction(1, 5)), (Fraction(1, 5), Fraction(3, 5))]
    T = _triangle(pts)
    lab = Labelling(3, (1, 2, 3, 2, 3, 3, 1, 2, 3))
    return Instance.from_objects(T, lab, polytope=standard_simplex(2).vertices, note="triangle with 9 vertices")


def symmetric_disk_two_interior() -> Instance:
    T = _with_points(symmetric_disk(4), [(Fraction(1, 4), Fraction(1, 8))])
    sl = SignedLabelling(2, (1, 1, 2, 2, -1, -1, -2, -2, 1, 1))
    return Instance.from_objects(T, sl, note="eight antipodal boundary vertices and two interior vertices")


def cone_ball_3d() -> Instance:
    from .generator import cone_ball

    T = cone_ball(3)
    sl = SignedLabelling(3, (1, 2, 3, -1, -2, -3, 1))
    return Instance.from_objects(T, sl, note="octahedron coned to the origin, identity labelling on the boundary")


BUILDERS = {
    "worked_sequence_fan": worked_sequence_fan,
    "nonagon_degree3": nonagon_degree3,
    "octagon_two_holes": octagon_two_holes,
    "symmetric_square_degree1": symmetric_square_degree1,
    "symmetric_disk_degree3": symmetric_disk_degree3,
    "boundary_complementary": boundary_complementary,
    "ky_fan_hexagon": ky_fan_hexagon,
    "mobius_band": mobius_band,
    "pentagon_pebbles": pentagon_pebbles,
    "annulus": annulus,
    "triangle_7": triangle_7,
    "triangle_9": triangle_9,
    "symmetric_disk_two_interior": symmetric_disk_two_interior,
    "cone_ball_3d": cone_ball_3d,
}


def names() -> list[str]:
    return list(BUILDERS)


def build(name: str) -> Instance:
    return BUILDERS[name]()


def fixture_text(name: str) -> str:
    return resources.files("sperndeg").joinpath("data", f"{name}.json").read_text(encoding="utf-8")


def load_fixture(name: str) -> Instance:
    return parse(fixture_text(name))


def write_all(directory) -> list[Path]:
    out = []
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for name in BUILDERS:
        path = directory / f"{name}.json"
        path.write_text(serialize(build(name)), encoding="utf-8", newline="\n")
        out.append(path)
    return out


if __name__ == "__main__":
    for p in write_all(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent / "data"):
        print(p)
