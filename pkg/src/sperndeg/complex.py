"""Exact-coordinate simplicial complexes.

Coordinates are :class:`fractions.Fraction` tuples. A :class:`Triangulation`
stores its top-dimensional simplices as vertex-id tuples whose order carries
the orientation; :func:`build_triangulation` validates raw input and
normalises every simplex to positive orientation.
"""

from __future__ import annotations

import itertools
import math
from array import array
from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from ._exact import affinely_independent, as_point, det, dot, normal_vector, sign, sub
from .errors import (
    DegenerateSimplex,
    IncoherentOrientation,
    InvalidTriangulation,
    NonManifoldFace,
    NotAntipodallySymmetric,
    OverlapDetected,
)

__all__ = [
    "Boundary",
    "BoundaryCycle",
    "Triangulation",
    "antipodal_pairs",
    "boundary",
    "build_triangulation",
    "canonical_face",
    "euler_characteristic",
    "induced_faces",
    "orientation_sign",
    "permutation_parity",
]


def orientation_sign(points: Sequence[Sequence]) -> int:
    """Sign of det[p1 - p0, ..., pd - p0] for d + 1 points in R^d."""
    d = len(points) - 1
    for p in points:
        if len(p) != d:
            raise ValueError(f"expected {d + 1} points of dimension {d}, got a point of dimension {len(p)}")
    if d == 2:
        (ax, ay), (bx, by), (cx, cy) = points
        return sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))
    if d == 1:
        return sign(points[1][0] - points[0][0])
    base = points[0]
    return sign(det([sub(p, base) for p in points[1:]]))


def permutation_parity(seq: Sequence[int]) -> int:
    """+1 if sorting ``seq`` needs an even number of transpositions, else -1."""
    parity = 1
    items = list(seq)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                parity = -parity
    return parity


def canonical_face(face: Sequence[int], orientation: int = 1) -> tuple[tuple[int, ...], int]:
    """Sorted vertex tuple together with the orientation it carries."""
    return tuple(sorted(face)), orientation * permutation_parity(face)


def induced_faces(simplex: Sequence[int]):
    """Yield ``(face, sign)``: the face opposite position i has sign (-1)^i."""
    for i in range(len(simplex)):
        yield tuple(simplex[:i]) + tuple(simplex[i + 1:]), (-1) ** i


def _oriented_tuple(face: tuple[int, ...], orientation: int) -> tuple[int, ...]:
    """Reorder a sorted face so that its vertex order carries ``orientation``."""
    if orientation > 0 or len(face) < 2:
        return face
    return (face[1], face[0]) + face[2:]


@dataclass(frozen=True)
class BoundaryCycle:
    """A closed loop of boundary vertices of a 2-dimensional triangulation.

    For oriented planar input the loop runs with the region on its left:
    the outer loop counterclockwise, holes clockwise.  ``is_outer`` is
    ``None`` when the classification does not apply (non-planar or
    non-orientable complexes).
    """

    vertex_loop: tuple[int, ...]
    is_outer: bool | None

    def __len__(self):
        return len(self.vertex_loop)

    def edges(self):
        loop = self.vertex_loop
        return [(loop[i], loop[(i + 1) % len(loop)]) for i in range(len(loop))]


@dataclass(frozen=True)
class Boundary:
    """Codimension-one faces lying in exactly one top simplex.

    ``faces`` holds ``(sorted_face, sign)`` pairs; the sign is the induced
    orientation of the face relative to its sorted vertex order.
    """

    faces: tuple[tuple[tuple[int, ...], int], ...]
    cycles: tuple[BoundaryCycle, ...]

    def __len__(self):
        return len(self.faces)

    def oriented_faces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_oriented_tuple(f, s) for f, s in self.faces)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for f, _ in self.faces for v in f)


@dataclass(frozen=True, eq=False)
class Triangulation:
    """A pure simplicial complex with exact vertex coordinates.

    Use :func:`build_triangulation` to construct validated instances; the
    constructor itself performs no checks.
    """

    dimension: int
    vertices: tuple[tuple[Fraction, ...], ...]
    simplices: tuple[tuple[int, ...], ...]
    orientable: bool = True

    @property
    def ambient(self) -> int:
        return len(self.vertices[0]) if self.vertices else self.dimension

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @cached_property
    def face_index(self) -> dict[tuple[int, ...], list[tuple[int, int]]]:
        """Map sorted (d-1)-face to ``[(simplex index, induced sign), ...]``."""
        index: dict[tuple[int, ...], list[tuple[int, int]]] = defaultdict(list)
        for k, s in enumerate(self.simplices):
            for face, sgn in induced_faces(s):
                key, o = canonical_face(face, sgn)
                index[key].append((k, o))
        return dict(index)

    @cached_property
    def boundary(self) -> Boundary:
        faces = sorted(
            (face, entries[0][1])
            for face, entries in self.face_index.items()
            if len(entries) == 1
        )
        cycles: tuple[BoundaryCycle, ...] = ()
        if self.dimension == 2:
            cycles = _assemble_cycles(self, faces)
        return Boundary(tuple(faces), cycles)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = set()
        for s in self.simplices:
            for a, b in itertools.combinations(s, 2):
                out.add((a, b) if a < b else (b, a))
        return tuple(sorted(out))

    @cached_property
    def boundary_edges(self) -> frozenset[tuple[int, int]]:
        out = set()
        for face, _ in self.boundary.faces:
            for a, b in itertools.combinations(face, 2):
                out.add((a, b) if a < b else (b, a))
        return frozenset(out)

    @cached_property
    def boundary_vertices(self) -> frozenset[int]:
        return self.boundary.vertices

    @cached_property
    def simplex_array(self) -> array:
        return array("q", [v for s in self.simplices for v in s])

    @cached_property
    def edge_array(self) -> array:
        return array("q", [v for e in self.edges for v in e])

    def __repr__(self):
        return (
            f"Triangulation(dimension={self.dimension}, vertices={len(self.vertices)}, "
            f"simplices={len(self.simplices)}, orientable={self.orientable})"
        )


def boundary(T: Triangulation) -> Boundary:
    return T.boundary


def _signed_area2(T: Triangulation, loop) -> Fraction:
    pts = [T.vertices[v] for v in loop]
    total = Fraction(0)
    for i in range(len(pts)):
        (x0, y0), (x1, y1) = pts[i], pts[(i + 1) % len(pts)]
        total += x0 * y1 - x1 * y0
    return total


def _assemble_cycles(T: Triangulation, faces) -> tuple[BoundaryCycle, ...]:
    loops = []
    if T.orientable:
        succ: dict[int, int] = {}
        for face, s in faces:
            a, b = _oriented_tuple(face, s)
            if a in succ:
                raise NonManifoldFace((a,), [], message=f"boundary pinches at vertex {a}")
            succ[a] = b
        seen: set[int] = set()
        for start in sorted(succ):
            if start in seen:
                continue
            loop = [start]
            seen.add(start)
            v = succ[start]
            while v != start:
                if v in seen or v not in succ:
                    raise NonManifoldFace((v,), [], message=f"boundary pinches at vertex {v}")
                loop.append(v)
                seen.add(v)
                v = succ[v]
            loops.append(tuple(loop))
    else:
        nbrs: dict[int, list[int]] = defaultdict(list)
        for (a, b), _ in faces:
            nbrs[a].append(b)
            nbrs[b].append(a)
        for v, ns in nbrs.items():
            if len(ns) != 2:
                raise NonManifoldFace((v,), [], message=f"boundary pinches at vertex {v}")
        seen = set()
        for start in sorted(nbrs):
            if start in seen:
                continue
            loop = [start]
            seen.add(start)
            prev, v = start, min(nbrs[start])
            while v != start:
                loop.append(v)
                seen.add(v)
                a, b = nbrs[v]
                prev, v = v, (b if a == prev else a)
            loops.append(tuple(loop))

    planar = T.orientable and T.ambient == 2
    cycles = []
    for loop in loops:
        is_outer = (_signed_area2(T, loop) > 0) if planar else None
        cycles.append(BoundaryCycle(loop, is_outer))
    cycles.sort(key=lambda c: (not c.is_outer, c.vertex_loop[0]))
    return tuple(cycles)


def euler_characteristic(T: Triangulation) -> int:
    faces = set()
    for s in T.simplices:
        for k in range(1, len(s) + 1):
            for f in itertools.combinations(sorted(s), k):
                faces.add(f)
    return sum((-1) ** (len(f) - 1) for f in faces)


# -- construction and validation -------------------------------------------

def build_triangulation(
    dimension: int,
    vertices: Iterable[Sequence],
    simplices: Iterable[Sequence[int]],
    *,
    orientable: bool = True,
    auto_orient: bool = True,
    check_geometry: bool | None = None,
) -> Triangulation:
    """Validate raw data and return a :class:`Triangulation`.

    ``check_geometry`` defaults to ``True`` for planar complexes in the plane
    and ``False`` otherwise.  With ``auto_orient`` negatively oriented
    simplices are reordered instead of rejected.
    """
    if dimension < 1:
        raise InvalidTriangulation("dimension must be at least 1")
    pts = tuple(as_point(p) for p in vertices)
    raw = [tuple(int(v) for v in s) for s in simplices]
    if not raw:
        raise InvalidTriangulation("no simplices")
    ambient = len(pts[0]) if pts else 0
    for i, p in enumerate(pts):
        if len(p) != ambient:
            raise InvalidTriangulation(f"vertex {i} has {len(p)} coordinates, expected {ambient}")
    if ambient < dimension:
        raise InvalidTriangulation(f"ambient dimension {ambient} is smaller than {dimension}")
    seen_sets = {}
    for s in raw:
        if len(s) != dimension + 1:
            raise InvalidTriangulation(f"simplex {s} does not have {dimension + 1} vertices")
        for v in s:
            if not 0 <= v < len(pts):
                raise InvalidTriangulation(f"simplex {s} references unknown vertex {v}")
        if len(set(s)) != len(s):
            raise DegenerateSimplex(s, f"simplex {s} repeats a vertex")
        key = frozenset(s)
        if key in seen_sets:
            raise OverlapDetected(seen_sets[key], s, f"simplex {s} is listed twice")
        seen_sets[key] = s

    used = sorted({v for s in raw for v in s})
    by_point: dict = {}
    for v in used:
        if pts[v] in by_point:
            raise InvalidTriangulation(f"vertices {by_point[pts[v]]} and {v} coincide")
        by_point[pts[v]] = v

    simplices_out = []
    for s in raw:
        if ambient == dimension:
            o = orientation_sign([pts[v] for v in s])
            if o == 0:
                raise DegenerateSimplex(s)
            if o < 0 and orientable:
                if not auto_orient:
                    raise IncoherentOrientation(s)
                s = s[:-2] + (s[-1], s[-2])
        elif not affinely_independent([pts[v] for v in s]):
            raise DegenerateSimplex(s)
        simplices_out.append(s)

    T = Triangulation(dimension, pts, tuple(simplices_out), orientable)

    for face, entries in T.face_index.items():
        if len(entries) > 2:
            raise NonManifoldFace(face, [T.simplices[k] for k, _ in entries])

    if orientable:
        if ambient == dimension:
            _check_coherent(T)
        else:
            T = _orient_combinatorially(T, auto_orient)

    if check_geometry is None:
        check_geometry = ambient == dimension == 2
    if check_geometry:
        if ambient != dimension:
            raise InvalidTriangulation("geometric validation needs ambient dimension equal to the simplex dimension")
        _check_geometry(T)

    T.boundary  # assembles cycles; raises on pinched boundaries
    return T


def _check_coherent(T: Triangulation) -> None:
    for face, entries in T.face_index.items():
        if len(entries) == 2 and entries[0][1] == entries[1][1]:
            raise IncoherentOrientation(T.simplices[entries[0][0]], T.simplices[entries[1][0]])


def _orient_combinatorially(T: Triangulation, auto_orient: bool) -> Triangulation:
    count = len(T.simplices)
    nbrs: dict[int, list[tuple[int, bool]]] = defaultdict(list)
    for entries in T.face_index.values():
        if len(entries) == 2:
            (i, oi), (j, oj) = entries
            same = oi == oj  # same induced sign means one of them must flip
            nbrs[i].append((j, same))
            nbrs[j].append((i, same))
    flip = [None] * count
    for root in range(count):
        if flip[root] is not None:
            continue
        flip[root] = False
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j, same in nbrs[i]:
                want = flip[i] ^ same
                if flip[j] is None:
                    flip[j] = want
                    queue.append(j)
                elif flip[j] != want:
                    raise IncoherentOrientation(
                        T.simplices[i], T.simplices[j],
                        message=f"no coherent orientation exists (conflict between {T.simplices[i]} and {T.simplices[j]}); "
                        "pass orientable=False for non-orientable complexes",
                    )
    if not any(flip):
        return T
    if not auto_orient:
        k = flip.index(True)
        raise IncoherentOrientation(T.simplices[k])
    simplices = tuple(
        (s[:-2] + (s[-1], s[-2])) if f else s for s, f in zip(T.simplices, flip)
    )
    return Triangulation(T.dimension, T.vertices, simplices, T.orientable)


def _bbox(points):
    return tuple(min(c) for c in zip(*points)), tuple(max(c) for c in zip(*points))


def _separating_normals(A, B):
    d = len(A[0])
    seen = set()
    for i in range(d):
        j = d - 1 - i
        for fa in itertools.combinations(A, i + 1):
            for fb in itertools.combinations(B, j + 1):
                dirs = [sub(p, fa[0]) for p in fa[1:]] + [sub(p, fb[0]) for p in fb[1:]]
                n = normal_vector(dirs) if dirs else (Fraction(1),)
                if any(n) and n not in seen:
                    seen.add(n)
                    yield n


def interiors_overlap(A, B) -> bool:
    """Exact test whether two full-dimensional simplices share interior points."""
    if len(A[0]) == 2:
        for P, Q in ((A, B), (B, A)):
            for k in range(3):
                a, b = P[k], P[(k + 1) % 3]
                c = P[(k + 2) % 3]
                side = orientation_sign([a, b, c])
                if all(orientation_sign([a, b, q]) * side <= 0 for q in Q):
                    return False
        return True
    for n in _separating_normals(A, B):
        pa = [dot(n, p) for p in A]
        pb = [dot(n, p) for p in B]
        if max(pa) <= min(pb) or max(pb) <= min(pa):
            return False
    return True


def point_in_closed_simplex(simplex_points, y) -> bool:
    o = orientation_sign(simplex_points)
    for i in range(len(simplex_points)):
        pts = list(simplex_points)
        pts[i] = y
        if orientation_sign(pts) * o < 0:
            return False
    return True


def _integer_coords(points):
    """Scale by the common denominator; orientation predicates are unchanged."""
    scale = math.lcm(*(Fraction(c).denominator for p in points for c in p)) if points else 1
    return [tuple(int(c * scale) for c in p) for p in points]


def _check_geometry(T: Triangulation) -> None:
    pts = _integer_coords(T.vertices)
    items = []
    for s in T.simplices:
        P = [pts[v] for v in s]
        lo, hi = _bbox(P)
        items.append((lo, hi, s, P))
    items.sort(key=lambda it: it[0][0])
    for a in range(len(items)):
        lo_a, hi_a, sa, Pa = items[a]
        for b in range(a + 1, len(items)):
            lo_b, hi_b, sb, Pb = items[b]
            if lo_b[0] > hi_a[0]:
                break
            if any(lo_b[k] > hi_a[k] or lo_a[k] > hi_b[k] for k in range(1, len(lo_a))):
                continue
            if interiors_overlap(Pa, Pb):
                raise OverlapDetected(sa, sb)
            for s1, s2, P1 in ((sa, sb, Pa), (sb, sa, Pb)):
                for v in s2:
                    if v not in s1 and point_in_closed_simplex(P1, pts[v]):
                        raise OverlapDetected(
                            s1, s2,
                            message=f"vertex {v} of {s2} lies on {s1} without being one of its vertices",
                        )


def antipodal_pairs(T: Triangulation) -> dict[int, int]:
    """Pair each boundary vertex with the boundary vertex at its negated position."""
    bverts = sorted(T.boundary_vertices)
    by_point = {T.vertices[v]: v for v in bverts}
    pairs: dict[int, int] = {}
    for v in bverts:
        neg = tuple(-c for c in T.vertices[v])
        w = by_point.get(neg)
        if w is None:
            raise NotAntipodallySymmetric(
                f"boundary vertex {v} at {_fmt(T.vertices[v])} has no antipodal boundary vertex"
            )
        if w == v:
            raise NotAntipodallySymmetric(f"boundary vertex {v} is its own antipode")
        pairs[v] = w
    face_sets = {frozenset(f) for f, _ in T.boundary.faces}
    for f, _ in T.boundary.faces:
        if frozenset(pairs[v] for v in f) not in face_sets:
            raise NotAntipodallySymmetric(f"boundary face {f} has no antipodal boundary face")
    return pairs


def _fmt(p) -> str:
    return "(" + ", ".join(str(c) for c in p) + ")"
