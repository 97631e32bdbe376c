"""Target polytopes and the simplices spanned by their vertices.

Vertex indices of a :class:`Polytope` are 1-based everywhere in this module
so that they coincide with labels.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import NamedTuple, Sequence

from ._exact import affinely_independent, as_point, barycentric, dot, in_affine_hull, normal_vector, rank, sub
from .complex import Triangulation, orientation_sign
from .errors import (
    InvalidPolytope,
    NotATriangulationOfP,
    NotCentrallySymmetric,
    PebbleSetUnavailable,
    SearchExhausted,
)

__all__ = [
    "CoverSet",
    "Facet",
    "PebbleCheck",
    "Polytope",
    "acs_violation",
    "carrier",
    "centrally_symmetric_polygon",
    "check_triangulates",
    "cov",
    "crosspolytope",
    "find_generic_point",
    "full_cover",
    "generic_points",
    "generic_witness",
    "is_acs_polytope",
    "is_alternating",
    "is_generic",
    "is_pebble_set",
    "is_sperner",
    "make_polytope",
    "pebble_set",
    "rational_circle_point",
    "regular_polygon",
    "standard_simplex",
]


@dataclass(frozen=True)
class Facet:
    normal: tuple[Fraction, ...]  # outward
    offset: Fraction  # normal . x <= offset holds on the polytope
    vertices: tuple[int, ...]  # 1-based


@dataclass(frozen=True, eq=False)
class Polytope:
    """A full-dimensional convex polytope given by its vertex list.

    In the plane the vertices are in counterclockwise order, which fixes the
    cyclic order of the labels.  Build instances with :func:`make_polytope`.
    """

    vertices: tuple[tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.vertices[0])

    @property
    def n(self) -> int:
        return len(self.vertices)

    def point(self, i: int):
        return self.vertices[i - 1]

    @cached_property
    def facets(self) -> tuple[Facet, ...]:
        return _facets(self.vertices)

    @cached_property
    def facet_vertex_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(f.vertices) for f in self.facets)

    def contains(self, y) -> bool:
        return all(dot(f.normal, y) <= f.offset for f in self.facets)

    def in_interior(self, y) -> bool:
        return all(dot(f.normal, y) < f.offset for f in self.facets)

    def __repr__(self):
        return f"Polytope(dimension={self.dimension}, n={self.n})"


def make_polytope(vertices: Sequence[Sequence]) -> Polytope:
    pts = tuple(as_point(p) for p in vertices)
    if not pts:
        raise InvalidPolytope("a polytope needs vertices")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise InvalidPolytope("vertices have different dimensions")
    if len(pts) < d + 1:
        raise InvalidPolytope(f"need at least {d + 1} vertices in dimension {d}")
    if len(set(pts)) != len(pts):
        raise InvalidPolytope("repeated vertex")
    if rank([sub(p, pts[0]) for p in pts[1:]]) != d:
        raise InvalidPolytope("vertices are not full-dimensional")
    if d == 2:
        n = len(pts)
        for i in range(n):
            a, b = pts[i], pts[(i + 1) % n]
            for k in range(n):
                if k not in (i, (i + 1) % n) and orientation_sign([a, b, pts[k]]) <= 0:
                    raise InvalidPolytope(
                        f"vertices are not in strictly convex counterclockwise order (vertex {k + 1} vs edge {i + 1}-{(i + 1) % n + 1})"
                    )
    P = Polytope(pts)
    if d > 2:
        for i in range(1, P.n + 1):
            normals = [f.normal for f in P.facets if i in f.vertices]
            if not normals or rank(normals) < d:
                raise InvalidPolytope(f"vertex {i} is not in convex position")
    return P


def _facets(pts) -> tuple[Facet, ...]:
    n, d = len(pts), len(pts[0])
    if d == 2:
        out = []
        for i in range(n):
            a, b = pts[i], pts[(i + 1) % n]
            normal = (b[1] - a[1], a[0] - b[0])
            out.append(Facet(normal, dot(normal, a), (i + 1, (i + 1) % n + 1)))
        return tuple(out)
    found = {}
    for subset in itertools.combinations(range(n), d):
        sp = [pts[i] for i in subset]
        if not affinely_independent(sp):
            continue
        normal = normal_vector([sub(p, sp[0]) for p in sp[1:]])
        off = dot(normal, sp[0])
        vals = [dot(normal, p) for p in pts]
        if all(v <= off for v in vals):
            pass
        elif all(v >= off for v in vals):
            normal, off = tuple(-c for c in normal), -off
        else:
            continue
        verts = tuple(i + 1 for i, v in enumerate(vals) if dot(normal, pts[i]) == off)
        if verts not in found:
            found[verts] = Facet(normal, off, verts)
    return tuple(found[k] for k in sorted(found))


# -- reference polytopes ----------------------------------------------------

def rational_circle_point(angle: float, max_denominator: int = 1000):
    """A point exactly on the unit circle near ``angle`` (in (-pi, pi))."""
    t = Fraction(math.tan(angle / 2)).limit_denominator(max_denominator)
    return ((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t))


@lru_cache(maxsize=None)
def regular_polygon(n: int) -> Polytope:
    """Rational approximant of a regular n-gon, counterclockwise, on the unit circle."""
    if n < 3:
        raise InvalidPolytope("a polygon needs at least 3 vertices")
    return make_polytope(
        [rational_circle_point(-math.pi + 2 * math.pi * (j + 0.5) / n) for j in range(n)]
    )


@lru_cache(maxsize=None)
def centrally_symmetric_polygon(n: int) -> Polytope:
    """2n-gon listed as p_1..p_n, -p_1..-p_n in counterclockwise order."""
    if n < 2:
        raise InvalidPolytope("need n >= 2")
    half = [rational_circle_point(math.pi * (j + 0.5) / n) for j in range(n)]
    return make_polytope(half + [tuple(-c for c in p) for p in half])


@lru_cache(maxsize=None)
def standard_simplex(d: int) -> Polytope:
    verts = [tuple(Fraction(0) for _ in range(d))]
    for i in range(d):
        verts.append(tuple(Fraction(int(i == j)) for j in range(d)))
    return make_polytope(verts)


@lru_cache(maxsize=None)
def crosspolytope(d: int) -> Polytope:
    """Vertices e_1..e_d, -e_1..-e_d: label +k -> e_k, -k -> -e_k."""
    pos = [tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d)]
    return make_polytope(pos + [tuple(-c for c in p) for p in pos])


# -- cover sets -------------------------------------------------------------

@dataclass(frozen=True)
class CoverSet:
    """Vertex-index simplices of P containing a point (closed containment)."""

    point: tuple[Fraction, ...]
    simplices: tuple[tuple[int, ...], ...]
    lower_faces: tuple[tuple[int, ...], ...]
    generic: bool

    def __len__(self):
        return len(self.simplices)

    def __iter__(self):
        return iter(self.simplices)

    def __contains__(self, item):
        return tuple(sorted(item)) in self._index

    @cached_property
    def _index(self):
        return frozenset(self.simplices)


def _contains_closed(points, y) -> bool:
    lam = barycentric(points, y)
    return lam is not None and all(x >= 0 for x in lam)


@lru_cache(maxsize=4096)
def full_cover(P: Polytope, y) -> tuple[tuple[int, ...], ...]:
    """Only the full-dimensional simplices of ``cov(P, y)``."""
    d, n = P.dimension, P.n
    pts = P.vertices
    full = []
    for subset in itertools.combinations(range(n), d + 1):
        sp = [pts[i] for i in subset]
        o = orientation_sign(sp)
        if o == 0:
            continue
        inside = True
        for k in range(d + 1):
            q = list(sp)
            q[k] = y
            if orientation_sign(q) * o < 0:
                inside = False
                break
        if inside:
            full.append(tuple(i + 1 for i in subset))
    return tuple(full)


@lru_cache(maxsize=4096)
def _cov_cached(P: Polytope, y) -> CoverSet:
    d, n = P.dimension, P.n
    pts = P.vertices
    full = full_cover(P, y)
    lower = []
    for size in range(1, d + 1):
        for subset in itertools.combinations(range(n), size):
            sp = [pts[i] for i in subset]
            if affinely_independent(sp) and _contains_closed(sp, y):
                lower.append(tuple(i + 1 for i in subset))
    return CoverSet(y, tuple(full), tuple(lower), generic_witness(P, y) is None)


def cov(P: Polytope, y) -> CoverSet:
    """All simplices spanned by vertices of ``P`` that contain ``y``."""
    y = as_point(y)
    if len(y) != P.dimension:
        raise ValueError(f"point has dimension {len(y)}, polytope has {P.dimension}")
    return _cov_cached(P, y)


@lru_cache(maxsize=4096)
def _generic_witness_cached(P: Polytope, y):
    d = P.dimension
    pts = P.vertices
    for subset in itertools.combinations(range(P.n), d):
        sp = [pts[i] for i in subset]
        if d == 2:
            if orientation_sign([sp[0], sp[1], y]) == 0:
                return tuple(i + 1 for i in subset)
        elif in_affine_hull(sp, y):
            return tuple(i + 1 for i in subset)
    return None


def generic_witness(P: Polytope, y):
    """A d-subset of vertices whose affine span contains ``y``, or ``None``."""
    return _generic_witness_cached(P, as_point(y))


def is_generic(P: Polytope, y) -> bool:
    return generic_witness(P, y) is None


def find_generic_point(P: Polytope, start: int = 0):
    """Deterministic generic interior point: the centroid nudged by (1/q, 1/q^2, ...)."""
    d = P.dimension
    centroid = tuple(sum(c) / P.n for c in zip(*P.vertices))
    q = 3 + 2 * start
    while True:
        y = tuple(centroid[k] + Fraction(1, q ** (k + 1)) for k in range(d))
        if P.in_interior(y) and is_generic(P, y):
            return y
        q += 2


def generic_points(P: Polytope, count: int, rng):
    """``count`` distinct generic interior points from random rational convex weights."""
    out = []
    while len(out) < count:
        weights = [Fraction(rng.randint(1, 997)) for _ in range(P.n)]
        total = sum(weights)
        y = tuple(sum(w * p[k] for w, p in zip(weights, P.vertices)) / total for k in range(P.dimension))
        if y not in out and P.in_interior(y) and is_generic(P, y):
            out.append(y)
    return out


# -- pebble sets --------------------------------------------------------------

class PebbleCheck(NamedTuple):
    ok: bool
    reason: str = ""
    pair: tuple[int, int] | None = None
    shared: tuple[int, ...] | None = None

    def __bool__(self):
        return self.ok


def is_pebble_set(P: Polytope, points) -> PebbleCheck:
    """Exact check that the points are generic, interior and have disjoint cover sets."""
    pts = [as_point(p) for p in points]
    covers = []
    for i, y in enumerate(pts):
        if not P.in_interior(y):
            return PebbleCheck(False, f"point {i} is not interior to P", (i, i))
        w = generic_witness(P, y)
        if w is not None:
            return PebbleCheck(False, f"point {i} lies on the span of vertices {w}", (i, i))
        covers.append(set(cov(P, y).simplices))
    for i, j in itertools.combinations(range(len(pts)), 2):
        common = covers[i] & covers[j]
        if common:
            shared = min(common)
            return PebbleCheck(False, f"points {i} and {j} are both covered by {shared}", (i, j), shared)
    return PebbleCheck(True)


def pebble_set(P: Polytope, max_rounds: int = 60):
    """Verified pebble set of ``n - 2`` points for a convex polygon.

    Candidate ``q_i`` sits near vertex ``p_i`` (``2 <= i <= n - 1``) on the
    segment towards the midpoint of edge ``p_n p_1``; the offset halves each
    round until exact verification succeeds.
    """
    if P.dimension != 2:
        raise PebbleSetUnavailable("pebble sets are only constructed for polygons")
    n = P.n
    p1, pn = P.point(1), P.point(n)
    target = tuple((a + b) / 2 for a, b in zip(p1, pn))
    last = None
    eps = Fraction(1, 2)
    for _ in range(max_rounds):
        cand = []
        for i in range(2, n):
            p = P.point(i)
            cand.append(tuple(p[k] + eps * (target[k] - p[k]) for k in range(2)))
        last = is_pebble_set(P, cand)
        if last.ok:
            return cand
        eps /= 2
    raise SearchExhausted("no verified pebble set found", certificate=last)


# -- carriers and Sperner labellings -----------------------------------------

def carrier(P: Polytope, v) -> tuple[int, ...]:
    """Vertex indices of the smallest face of ``P`` containing ``v``."""
    v = as_point(v)
    if not P.contains(v):
        raise NotATriangulationOfP(f"point {v} lies outside P")
    verts = set(range(1, P.n + 1))
    for f in P.facets:
        if dot(f.normal, v) == f.offset:
            verts &= set(f.vertices)
    return tuple(sorted(verts))


def check_triangulates(T: Triangulation, P: Polytope) -> None:
    """Raise unless ``T`` is a triangulation of ``P`` itself.

    A valid embedded triangulation whose vertices lie in ``P`` and whose
    boundary lies in the boundary of ``P`` covers all of ``P``.
    """
    if T.dimension != P.dimension or T.ambient != P.dimension:
        raise NotATriangulationOfP("dimension mismatch between T and P")
    for v, p in enumerate(T.vertices):
        if not P.contains(p):
            raise NotATriangulationOfP(f"vertex {v} lies outside P")
    for face, _ in T.boundary.faces:
        if not any(all(dot(f.normal, T.vertices[v]) == f.offset for v in face) for f in P.facets):
            raise NotATriangulationOfP(f"boundary face {face} is not contained in the boundary of P")


def is_sperner(T: Triangulation, P: Polytope, lab) -> bool:
    check_triangulates(T, P)
    lab.check_total(T)
    return all(lab[v] in carrier(P, p) for v, p in enumerate(T.vertices))


# -- alternating centrally symmetric polytopes -------------------------------

def is_alternating(labels) -> bool:
    """Signed labels ``{k0, -k1, k2, ...}`` with ``|k0| < |k1| < ...`` (either global sign)."""
    ordered = sorted(labels, key=abs)
    if len({abs(x) for x in ordered}) != len(ordered) or not ordered:
        return False
    first = 1 if ordered[0] > 0 else -1
    return all((x > 0) == ((first > 0) == (j % 2 == 0)) for j, x in enumerate(ordered))


def acs_violation(P: Polytope):
    """First origin-covering simplex that breaks the alternating rule, or ``None``."""
    if P.n % 2:
        raise NotCentrallySymmetric("odd number of vertices")
    half = P.n // 2
    for i in range(1, half + 1):
        if tuple(-c for c in P.point(i)) != P.point(i + half):
            raise NotCentrallySymmetric(f"vertex {i + half} is not the negation of vertex {i}")
    d = P.dimension
    origin = tuple(Fraction(0) for _ in range(d))
    for size in range(2, d + 2):
        for subset in itertools.combinations(range(1, P.n + 1), size):
            sp = [P.point(i) for i in subset]
            if not affinely_independent(sp):
                continue
            lam = barycentric(sp, origin)
            if lam is None or any(x <= 0 for x in lam):
                continue
            signed = [i if i <= half else -(i - half) for i in subset]
            if size == 2 and signed[0] == -signed[1]:
                continue
            if size == d + 1 and is_alternating(signed):
                continue
            return tuple(signed)
    return None


def is_acs_polytope(P: Polytope) -> bool:
    return acs_violation(P) is None
