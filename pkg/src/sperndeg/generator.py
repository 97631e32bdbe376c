"""Deterministic and seeded construction of triangulations and labellings."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from ._exact import as_point
from .complex import Triangulation, antipodal_pairs, build_triangulation, orientation_sign, point_in_closed_simplex
from .cover import Polytope, carrier, crosspolytope, is_sperner, regular_polygon, standard_simplex
from .errors import (
    ConstraintInfeasible,
    InvalidLabelling,
    InvalidPolygon,
    SpaceTooLarge,
)
from .labelling import (
    Labelling,
    SignedLabelling,
    complementary_edges,
    is_antipodal_on_boundary,
    is_neighboring,
    is_nl_on_boundary,
    signed_to_cyclic,
)

__all__ = [
    "CONSTRAINTS",
    "DEFAULT_CAP",
    "GenSpec",
    "cone_ball",
    "count_labellings",
    "count_nl_cycles",
    "enumerate_anl_sequences",
    "enumerate_labellings",
    "enumerate_nl_cycles",
    "insert_point",
    "polygon_fan",
    "random_instance",
    "random_labelling",
    "random_nl_cycle",
    "refine",
    "refine_labelled",
    "symmetric_disk",
    "triangulate_polygon",
]

DEFAULT_CAP = 10**7
CONSTRAINTS = ("free", "sperner", "nl-boundary", "antipodal")


# -- planar predicates --------------------------------------------------------

def _orient(a, b, c) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(a, b, p) -> bool:
    return (
        _orient(a, b, p) == 0
        and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def _segments_meet(a, b, c, d) -> bool:
    """Closed segments ab and cd share a point."""
    o1, o2, o3, o4 = _orient(a, b, c), _orient(a, b, d), _orient(c, d, a), _orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return _on_segment(a, b, c) or _on_segment(a, b, d) or _on_segment(c, d, a) or _on_segment(c, d, b)


def _area2(loop) -> Fraction:
    return sum(
        (loop[k][0] * loop[(k + 1) % len(loop)][1] - loop[(k + 1) % len(loop)][0] * loop[k][1])
        for k in range(len(loop))
    )


def _point_in_loop(loop, p) -> int:
    """1 inside, 0 on the boundary, -1 outside (crossing number, exact)."""
    inside = False
    m = len(loop)
    for k in range(m):
        a, b = loop[k], loop[(k + 1) % m]
        if _on_segment(a, b, p):
            return 0
        if (a[1] > p[1]) != (b[1] > p[1]):
            x = a[0] + (p[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
            if x > p[0]:
                inside = not inside
    return 1 if inside else -1


def _loop_edges(loop):
    return [(loop[k], loop[(k + 1) % len(loop)]) for k in range(len(loop))]


def _check_simple(loop, what):
    m = len(loop)
    if m < 3:
        raise InvalidPolygon(f"{what} has fewer than 3 vertices")
    if len(set(loop)) != m:
        raise InvalidPolygon(f"{what} repeats a vertex")
    for i in range(m):
        for j in range(i + 1, m):
            if j == i + 1 or (i == 0 and j == m - 1):
                continue
            if _segments_meet(loop[i], loop[(i + 1) % m], loop[j], loop[(j + 1) % m]):
                raise InvalidPolygon(f"{what} intersects itself at edges {i} and {j}")
    if _area2(loop) == 0:
        raise InvalidPolygon(f"{what} has zero area")


# -- polygons with holes ------------------------------------------------------

def _bridge_ok(a, b, edges, region_test) -> bool:
    for c, d in edges:
        if a in (c, d) or b in (c, d):
            # edges at an endpoint may only touch it there
            other = d if c in (a, b) else c
            if c in (a, b) and d in (a, b):
                return False
            if _on_segment(a, b, other):
                return False
            continue
        if _segments_meet(a, b, c, d):
            return False
    mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
    return region_test(mid)


def _ear_clip(poly_ids, pts) -> list[tuple[int, int, int]]:
    """Ear clipping of a counterclockwise weakly simple polygon given by vertex ids."""
    ring = list(poly_ids)
    out = []
    guard = 0
    while len(ring) > 3:
        m = len(ring)
        edges = [(ring[k], ring[(k + 1) % m]) for k in range(m)]
        clipped = False
        for k in range(m):
            a, b, c = ring[k - 1], ring[k], ring[(k + 1) % m]
            pa, pb, pc = pts[a], pts[b], pts[c]
            if _orient(pa, pb, pc) <= 0:
                continue
            tri = (pa, pb, pc)
            blocked = False
            for v in ring:
                if v in (a, b, c):
                    continue
                if point_in_closed_simplex(tri, pts[v]):
                    blocked = True
                    break
            if blocked:
                continue
            # the new diagonal may not cross the remaining boundary
            for u, w in edges:
                if {u, w} & {a, c}:
                    continue
                if _segments_meet(pa, pc, pts[u], pts[w]):
                    blocked = True
                    break
            if blocked:
                continue
            out.append((a, b, c))
            del ring[k]
            clipped = True
            break
        if not clipped:
            guard += 1
            # drop a collinear spike if one exists, else give up
            for k in range(m):
                a, b, c = ring[k - 1], ring[k], ring[(k + 1) % m]
                if a == c:
                    del ring[k]
                    del ring[k % len(ring)]
                    clipped = True
                    break
            if not clipped or guard > m:
                raise InvalidPolygon("ear clipping found no ear; the polygon is not weakly simple")
    a, b, c = ring
    if _orient(pts[a], pts[b], pts[c]) > 0:
        out.append((a, b, c))
    elif _orient(pts[a], pts[b], pts[c]) < 0:
        raise InvalidPolygon("final triangle is clockwise")
    return out


def triangulate_polygon(outer: Sequence[Sequence], holes: Sequence[Sequence[Sequence]] = ()) -> Triangulation:
    """Triangulate a simple polygon with polygonal holes, using only its vertices.

    Vertex ids follow the input: outer loop first, then each hole in order.
    Holes are bridged to the outer loop one at a time by the lexicographically
    smallest (outer id, hole id) diagonal that crosses nothing, then the
    merged polygon is ear-clipped.
    """
    outer = [as_point(p) for p in outer]
    holes = [[as_point(p) for p in h] for h in holes]
    for p in outer + [q for h in holes for q in h]:
        if len(p) != 2:
            raise InvalidPolygon("polygon vertices must be planar")
    _check_simple(outer, "outer loop")
    for k, h in enumerate(holes):
        _check_simple(h, f"hole {k}")
    loops = [outer] + holes
    all_pts = [p for loop in loops for p in loop]
    if len(set(all_pts)) != len(all_pts):
        raise InvalidPolygon("loops share a vertex")
    for i, j in itertools.combinations(range(len(loops)), 2):
        for a, b in _loop_edges(loops[i]):
            for c, d in _loop_edges(loops[j]):
                if _segments_meet(a, b, c, d):
                    raise InvalidPolygon(f"boundaries of loops {i} and {j} intersect")
    for k, h in enumerate(holes):
        if _point_in_loop(outer, h[0]) != 1:
            raise InvalidPolygon(f"hole {k} is not inside the outer loop")
        for j, g in enumerate(holes):
            if j != k and _point_in_loop(g, h[0]) == 1:
                raise InvalidPolygon(f"hole {k} lies inside hole {j}")

    ids = []
    start = 0
    for loop in loops:
        ids.append(list(range(start, start + len(loop))))
        start += len(loop)
    # outer counterclockwise, holes clockwise
    if _area2(outer) < 0:
        ids[0].reverse()
    for k, h in enumerate(holes):
        if _area2(h) > 0:
            ids[k + 1].reverse()

    pts = all_pts

    def in_region(p):
        if _point_in_loop(outer, p) != 1:
            return False
        return all(_point_in_loop(h, p) == -1 for h in holes)

    poly = ids[0]
    pending = list(range(1, len(loops)))
    while pending:
        poly_set = set(poly)
        edges = [(pts[poly[k]], pts[poly[(k + 1) % len(poly)]]) for k in range(len(poly))]
        for j in pending:
            edges += _loop_edges([pts[v] for v in ids[j]])
        best = None
        for j in pending:
            for a in sorted(poly_set):
                for b in ids[j]:
                    if best is not None and (a, b) >= best[:2]:
                        continue
                    if _bridge_ok(pts[a], pts[b], edges, in_region):
                        best = (a, b, j)
        if best is None:
            raise InvalidPolygon("no valid bridge to a hole")
        a, b, j = best
        hole = ids[j]
        hb = hole.index(b)
        rotated = hole[hb:] + hole[:hb] + [b]
        # splice at the occurrence of a whose wedge contains the bridge
        pos = _splice_position(poly, a, pts[b], pts)
        poly = poly[: pos + 1] + rotated + [a] + poly[pos + 1 :]
        pending.remove(j)

    tris = _ear_clip(poly, pts)
    T = build_triangulation(2, pts, tris, auto_orient=False)
    if len(T.boundary.cycles) != len(loops):
        raise InvalidPolygon("triangulation does not recover the input loops")
    return T


def _splice_position(poly, a, target, pts) -> int:
    """Index of the occurrence of ``a`` in ``poly`` whose interior wedge contains ``target``."""
    hits = [k for k, v in enumerate(poly) if v == a]
    if len(hits) == 1:
        return hits[0]
    m = len(poly)
    for k in hits:
        prev, nxt = pts[poly[k - 1]], pts[poly[(k + 1) % m]]
        p = pts[a]
        # interior lies to the left of prev->p->nxt
        convex = _orient(prev, p, nxt) > 0
        left1 = _orient(prev, p, target) > 0
        left2 = _orient(p, nxt, target) > 0
        if (convex and left1 and left2) or (not convex and (left1 or left2)):
            return k
    return hits[0]


def polygon_fan(points: Sequence[Sequence], center=None) -> Triangulation:
    """Star-shaped polygon coned from an interior point, or fanned from vertex 0."""
    pts = [as_point(p) for p in points]
    m = len(pts)
    if center is None:
        tris = [(0, k, k + 1) for k in range(1, m - 1)]
        return build_triangulation(2, pts, tris)
    c = as_point(center)
    tris = [(m, k, (k + 1) % m) for k in range(m)]
    return build_triangulation(2, pts + [c], tris)


# -- symmetric disks ----------------------------------------------------------

def _diamond_point(u: Fraction):
    """Point at L1-arclength ``u`` (mod 4) on |x| + |y| = 1, starting at (1, 0)."""
    u = u % 4
    q, r = int(u), u - int(u)
    corners = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    a, b = corners[q], corners[(q + 1) % 4]
    return (Fraction(a[0]) + r * (b[0] - a[0]), Fraction(a[1]) + r * (b[1] - a[1]))


def symmetric_disk(m: int, rings: int = 0) -> Triangulation:
    """Disk with ``2m`` boundary vertices on the unit diamond, closed under negation.

    ``rings`` scaled copies of the boundary are nested inside and joined by
    strips; the innermost ring is coned to the origin.  Vertex ``k`` and
    ``k + m`` of every ring are antipodal.
    """
    if m < 2:
        raise ValueError("symmetric_disk needs m >= 2")
    if rings < 0:
        raise ValueError("rings must be non-negative")
    base = [_diamond_point(Fraction(2 * k, m)) for k in range(2 * m)]
    pts = []
    layers = []
    for r in range(rings + 1):
        scale = Fraction(rings + 1 - r, rings + 1)
        layers.append(list(range(len(pts), len(pts) + 2 * m)))
        pts += [(scale * x, scale * y) for x, y in base]
    tris = []
    for outer_ids, inner_ids in zip(layers, layers[1:]):
        for k in range(2 * m):
            k1 = (k + 1) % (2 * m)
            tris.append((outer_ids[k], outer_ids[k1], inner_ids[k1]))
            tris.append((outer_ids[k], inner_ids[k1], inner_ids[k]))
    last = layers[-1]
    c = len(pts)
    pts.append((Fraction(0), Fraction(0)))
    tris += [(c, last[k], last[(k + 1) % (2 * m)]) for k in range(2 * m)]
    return build_triangulation(2, pts, tris)


def _split_at(vertices, simplices, p):
    new = len(vertices)
    out = []
    touched = False
    for s in simplices:
        tri = [vertices[v] for v in s]
        if not point_in_closed_simplex(tri, p):
            out.append(s)
            continue
        touched = True
        for k in range(3):
            a, b = s[k], s[(k + 1) % 3]
            if orientation_sign([vertices[a], vertices[b], p]) != 0:
                out.append((a, b, new))
    if not touched:
        raise InvalidPolygon(f"point {p} lies outside the triangulation")
    return vertices + (p,), out


def insert_point(T: Triangulation, p) -> Triangulation:
    """Add a vertex at ``p``, splitting the triangle (or the two triangles) containing it."""
    if T.dimension != 2:
        raise ValueError("insert_point needs a 2-dimensional triangulation")
    p = as_point(p)
    if p in T.vertices:
        raise InvalidPolygon(f"point {p} is already a vertex")
    return build_triangulation(2, *_split_at(T.vertices, T.simplices, p))


def _midpoint(a, b):
    return tuple((x + y) / 2 for x, y in zip(a, b))


def refine(T: Triangulation, depth: int = 1) -> Triangulation:
    """Split every triangle four ways at edge midpoints, ``depth`` times."""
    return refine_labelled(T, None, depth)[0]


def refine_labelled(T: Triangulation, lab, depth: int = 1):
    """Refine and extend ``lab``: a midpoint copies its smaller endpoint's label."""
    if T.dimension != 2:
        raise ValueError("refinement is implemented for 2-dimensional triangulations")
    for _ in range(depth):
        pts = list(T.vertices)
        mid = {}
        labels = list(lab.labels) if lab is not None else None
        for a, b in T.edges:
            mid[(a, b)] = len(pts)
            pts.append(_midpoint(T.vertices[a], T.vertices[b]))
            if labels is not None:
                labels.append(lab[min(a, b)])

        def m_(a, b):
            return mid[(a, b) if a < b else (b, a)]

        tris = []
        for a, b, c in T.simplices:
            ab, bc, ca = m_(a, b), m_(b, c), m_(c, a)
            tris += [(a, ab, ca), (ab, b, bc), (ca, bc, c), (ab, bc, ca)]
        T = build_triangulation(2, pts, tris, orientable=T.orientable, check_geometry=T.ambient == 2)
        if lab is not None:
            lab = type(lab)(lab.n, tuple(labels))
    return T, lab


def cone_ball(d: int) -> Triangulation:
    """The boundary of the crosspolytope coned to the origin: a ``d``-ball."""
    P = crosspolytope(d)
    origin = tuple(Fraction(0) for _ in range(d))
    pts = [P.point(i) for i in range(1, P.n + 1)] + [origin]
    c = len(pts) - 1
    tris = []
    for signs in itertools.product((0, 1), repeat=d):
        tris.append((c,) + tuple(i + signs[i] * d for i in range(d)))
    return build_triangulation(d, pts, tris)


# -- cyclic sequences ---------------------------------------------------------

def random_nl_cycle(m: int, n: int, rng: random.Random, max_attempts: int = 10_000) -> tuple[int, ...]:
    """Closed lazy random walk of length ``m`` on the cyclic label graph 1..n."""
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    for _ in range(max_attempts):
        start = rng.randrange(n)
        steps = [rng.choice((-1, 0, 1)) for _ in range(m)]
        if sum(steps) % n:
            continue
        seq, x = [], start
        for s in steps:
            seq.append(x + 1)
            x = (x + s) % n
        return tuple(seq)
    raise ConstraintInfeasible(f"no closed walk of length {m} on {n} labels after {max_attempts} attempts")


def _step_ok(a, b, n) -> bool:
    return a == b or (b - a) % n in (1, n - 1)


def enumerate_nl_cycles(m: int, n: int) -> Iterator[tuple[int, ...]]:
    """Every neighbouring cyclic sequence of length ``m`` over 1..n, lexicographically."""
    nxt = {a: sorted({b for b in range(1, n + 1) if _step_ok(a, b, n)}) for a in range(1, n + 1)}

    def rec(prefix):
        if len(prefix) == m:
            if _step_ok(prefix[-1], prefix[0], n):
                yield tuple(prefix)
            return
        for b in nxt[prefix[-1]]:
            prefix.append(b)
            yield from rec(prefix)
            prefix.pop()

    for a in range(1, n + 1):
        yield from rec([a])


def count_nl_cycles(m: int, n: int) -> int:
    """Closed walks of length ``m`` on the cyclic label graph with loops: trace(A^m)."""
    A = [[int(_step_ok(a, b, n)) for b in range(1, n + 1)] for a in range(1, n + 1)]
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(m):
        M = [[sum(M[i][k] * A[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return sum(M[i][i] for i in range(n))


def enumerate_anl_sequences(m: int, n: int) -> Iterator[tuple[int, ...]]:
    """Antipodal neighbouring cycles of length ``2m`` over +-1..+-n.

    ``seq[i + m] == -seq[i]``; neighbours are equal or adjacent in the cyclic
    order 1..n, -1..-n.  Only the first half is searched.
    """
    labels = [k for k in range(1, n + 1)] + [-k for k in range(1, n + 1)]
    labels.sort(key=lambda x: (abs(x), x < 0))

    def ok(a, b):
        return _step_ok(signed_to_cyclic(a, n), signed_to_cyclic(b, n), 2 * n)

    def rec(prefix):
        if len(prefix) == m:
            if ok(prefix[-1], -prefix[0]):
                yield tuple(prefix) + tuple(-x for x in prefix)
            return
        for b in labels:
            if ok(prefix[-1], b):
                prefix.append(b)
                yield from rec(prefix)
                prefix.pop()

    for a in labels:
        yield from rec([a])


# -- labellings ---------------------------------------------------------------

def _default_polytope(T: Triangulation, P):
    return standard_simplex(T.dimension) if P is None else P


def random_labelling(
    T: Triangulation,
    n: int,
    constraint: str = "free",
    seed: int = 0,
    *,
    P: Polytope | None = None,
    no_boundary_complementary: bool = False,
    max_attempts: int = 10_000,
):
    """Seeded labelling satisfying ``constraint``; the result is post-checked."""
    rng = random.Random(seed)
    V = T.num_vertices
    if constraint == "free":
        return Labelling(n, tuple(rng.randint(1, n) for _ in range(V)))
    if constraint == "sperner":
        P = _default_polytope(T, P)
        labels = tuple(rng.choice(carrier(P, p)) for p in T.vertices)
        lab = Labelling(P.n, labels)
        if not is_sperner(T, P, lab):
            raise ConstraintInfeasible("generated labelling is not Sperner")
        return lab
    if constraint == "nl-boundary":
        if T.dimension != 2:
            raise ConstraintInfeasible("nl-boundary labellings need a 2-dimensional triangulation")
        labels = [rng.randint(1, n) for _ in range(V)]
        for c in T.boundary.cycles:
            seq = random_nl_cycle(len(c.vertex_loop), n, rng, max_attempts)
            for v, x in zip(c.vertex_loop, seq):
                labels[v] = x
        lab = Labelling(n, tuple(labels))
        if not is_nl_on_boundary(T, lab):
            raise ConstraintInfeasible("generated labelling is not neighbouring on the boundary")
        return lab
    if constraint == "antipodal":
        pairs = antipodal_pairs(T)
        for _ in range(max_attempts):
            labels = [rng.choice((1, -1)) * rng.randint(1, n) for _ in range(V)]
            for v in sorted(pairs):
                w = pairs[v]
                if v < w:
                    labels[w] = -labels[v]
            sl = SignedLabelling(n, tuple(labels))
            if no_boundary_complementary and complementary_edges(T, sl).boundary:
                continue
            if not is_antipodal_on_boundary(T, sl):
                raise ConstraintInfeasible("generated labelling is not antipodal")
            return sl
        raise ConstraintInfeasible(
            f"no antipodal labelling without boundary complementary edges after {max_attempts} attempts"
        )
    raise ValueError(f"unknown constraint {constraint!r}; expected one of {CONSTRAINTS}")


def count_labellings(T: Triangulation, n: int, constraint: str = "free", *, P: Polytope | None = None) -> int:
    """Size of the search space walked by :func:`enumerate_labellings` (before filtering)."""
    V = T.num_vertices
    if constraint == "free":
        return n**V
    if constraint == "sperner":
        P = _default_polytope(T, P)
        total = 1
        for p in T.vertices:
            total *= len(carrier(P, p))
        return total
    if constraint == "nl-boundary":
        total = n ** (V - len(T.boundary_vertices))
        for c in T.boundary.cycles:
            total *= count_nl_cycles(len(c.vertex_loop), n)
        return total
    if constraint == "antipodal":
        free = V - len(T.boundary_vertices) // 2
        return (2 * n) ** free
    raise ValueError(f"unknown constraint {constraint!r}; expected one of {CONSTRAINTS}")


def enumerate_labellings(
    T: Triangulation,
    n: int,
    constraint: str = "free",
    *,
    P: Polytope | None = None,
    cap: int = DEFAULT_CAP,
    no_boundary_complementary: bool = False,
):
    """Every labelling satisfying ``constraint`` exactly once, in a fixed order."""
    size = count_labellings(T, n, constraint, P=P)
    if size > cap:
        raise SpaceTooLarge(f"search space has {size} labellings, cap is {cap}", certificate=size)
    return _enumerate(T, n, constraint, P, no_boundary_complementary)


def _enumerate(T, n, constraint, P, no_bce):
    V = T.num_vertices
    if constraint == "free":
        for labels in itertools.product(range(1, n + 1), repeat=V):
            yield Labelling(n, labels)
    elif constraint == "sperner":
        P = _default_polytope(T, P)
        choices = [carrier(P, p) for p in T.vertices]
        for labels in itertools.product(*choices):
            yield Labelling(P.n, labels)
    elif constraint == "nl-boundary":
        cycles = [c.vertex_loop for c in T.boundary.cycles]
        inner = [v for v in range(V) if v not in T.boundary_vertices]
        per_cycle = [list(enumerate_nl_cycles(len(c), n)) for c in cycles]
        for seqs in itertools.product(*per_cycle):
            base = [0] * V
            for loop, seq in zip(cycles, seqs):
                for v, x in zip(loop, seq):
                    base[v] = x
            for vals in itertools.product(range(1, n + 1), repeat=len(inner)):
                for v, x in zip(inner, vals):
                    base[v] = x
                yield Labelling(n, tuple(base))
    elif constraint == "antipodal":
        pairs = antipodal_pairs(T)
        free = [v for v in range(V) if v not in pairs or v < pairs[v]]
        alphabet = [s * k for k in range(1, n + 1) for s in (1, -1)]
        for vals in itertools.product(alphabet, repeat=len(free)):
            labels = [0] * V
            for v, x in zip(free, vals):
                labels[v] = x
                if v in pairs:
                    labels[pairs[v]] = -x
            sl = SignedLabelling(n, tuple(labels))
            if no_bce and complementary_edges(T, sl).boundary:
                continue
            yield sl
    else:
        raise ValueError(f"unknown constraint {constraint!r}; expected one of {CONSTRAINTS}")


# -- instance specs -----------------------------------------------------------

GEN_KINDS = ("polygon-fan", "polygon-with-holes", "symmetric-disk", "refined", "cone-ball")


@dataclass(frozen=True)
class GenSpec:
    """Recipe for a seeded instance; ``build`` returns ``(T, labelling)``."""

    kind: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.kind not in GEN_KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {GEN_KINDS}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    def build(self):
        p = dict(self.params)
        n = int(p.get("n", 3))
        constraint = p.get("constraint", "nl-boundary")
        if self.kind == "polygon-fan":
            k = int(p.get("vertices", 6))
            T = polygon_fan(regular_polygon(k).vertices, center=(0, 0))
        elif self.kind == "polygon-with-holes":
            k = int(p.get("vertices", 8))
            outer = [tuple(4 * c for c in v) for v in regular_polygon(k).vertices]
            hole = [(Fraction(-1), Fraction(-1)), (Fraction(1), Fraction(-1)), (Fraction(1), Fraction(1)), (Fraction(-1), Fraction(1))]
            T = triangulate_polygon(outer, [hole])
        elif self.kind == "symmetric-disk":
            T = symmetric_disk(int(p.get("m", 4)), int(p.get("rings", 0)))
            constraint = p.get("constraint", "antipodal")
        elif self.kind == "refined":
            T = refine(polygon_fan(regular_polygon(int(p.get("vertices", 5))).vertices, center=(0, 0)), int(p.get("depth", 1)))
        else:
            T = cone_ball(int(p.get("dimension", 3)))
            constraint = p.get("constraint", "free")
        if constraint == "antipodal":
            lab = random_labelling(T, n, "antipodal", self.seed, no_boundary_complementary=True)
        else:
            lab = random_labelling(T, n, constraint, self.seed)
        return T, lab


def random_instance(seed: int, *, max_n: int = 6):
    """A small random planar instance ``(T, lab, P)`` with a neighbouring boundary labelling.

    The complex is a disk or an annulus with a few random interior points;
    ``P`` is the regular-approximant ``n``-gon.
    """
    rng = random.Random(seed)
    n = rng.randint(3, max_n)
    k = rng.randint(3, 8)
    outer = [tuple(8 * c for c in v) for v in regular_polygon(k).vertices]
    if rng.random() < 0.3:
        hole = [(Fraction(-1), Fraction(-1)), (Fraction(1), Fraction(-1)), (Fraction(1), Fraction(1)), (Fraction(-1), Fraction(1))]
        T = triangulate_polygon(outer, [hole])
    else:
        T = polygon_fan(outer)
    verts, tris = T.vertices, T.simplices
    for _ in range(rng.randint(0, 4)):
        s = tris[rng.randrange(len(tris))]
        w = [rng.randint(1, 5) for _ in range(3)]
        tot = sum(w)
        p = tuple(sum(Fraction(w[j], tot) * verts[s[j]][c] for j in range(3)) for c in range(2))
        verts, tris = _split_at(verts, tris, p)
    T = build_triangulation(2, verts, tris)
    lab = random_labelling(T, n, "nl-boundary", rng.getrandbits(64))
    return T, lab, regular_polygon(n)
