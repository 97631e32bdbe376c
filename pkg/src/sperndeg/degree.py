"""Degrees of labellings.

Two families of algorithms live here and check each other:

* cycle degrees of cyclic label sequences (transition counting and the
  lifted-walk partial sum), summed over boundary cycles in the plane;
* signed preimage counts of the piecewise-linear map sending a vertex
  labelled ``i`` to the ``i``-th vertex of a polytope, either at an interior
  point or, restricted to the boundary, at a point of a facet.
"""

from __future__ import annotations

import itertools
from array import array
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import kernels
from ._exact import as_point, barycentric, det, in_affine_hull, sub
from .complex import Triangulation, orientation_sign, permutation_parity
from .cover import Facet, Polytope, full_cover, generic_witness
from .errors import (
    BoundaryImageViolation,
    InternalInconsistency,
    InvalidLabelling,
    NonGenericPoint,
    NotNeighboring,
    NotOrientable,
)
from .labelling import Labelling

__all__ = [
    "DegreeReport",
    "boundary_degree",
    "boundary_map_degree",
    "check_boundary_image",
    "covered_simplices",
    "cycle_degree",
    "generic_facet_point",
    "lift_steps",
    "map_degree_at",
    "mod2_degree",
    "pair_degree",
]

_TABLE_LIMIT = 1 << 22


@dataclass(frozen=True)
class DegreeReport:
    per_cycle: tuple[int, ...]
    per_pair: tuple[tuple[int, ...], ...]  # per cycle: deg([i, i+1]) at index i - 1
    boundary_total: int
    method: str = "lifted-walk partial sum, cross-checked by transition counts"

    @property
    def total(self) -> int:
        return self.boundary_total


def _first_break(seq, n):
    m = len(seq)
    for k in range(m):
        a, b = seq[k], seq[(k + 1) % m]
        if a != b and (b - a) % n not in (1, n - 1):
            return k
    return None


def _scan(seq: Sequence[int], n: int, cycle=None):
    if not seq:
        raise ValueError("empty label sequence")
    ok, lift, fw, bw = kernels.transition_counts(seq, n)
    if not ok:
        k = _first_break(seq, n)
        where = f" on cycle {cycle}" if cycle is not None else ""
        raise NotNeighboring(
            f"labels {seq[k]} and {seq[(k + 1) % len(seq)]} at positions {k}, {(k + 1) % len(seq)}{where} are not neighbours modulo {n}",
            cycle=cycle,
            position=k,
        )
    return lift, fw, bw


def lift_steps(seq: Sequence[int], n: int) -> list[int]:
    """Steps in {-1, 0, +1} of the walk lifted from Z/n to Z (cyclic)."""
    _scan(seq, n)
    out = []
    for k in range(len(seq)):
        a, b = seq[k], seq[(k + 1) % len(seq)]
        diff = b - a
        if diff == 0:
            out.append(0)
        elif diff == 1 or (diff == 1 - n and n > 2):
            out.append(1)
        else:
            out.append(-1)
    return out


def pair_degree(seq: Sequence[int], i: int, n: int) -> int:
    """Transitions ``i -> i+1`` minus transitions ``i+1 -> i`` (``n + 1`` means 1)."""
    if not 1 <= i <= n:
        raise ValueError(f"pair index {i} outside 1..{n}")
    _, fw, bw = _scan(seq, n)
    return fw[i - 1] - bw[i - 1]


def _cycle_degree_and_pairs(seq, n, cycle=None):
    lift, fw, bw = _scan(seq, n, cycle)
    if lift % n:
        raise InternalInconsistency(f"lifted walk of a closed sequence ends at {lift}, not a multiple of {n}")
    q = lift // n
    pairs = tuple(f - b for f, b in zip(fw, bw))
    if any(p != q for p in pairs):
        raise InternalInconsistency(f"pair degrees {pairs} disagree with the lifted-walk degree {q}")
    return q, pairs


def cycle_degree(seq: Sequence[int], n: int) -> int:
    """Common value of all pair degrees of a neighbouring cyclic sequence."""
    return _cycle_degree_and_pairs(seq, n)[0]


def boundary_degree(T: Triangulation, lab: Labelling) -> DegreeReport:
    """Sum of cycle degrees over the boundary cycles of a 2-dimensional ``T``."""
    if T.dimension != 2:
        raise ValueError("boundary_degree needs a 2-dimensional triangulation")
    if not T.orientable:
        raise NotOrientable("boundary cycles of a non-orientable complex carry no orientation")
    lab.check_total(T)
    per_cycle, per_pair = [], []
    for k, c in enumerate(T.boundary.cycles):
        q, pairs = _cycle_degree_and_pairs(tuple(lab[v] for v in c.vertex_loop), lab.n, cycle=k)
        per_cycle.append(q)
        per_pair.append(pairs)
    return DegreeReport(tuple(per_cycle), tuple(per_pair), sum(per_cycle))


# -- signed preimages ----------------------------------------------------------

def _index(labels, n):
    idx = 0
    for x in labels:
        idx = idx * n + (x - 1)
    return idx


@lru_cache(maxsize=1024)
def _cover_table(P: Polytope, y):
    """Signed indicator over ordered label tuples whose image simplex contains y."""
    n, d = P.n, P.dimension
    entries = {}
    for simplex in full_cover(P, y):
        base = orientation_sign([P.point(i) for i in simplex])
        for perm in itertools.permutations(simplex):
            entries[perm] = base * permutation_parity(perm)
    if n ** (d + 1) <= _TABLE_LIMIT:
        table = array("b", bytes(n ** (d + 1)))
        for perm, s in entries.items():
            table[_index(perm, n)] = s
        return table
    return entries


def _require_map(T: Triangulation, lab: Labelling, P: Polytope):
    lab.check_total(T)
    if T.dimension != P.dimension:
        raise ValueError(f"triangulation dimension {T.dimension} differs from polytope dimension {P.dimension}")
    if lab.n != P.n:
        raise InvalidLabelling(f"labelling uses {lab.n} labels but P has {P.n} vertices")


def covered_simplices(T: Triangulation, lab: Labelling, P: Polytope, y):
    """``(signed sum, indices)`` of simplices whose image simplex contains ``y``.

    ``y`` must be generic.  The signed sum is meaningful only for oriented ``T``.
    """
    _require_map(T, lab, P)
    y = as_point(y)
    witness = generic_witness(P, y)
    if witness is not None:
        raise NonGenericPoint(y, witness)
    table = _cover_table(P, y)
    width = T.dimension + 1
    if isinstance(table, array):
        return kernels.table_scan(T.simplex_array, width, lab.array, table, P.n)
    total, hits = 0, []
    for k, s in enumerate(T.simplices):
        t = table.get(tuple(lab[v] for v in s), 0)
        if t:
            total += t
            hits.append(k)
    return total, hits


def map_degree_at(T: Triangulation, lab: Labelling, P: Polytope, y, *, check_boundary: bool = False) -> int:
    """Sum of orientation signs of the simplices whose image contains ``y``."""
    if not T.orientable:
        raise NotOrientable("signed degree needs an oriented triangulation; use mod2_degree")
    if check_boundary:
        check_boundary_image(T, lab, P)
    return covered_simplices(T, lab, P, y)[0]


def check_boundary_image(T: Triangulation, lab: Labelling, P: Polytope) -> None:
    """Raise unless every boundary face is labelled inside one facet of ``P``."""
    _require_map(T, lab, P)
    facet_sets = P.facet_vertex_sets
    good: dict[frozenset, bool] = {}
    for face, _ in T.boundary.faces:
        labels = frozenset(lab[v] for v in face)
        ok = good.get(labels)
        if ok is None:
            ok = good[labels] = any(labels <= f for f in facet_sets)
        if not ok:
            raise BoundaryImageViolation(face, [lab[v] for v in face])


def generic_facet_point(P: Polytope, facet: int = 0):
    """A point in the relative interior of a facet avoiding the spans of its vertex subsets."""
    F = P.facets[facet]
    verts = [P.point(i) for i in F.vertices]
    d = P.dimension
    if d == 1:
        return verts[0]
    q = 3
    while True:
        weights = [1 + Fraction(1, q ** (j + 1)) for j in range(len(verts))]
        total = sum(weights)
        z = tuple(sum(w * p[k] for w, p in zip(weights, verts)) / total for k in range(d))
        if not any(in_affine_hull(list(sub_), z) for sub_ in itertools.combinations(verts, d - 1)):
            return z
        q += 2


def _facet_orientation(F: Facet, points) -> int:
    """Orientation of a (d-1)-simplex inside a facet: sign det[N, q1 - q0, ...]."""
    rows = [F.normal] + [sub(p, points[0]) for p in points[1:]]
    s = det(rows)
    return (s > 0) - (s < 0)


def _facet_hits(T: Triangulation, lab: Labelling, P: Polytope, facet: int, z, signed: bool):
    F = P.facets[facet]
    fverts = set(F.vertices)
    cache: dict[tuple[int, ...], int] = {}
    total = 0
    hits = []
    for face, s in T.boundary.faces:
        labels = tuple(lab[v] for v in face)
        if len(set(labels)) != len(labels) or not fverts.issuperset(labels):
            continue
        key = tuple(sorted(labels))
        base = cache.get(key)
        if base is None:
            pts = [P.point(i) for i in key]
            lam = barycentric(pts, z)
            if lam is None or any(x < 0 for x in lam):
                base = 0
            else:
                base = _facet_orientation(F, pts) if signed else 1
            cache[key] = base
        if base:
            hits.append(face)
            total += s * permutation_parity(labels) * base if signed else 1
    return total, hits


def boundary_map_degree(T: Triangulation, lab: Labelling, P: Polytope, z=None, facet: int = 0) -> int:
    """Degree of the labelling map restricted to the boundary, onto the boundary of ``P``."""
    if not T.orientable:
        raise NotOrientable("signed degree needs an oriented triangulation; use mod2_degree")
    check_boundary_image(T, lab, P)
    z = generic_facet_point(P, facet) if z is None else as_point(z)
    return _facet_hits(T, lab, P, facet, z, signed=True)[0]


def mod2_degree(T: Triangulation, lab: Labelling, P: Polytope, z=None, facet: int = 0) -> int:
    """Parity of the number of boundary faces whose image covers a generic facet point."""
    check_boundary_image(T, lab, P)
    z = generic_facet_point(P, facet) if z is None else as_point(z)
    return _facet_hits(T, lab, P, facet, z, signed=False)[0] % 2
