"""Checkers for degree-based lower bounds on labelled simplices.

Each checker verifies the hypotheses of its statement first and raises a
:class:`~sperndeg.errors.HypothesisFailure` subclass when one fails.  Only
then is the bound evaluated; the returned :class:`TheoremVerdict` lists the
witnesses that were counted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import kernels
from .complex import Triangulation, antipodal_pairs
from .cover import (
    Polytope,
    acs_violation,
    centrally_symmetric_polygon,
    cov,
    crosspolytope,
    is_alternating,
    is_pebble_set,
    pebble_set,
    standard_simplex,
)
from .degree import (
    boundary_degree,
    boundary_map_degree,
    check_boundary_image,
    covered_simplices,
    cycle_degree,
    mod2_degree,
)
from .errors import (
    BoundaryComplementaryEdge,
    ComplementaryEdgePresent,
    InternalInconsistency,
    InvalidLabelling,
    NotACS,
    NotANL,
    NotAntipodalLabelling,
    NotNeighboring,
    PebbleSetUnavailable,
)
from .labelling import (
    Labelling,
    SignedLabelling,
    complementary_edges,
    is_neighboring,
    signed_to_cyclic,
    to_cyclic,
)

__all__ = [
    "THEOREMS",
    "TheoremVerdict",
    "check_antipodal_cycle_parity",
    "check_cover_bound",
    "check_fully_coloured",
    "check_ky_fan",
    "check_mod2",
    "check_polytopal",
    "check_tucker",
    "count_cov_patterned",
]


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    degree: int
    bound: int
    witnesses: tuple
    holds: bool
    preconditions: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "holds": self.holds,
            "degree": self.degree,
            "bound": self.bound,
            "witness_count": len(self.witnesses),
            "witnesses": [list(w) if isinstance(w, tuple) else w for w in self.witnesses],
            "preconditions": dict(self.preconditions),
            "details": _jsonable(self.details),
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    return obj


def _verdict(theorem, degree, bound, witnesses, preconditions, details=None):
    witnesses = tuple(witnesses)
    return TheoremVerdict(theorem, degree, bound, witnesses, len(witnesses) >= bound, preconditions, details or {})


def _degree_of(T: Triangulation, lab: Labelling, P: Polytope) -> int:
    if T.dimension == 2:
        check_boundary_image(T, lab, P)
        return boundary_degree(T, lab).total
    return boundary_map_degree(T, lab, P)


def count_cov_patterned(T: Triangulation, lab: Labelling, P: Polytope, y, *, check_boundary: bool = True):
    """Simplices of ``T`` labelled like a simplex of P that covers ``y``."""
    if check_boundary:
        check_boundary_image(T, lab, P)
    _, hits = covered_simplices(T, lab, P, y)
    return len(hits), [T.simplices[k] for k in hits]


def check_cover_bound(T: Triangulation, lab: Labelling, P: Polytope, y) -> TheoremVerdict:
    """At least ``|deg|`` simplices are labelled like simplices covering ``y``."""
    deg = _degree_of(T, lab, P)
    signed, hits = covered_simplices(T, lab, P, y)
    if T.orientable and signed != deg:
        raise InternalInconsistency(f"signed preimage count {signed} differs from boundary degree {deg}")
    pre = {"boundary_image_in_facets": True, "generic_point": True}
    if T.dimension == 2:
        pre["neighboring_boundary"] = True
    return _verdict(
        "cover", deg, abs(deg), [T.simplices[k] for k in hits], pre,
        {"point": list(cov(P, y).point), "cover_set": cov(P, y).simplices, "signed_preimages": signed},
    )


def _fully_labelled(T: Triangulation, lab) -> list[tuple[int, ...]]:
    hits = kernels.distinct_label_simplices(T.simplex_array, T.dimension + 1, lab.array)
    return [T.simplices[k] for k in hits]


def check_fully_coloured(T: Triangulation, lab: Labelling) -> TheoremVerdict:
    """With ``d + 1`` labels there are at least ``|deg|`` fully coloured simplices."""
    d = T.dimension
    if lab.n != d + 1:
        raise InvalidLabelling(f"fully coloured check needs {d + 1} labels, got {lab.n}")
    P = standard_simplex(d)
    deg = _degree_of(T, lab, P)
    witnesses = _fully_labelled(T, lab)
    return _verdict("fully-coloured", deg, abs(deg), witnesses, {"boundary_image_in_facets": True})


@lru_cache(maxsize=64)
def _default_pebbles(P: Polytope):
    return tuple(pebble_set(P))


def check_polytopal(T: Triangulation, lab: Labelling, P: Polytope, pebbles=None) -> TheoremVerdict:
    """At least ``(n - d) |deg|`` fully labelled simplices."""
    d, n = P.dimension, P.n
    deg = _degree_of(T, lab, P)
    if pebbles is None:
        if d != 2:
            raise PebbleSetUnavailable(f"no pebble set supplied for a polytope in dimension {d}")
        pebbles = _default_pebbles(P)
    else:
        pebbles = tuple(tuple(p) for p in pebbles)
        check = is_pebble_set(P, pebbles)
        if not check.ok:
            raise PebbleSetUnavailable(f"supplied points are not a pebble set: {check.reason}")
    if len(pebbles) < n - d:
        raise PebbleSetUnavailable(f"pebble set has {len(pebbles)} points, need {n - d}")
    witnesses = _fully_labelled(T, lab)
    blocks = []
    for q in pebbles:
        _, hits = covered_simplices(T, lab, P, q)
        blocks.append([T.simplices[k] for k in hits])
    flat = [s for b in blocks for s in b]
    details = {
        "per_pebble": [len(b) for b in blocks],
        "blocks_disjoint": len(flat) == len(set(flat)),
        "blocks_meet_degree": all(len(b) >= abs(deg) for b in blocks),
        "pebbles": [list(q) for q in pebbles],
    }
    pre = {"boundary_image_in_facets": True, "pebble_set_verified": True}
    return _verdict("polytopal", deg, (n - d) * abs(deg), witnesses, pre, details)


def _check_antipodal_labels(T: Triangulation, sl: SignedLabelling) -> dict[int, int]:
    pairs = antipodal_pairs(T)
    for v, w in pairs.items():
        if sl[w] != -sl[v]:
            raise NotAntipodalLabelling(v, w, (sl[v], sl[w]))
    return pairs


def check_tucker(T: Triangulation, sl: SignedLabelling) -> TheoremVerdict:
    """At least ``|deg|`` internal complementary edges; ``deg`` is odd."""
    d = T.dimension
    if sl.n != d:
        raise InvalidLabelling(f"Tucker-type check needs labels +-1..+-{d}, got n={sl.n}")
    sl.check_total(T)
    pairs = _check_antipodal_labels(T, sl)
    edges = complementary_edges(T, sl)
    if edges.boundary:
        raise BoundaryComplementaryEdge(edges.boundary[0])
    cyc = to_cyclic(sl)
    P = crosspolytope(d)
    details = {"cyclic_order": "1..n, -1..-n"}
    if d == 2:
        deg = boundary_degree(T, cyc).total
        cycles = T.boundary.cycles
        if len(cycles) == 1:
            loop = cycles[0].vertex_loop
            m = len(loop) // 2
            if all(pairs[loop[i]] == loop[i + m] for i in range(m)):
                parity = check_antipodal_cycle_parity([sl[v] for v in loop], sl.n)
                details["cut_points"] = parity.details["cut_points"]
                details["piece_degrees"] = parity.details["piece_degrees"]
    else:
        deg = boundary_map_degree(T, cyc, P)
    if deg % 2 == 0:
        raise InternalInconsistency(f"antipodal boundary labelling has even degree {deg}")
    details["degree_odd"] = True
    pre = {"antipodally_symmetric": True, "antipodal_labelling": True, "no_boundary_complementary_edges": True}
    return _verdict("tucker", deg, abs(deg), edges.internal, pre, details)


def check_ky_fan(T: Triangulation, sl: SignedLabelling, P_acs: Polytope | None = None) -> TheoremVerdict:
    """At least ``|deg|`` simplices with alternating labels ``{k0, -k1, k2, ...}``."""
    d = T.dimension
    sl.check_total(T)
    if P_acs is None:
        if d != 2:
            raise NotACS(f"an alternating centrally symmetric polytope must be supplied in dimension {d}")
        P_acs = centrally_symmetric_polygon(sl.n)
    if P_acs.n != 2 * sl.n or P_acs.dimension != d:
        raise NotACS(f"polytope has {P_acs.n} vertices in dimension {P_acs.dimension}; need {2 * sl.n} in dimension {d}")
    bad = acs_violation(P_acs)
    if bad is not None:
        raise NotACS(f"origin-covering simplex {bad} is neither antipodal nor alternating", bad)
    _check_antipodal_labels(T, sl)
    edges = complementary_edges(T, sl)
    if edges.boundary or edges.internal:
        raise ComplementaryEdgePresent((edges.boundary + edges.internal)[0])
    cyc = to_cyclic(sl)
    deg = _degree_of(T, cyc, P_acs)
    witnesses = [s for s in T.simplices if is_alternating([sl[v] for v in s])]
    pre = {
        "antipodally_symmetric": True,
        "antipodal_labelling": True,
        "no_complementary_edges": True,
        "acs_polytope": True,
        "boundary_image_in_facets": True,
    }
    if d == 2:
        pre["neighboring_boundary"] = True
    return _verdict("ky-fan", deg, abs(deg), witnesses, pre, {"cyclic_order": "1..n, -1..-n"})


def check_mod2(T: Triangulation, lab: Labelling, P: Polytope, y) -> TheoremVerdict:
    """Odd boundary preimage count forces a simplex labelled like one covering ``y``.

    Orientation is not used, so non-orientable complexes are accepted.
    """
    parity = mod2_degree(T, lab, P)
    _, hits = covered_simplices(T, lab, P, y)
    pre = {"boundary_image_in_facets": True, "generic_point": True}
    return _verdict("mod2", parity, parity, [T.simplices[k] for k in hits], pre)


def check_antipodal_cycle_parity(seq, n: int | None = None) -> TheoremVerdict:
    """Degree of an antipodal neighbouring cycle is odd, with its piece decomposition.

    ``seq`` holds signed labels with ``seq[i + m] == -seq[i]``.  The cycle is
    cut at the first occurrences of alternately ``-a`` and ``a`` (``a =
    seq[0]``) within the first half; each piece joined with its antipodal
    copy has degree +-1, and the pieces' degrees sum to the total.
    """
    seq = tuple(int(x) for x in seq)
    if n is None:
        n = max(abs(x) for x in seq)
    if n < 2:
        raise NotANL("need at least two label magnitudes")
    if len(seq) % 2 or not seq:
        raise NotANL("antipodal cycle must have even positive length")
    m = len(seq) // 2
    for i in range(m):
        if seq[i + m] != -seq[i] or seq[i] == 0 or abs(seq[i]) > n:
            raise NotANL(f"positions {i} and {i + m} are not labelled by opposite numbers")
    cyc = [signed_to_cyclic(x, n) for x in seq]
    if not is_neighboring(cyc, 2 * n):
        raise NotANL("cycle is not neighbouring in the order 1..n, -1..-n")
    deg = cycle_degree(cyc, 2 * n)

    a = seq[0]
    ks = [0]
    want = -a
    while True:
        nxt = next((t for t in range(ks[-1] + 1, m + 1) if seq[t] == want), None)
        if nxt is None:
            break
        ks.append(nxt)
        want = -want
    pieces = len(ks) - 1
    piece_degrees = []
    for i in range(pieces):
        span = range(ks[i], ks[i + 1] + 1)
        joined = [seq[t] for t in span] + [seq[(t + m) % (2 * m)] for t in span]
        piece_degrees.append(cycle_degree([signed_to_cyclic(x, n) for x in joined], 2 * n))
    if sum(piece_degrees) != deg or any(abs(p) != 1 for p in piece_degrees) or pieces % 2 == 0:
        raise InternalInconsistency(
            f"piece decomposition {piece_degrees} at {ks} does not account for degree {deg}"
        )
    return TheoremVerdict(
        "antipodal-cycle-parity", deg, 1, tuple(ks), deg % 2 == 1,
        {"antipodal": True, "neighboring": True},
        {"cut_points": ks, "pieces": pieces, "piece_degrees": piece_degrees},
    )


THEOREMS = {
    "cover": check_cover_bound,
    "fully-coloured": check_fully_coloured,
    "polytopal": check_polytopal,
    "tucker": check_tucker,
    "ky-fan": check_ky_fan,
    "mod2": check_mod2,
}
