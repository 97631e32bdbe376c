"""Vertex labellings, the neighbouring-label predicate, and signed labels."""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from . import kernels
from .complex import Triangulation, antipodal_pairs
from .errors import InvalidLabelling

__all__ = [
    "ComplementaryEdges",
    "Labelling",
    "SignedLabelling",
    "complementary_edges",
    "cycle_sequences",
    "is_antipodal_on_boundary",
    "is_neighboring",
    "is_nl_on_boundary",
    "signed_to_cyclic",
    "cyclic_to_signed",
    "to_cyclic",
    "to_signed",
]


@dataclass(frozen=True)
class Labelling:
    """Labels ``1..n`` indexed by vertex id."""

    n: int
    labels: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidLabelling(f"n must be positive, got {self.n}")
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        for v, x in enumerate(self.labels):
            if not 1 <= x <= self.n:
                raise InvalidLabelling(f"label {x} of vertex {v} is outside 1..{self.n}")

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __len__(self) -> int:
        return len(self.labels)

    @cached_property
    def array(self) -> array:
        return array("q", self.labels)

    def check_total(self, T: Triangulation) -> None:
        if len(self.labels) != T.num_vertices:
            raise InvalidLabelling(
                f"labelling has {len(self.labels)} entries but the triangulation has {T.num_vertices} vertices"
            )


@dataclass(frozen=True)
class SignedLabelling:
    """Labels in ``{+-1, ..., +-n}`` indexed by vertex id."""

    n: int
    labels: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidLabelling(f"n must be positive, got {self.n}")
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        for v, x in enumerate(self.labels):
            if x == 0 or abs(x) > self.n:
                raise InvalidLabelling(f"signed label {x} of vertex {v} is outside +-1..+-{self.n}")

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __len__(self) -> int:
        return len(self.labels)

    @cached_property
    def array(self) -> array:
        return array("q", self.labels)

    check_total = Labelling.check_total


def signed_to_cyclic(x: int, n: int) -> int:
    return x if x > 0 else n - x


def cyclic_to_signed(x: int, n: int) -> int:
    return x if x <= n else n - x


def to_cyclic(sl: SignedLabelling) -> Labelling:
    """``+k -> k`` and ``-k -> n + k``, giving the cyclic order 1..n, -1..-n."""
    return Labelling(2 * sl.n, tuple(signed_to_cyclic(x, sl.n) for x in sl.labels))


def to_signed(lab: Labelling) -> SignedLabelling:
    if lab.n % 2:
        raise InvalidLabelling(f"a labelling with {lab.n} labels has no signed form")
    n = lab.n // 2
    return SignedLabelling(n, tuple(cyclic_to_signed(x, n) for x in lab.labels))


def is_neighboring(seq: Sequence[int], n: int) -> bool:
    """Cyclically consecutive labels are equal or adjacent modulo ``n``."""
    if not seq:
        raise ValueError("empty label sequence")
    return kernels.transition_counts(seq, n)[0]


def cycle_sequences(T: Triangulation, lab) -> list[tuple[int, ...]]:
    """Label sequences read along each boundary cycle in its stored direction."""
    lab.check_total(T)
    return [tuple(lab[v] for v in c.vertex_loop) for c in T.boundary.cycles]


def is_nl_on_boundary(T: Triangulation, lab: Labelling) -> bool:
    return all(is_neighboring(seq, lab.n) for seq in cycle_sequences(T, lab))


def is_antipodal_on_boundary(T: Triangulation, sl: SignedLabelling) -> bool:
    sl.check_total(T)
    pairs = antipodal_pairs(T)
    return all(sl[w] == -sl[v] for v, w in pairs.items())


class ComplementaryEdges(NamedTuple):
    boundary: tuple[tuple[int, int], ...]
    internal: tuple[tuple[int, int], ...]


def complementary_edges(T: Triangulation, sl: SignedLabelling) -> ComplementaryEdges:
    """Edges whose endpoint labels are opposite numbers."""
    sl.check_total(T)
    hits = kernels.opposite_pairs(T.edge_array, sl.array)
    bedges = T.boundary_edges
    on_boundary, internal = [], []
    for k in hits:
        e = T.edges[k]
        (on_boundary if e in bedges else internal).append(e)
    return ComplementaryEdges(tuple(on_boundary), tuple(internal))
