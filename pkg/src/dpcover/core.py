"""Value types: partial maps, families, hypergraphs, colorings, and classification.

A partial map assigns bits to finitely many nonnegative integer vertices and is
identified with its graph, stored as a vertex-sorted tuple of (vertex, bit)
pairs.  A family is a duplicate-free collection of partial maps with set
semantics.  A coloring is a total bit assignment on a sorted universe, packed
into an integer: bit i of `bits` is the color of the i-th vertex in sorted
universe order.  A coloring f "avoids" a map phi when phi is not a subset of f;
f colors a family when it avoids every member.  Everything here is immutable
and pure.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import (
    DuplicateMapError,
    DuplicateVertexError,
    OutOfUniverseError,
)

VertexId = int


@dataclass(frozen=True, order=True)
class PartialMap:
    """A partial 0/1 assignment; `entries` is sorted by vertex and duplicate-free."""

    entries: tuple[tuple[VertexId, int], ...]

    def __post_init__(self) -> None:
        last = -1
        for vertex, bit in self.entries:
            if vertex < 0:
                raise ValueError(f"vertex ids must be nonnegative, got {vertex}")
            if vertex <= last:
                raise ValueError("entries must be strictly sorted by vertex")
            if bit not in (0, 1):
                raise ValueError(f"values must be 0 or 1, got {bit!r}")
            last = vertex

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def domain(self) -> tuple[VertexId, ...]:
        return tuple(v for v, _ in self.entries)

    def value(self, vertex: VertexId) -> int:
        for v, bit in self.entries:
            if v == vertex:
                return bit
        raise KeyError(vertex)

    def complement(self) -> "PartialMap":
        return PartialMap(tuple((v, 1 - bit) for v, bit in self.entries))

    def as_dict(self) -> dict[VertexId, int]:
        return dict(self.entries)


def make_partial_map(pairs: Iterable[tuple[VertexId, int]]) -> PartialMap:
    """Build a PartialMap from (vertex, bit) pairs in any order.

    The empty map is allowed.  Two entries for the same vertex raise
    DuplicateVertexError even when they agree.
    """
    pairs = list(pairs)
    seen: set[VertexId] = set()
    for vertex, _ in pairs:
        if vertex in seen:
            raise DuplicateVertexError(f"vertex {vertex} appears twice")
        seen.add(vertex)
    return PartialMap(tuple(sorted(pairs)))


def complement(phi: PartialMap) -> PartialMap:
    """Pointwise flip on the same domain; an involution."""
    return phi.complement()


@dataclass(frozen=True)
class Hypergraph:
    """A set of edges; each edge is a sorted vertex tuple, edges sorted and deduplicated."""

    edges: tuple[tuple[VertexId, ...], ...]

    @staticmethod
    def of(edges: Iterable[Iterable[VertexId]]) -> "Hypergraph":
        normalized = {tuple(sorted(set(e))) for e in edges}
        return Hypergraph(tuple(sorted(normalized, key=lambda e: (len(e), e))))

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, edge: Iterable[VertexId]) -> bool:
        return tuple(sorted(set(edge))) in set(self.edges)

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return tuple(sorted({v for e in self.edges for v in e}))

    @property
    def uniformity(self) -> int | None:
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None


@dataclass(frozen=True)
class Family:
    """A duplicate-free collection of partial maps, stored in sorted order."""

    maps: tuple[PartialMap, ...]

    @staticmethod
    def of(maps: Iterable[PartialMap]) -> "Family":
        maps = sorted(maps)
        for a, b in zip(maps, maps[1:]):
            if a == b:
                raise DuplicateMapError(f"duplicate map {a.entries}")
        return Family(tuple(maps))

    def __len__(self) -> int:
        return len(self.maps)

    def __iter__(self) -> Iterator[PartialMap]:
        return iter(self.maps)

    def __contains__(self, phi: PartialMap) -> bool:
        return phi in set(self.maps)

    @property
    def universe(self) -> tuple[VertexId, ...]:
        return tuple(sorted({v for m in self.maps for v, _ in m.entries}))


def domain_hypergraph(family: Family) -> Hypergraph:
    """The hypergraph whose edges are the domains of the family's maps."""
    return Hypergraph.of(m.domain for m in family.maps)


@dataclass(frozen=True)
class Coloring:
    """Total assignment on `universe` (sorted); bit i of `bits` colors universe[i]."""

    universe: tuple[VertexId, ...]
    bits: int

    def __post_init__(self) -> None:
        if list(self.universe) != sorted(set(self.universe)):
            raise ValueError("universe must be sorted and duplicate-free")
        if not 0 <= self.bits < (1 << len(self.universe)):
            raise ValueError("bits out of range for universe size")

    def value(self, vertex: VertexId) -> int:
        try:
            i = self.universe.index(vertex)
        except ValueError:
            raise OutOfUniverseError(f"vertex {vertex} not in universe") from None
        return (self.bits >> i) & 1

    def as_dict(self) -> dict[VertexId, int]:
        return {v: (self.bits >> i) & 1 for i, v in enumerate(self.universe)}

    @staticmethod
    def from_assignment(assignment: Mapping[VertexId, int]) -> "Coloring":
        universe = tuple(sorted(assignment))
        bits = sum((assignment[v] & 1) << i for i, v in enumerate(universe))
        return Coloring(universe, bits)


def avoids(coloring: Coloring, phi: PartialMap) -> bool:
    """True iff phi is not contained in the coloring.

    The empty map is contained in every coloring, hence avoided by none.
    Raises OutOfUniverseError if phi constrains a vertex outside the universe.
    """
    return not all(coloring.value(v) == bit for v, bit in phi.entries)


def colors(coloring: Coloring, family: Family) -> bool:
    """True iff the coloring avoids every map of the family."""
    return all(avoids(coloring, phi) for phi in family.maps)


@dataclass(frozen=True)
class FamilyProfile:
    """Structural classification of a family.

    cover_of is the hypergraph the family is a valid at-most-2-fold cover of
    (domains inside the hypergraph, same-domain maps disjoint as graphs, at
    most two maps per edge); when invalid, cover_of is None and
    cover_violation holds a machine-readable (reason, edge) pair.
    """

    uniformity: int | None
    is_unary: bool
    is_binary: bool
    cover_of: Hypergraph | None
    cover_violation: tuple[str, tuple[VertexId, ...]] | None
    universe_size: int
    map_count: int


def classify(family: Family, candidate: Hypergraph | None = None) -> FamilyProfile:
    """Compute uniformity, unary/binary flags, and cover validity.

    The cover check runs against `candidate` when given, else against the
    family's own domain hypergraph.  A unary family is always a valid cover of
    its domain hypergraph.
    """
    sizes = {len(m) for m in family.maps}
    uniformity = sizes.pop() if len(sizes) == 1 else None

    by_domain: dict[tuple[VertexId, ...], list[PartialMap]] = {}
    for m in family.maps:
        by_domain.setdefault(m.domain, []).append(m)
    counts = Counter({d: len(ms) for d, ms in by_domain.items()})
    is_unary = all(c == 1 for c in counts.values())
    is_binary = all(c <= 2 for c in counts.values())

    target = candidate if candidate is not None else domain_hypergraph(family)
    edge_set = set(target.edges)
    violation: tuple[str, tuple[VertexId, ...]] | None = None
    for domain in sorted(by_domain, key=lambda d: (len(d), d)):
        group = by_domain[domain]
        if domain not in edge_set:
            violation = ("domain-not-in-hypergraph", domain)
            break
        if len(group) > 2:
            violation = ("more-than-two-maps-on-edge", domain)
            break
        if len(group) == 2 and set(group[0].entries) & set(group[1].entries):
            violation = ("same-domain-maps-overlap", domain)
            break

    return FamilyProfile(
        uniformity=uniformity,
        is_unary=is_unary,
        is_binary=is_binary,
        cover_of=target if violation is None else None,
        cover_violation=violation,
        universe_size=len(family.universe),
        map_count=len(family.maps),
    )


def relabel_family(family: Family, mapping: Mapping[VertexId, VertexId]) -> Family:
    """Apply an injective vertex relabeling to every map."""
    image = [mapping[v] for v in family.universe]
    if len(set(image)) != len(image):
        raise ValueError("relabeling must be injective on the universe")
    return Family.of(
        make_partial_map((mapping[v], bit) for v, bit in m.entries) for m in family.maps
    )
