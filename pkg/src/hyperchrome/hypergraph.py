"""Hypergraph data model, edge orders, edge-subset bit masks and component counting.

Edges carry identity: an edge is addressed by its position in the edge table,
so parallel hyperedges over the same vertex set stay distinguishable. Edge
subsets are plain ``int`` bit masks (bit ``i`` set means edge ``i`` is a member).
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

DEFAULT_EDGE_CAP = 24
HARD_EDGE_CAP = 30
EDGE_CAP_ENV = "HYPERCHROME_EDGE_CAP"


class HypergraphError(ValueError):
    """Raised for structurally invalid hypergraphs."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class EdgeCapExceeded(ValueError):
    """Raised when an exhaustive operation would enumerate too many subsets."""


def edge_cap() -> int:
    """Maximum |E| accepted by exhaustive subset operations.

    Read from ``HYPERCHROME_EDGE_CAP`` on every call; values above the hard
    maximum are clamped to it.
    """
    raw = os.environ.get(EDGE_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_EDGE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{EDGE_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ValueError(f"{EDGE_CAP_ENV} must be nonnegative, got {cap}")
    return min(cap, HARD_EDGE_CAP)


def require_within_cap(G: "Hypergraph") -> None:
    cap = edge_cap()
    if G.edge_count > cap:
        raise EdgeCapExceeded(
            f"edge cap exceeded: {G.edge_count} edges > cap {cap} "
            f"(set {EDGE_CAP_ENV}, hard max {HARD_EDGE_CAP})"
        )


# -- edge subsets as bit masks -------------------------------------------------

def edge_mask(edge_ids: Iterable[int]) -> int:
    mask = 0
    for e in edge_ids:
        if e < 0:
            raise ValueError(f"negative edge id {e}")
        mask |= 1 << e
    return mask


def mask_edges(mask: int) -> tuple[int, ...]:
    """Edge ids contained in ``mask``, ascending."""
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


# -- union-find ----------------------------------------------------------------

class UnionFind:
    """Disjoint sets over ``0..size-1`` with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.weight = [1] * size
        self.components = size

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.weight[ra] < self.weight[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.weight[ra] += self.weight[rb]
        self.components -= 1
        return True

    def merge(self, members: Iterable[int]) -> None:
        it = iter(members)
        first = next(it, None)
        if first is None:
            return
        for v in it:
            self.union(first, v)


# -- data model ----------------------------------------------------------------

@dataclass(frozen=True)
class Hypergraph:
    """Finite hypergraph with a vertex count and an ordered multiset of edges.

    Construction does not validate; call :func:`validate` or
    :meth:`checked` (parsers always do).
    """

    vertex_count: int
    edges: tuple[frozenset[int], ...]
    vertex_labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(frozenset(e) for e in self.edges))
        if self.vertex_labels is not None:
            object.__setattr__(self, "vertex_labels", tuple(str(s) for s in self.vertex_labels))

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Iterable],
        vertices: Optional[Sequence] = None,
    ) -> "Hypergraph":
        """Build a validated hypergraph from edges given by vertex label.

        Without ``vertices`` the labels are collected from the edges in
        sorted order. With an integer ``vertices`` the edges must use ids
        ``0..vertices-1``.
        """
        edges = [list(e) for e in edges]
        if isinstance(vertices, int):
            return cls(vertices, tuple(frozenset(e) for e in edges)).checked()
        if vertices is None:
            seen = {v for e in edges for v in e}
            try:
                vertices = sorted(seen)
            except TypeError:
                vertices = sorted(seen, key=str)
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise HypergraphError(["duplicate vertex label"])
        missing = sorted({str(v) for e in edges for v in e if v not in index})
        if missing:
            raise HypergraphError([f"unknown vertex label {m!r}" for m in missing])
        G = cls(
            len(vertices),
            tuple(frozenset(index[v] for v in e) for e in edges),
            tuple(str(v) for v in vertices),
        )
        return G.checked()

    def checked(self) -> "Hypergraph":
        violations = validate(self)
        if violations:
            raise HypergraphError(violations)
        return self

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def all_edges(self) -> int:
        """Mask of the full edge set."""
        return (1 << len(self.edges)) - 1

    def label(self, v: int) -> str:
        if self.vertex_labels is None:
            return str(v)
        return self.vertex_labels[v]

    def edge_labels(self, e: int) -> list[str]:
        return [self.label(v) for v in sorted(self.edges[e])]

    def covered_vertices(self, A: int) -> frozenset[int]:
        """V(A): the union of the edges in ``A``."""
        out: set[int] = set()
        for e in mask_edges(A):
            out |= self.edges[e]
        return frozenset(out)

    def is_graph(self) -> bool:
        return all(len(e) <= 2 for e in self.edges)

    def is_simple_graph(self) -> bool:
        return all(len(e) == 2 for e in self.edges) and len(set(self.edges)) == len(self.edges)

    def subsets(self) -> Iterator[int]:
        """All 2^|E| edge subsets, in numeric mask order."""
        return iter(range(1 << len(self.edges)))

    def to_dict(self) -> dict:
        labels = list(self.vertex_labels) if self.vertex_labels else list(range(self.vertex_count))
        return {
            "vertices": labels,
            "edges": [[labels[v] for v in sorted(e)] for e in self.edges],
        }

    def digest(self) -> str:
        """SHA-256 over a canonical JSON rendering (labels and edge order included)."""
        payload = json.dumps(self.to_dict(), separators=(",", ":"), default=str)
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(self.edge_labels(e)) + "}" for e in range(self.edge_count))
        return f"Hypergraph(|V|={self.vertex_count}, E=[{body}])"


@dataclass(frozen=True)
class EdgeOrder:
    """A linear order on the edges, stored as 1-based ranks per edge id."""

    ranks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))
        if sorted(self.ranks) != list(range(1, len(self.ranks) + 1)):
            raise ValueError(f"ranks {self.ranks} are not a permutation of 1..{len(self.ranks)}")

    @classmethod
    def identity(cls, m: int) -> "EdgeOrder":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "EdgeOrder":
        """Order given as edge ids from smallest to largest."""
        seq = [int(e) for e in seq]
        if sorted(seq) != list(range(len(seq))):
            raise ValueError(f"{seq} is not a permutation of edge ids 0..{len(seq) - 1}")
        ranks = [0] * len(seq)
        for r, e in enumerate(seq, start=1):
            ranks[e] = r
        return cls(tuple(ranks))

    def __len__(self) -> int:
        return len(self.ranks)

    def rank(self, e: int) -> int:
        return self.ranks[e]

    def sequence(self) -> tuple[int, ...]:
        """Edge ids from smallest to largest."""
        return tuple(sorted(range(len(self.ranks)), key=self.ranks.__getitem__))

    def edge_at(self, rank: int) -> int:
        return self.sequence()[rank - 1]

    def max_edge(self, A: int) -> int:
        return max(mask_edges(A), key=self.ranks.__getitem__)

    def min_edge(self, A: int) -> int:
        return min(mask_edges(A), key=self.ranks.__getitem__)

    def check_for(self, G: Hypergraph) -> "EdgeOrder":
        if len(self.ranks) != G.edge_count:
            raise ValueError(f"order covers {len(self.ranks)} edges, hypergraph has {G.edge_count}")
        return self


def resolve_order(G: Hypergraph, order: Optional[EdgeOrder]) -> EdgeOrder:
    if order is None:
        return EdgeOrder.identity(G.edge_count)
    return order.check_for(G)


# -- operations ----------------------------------------------------------------

def validate(G: Hypergraph) -> list[str]:
    """Every structural violation of ``G``; an empty list means valid."""
    violations = []
    if G.vertex_count < 0:
        violations.append(f"negative vertex count {G.vertex_count}")
    if G.vertex_labels is not None and len(G.vertex_labels) != G.vertex_count:
        violations.append(
            f"{len(G.vertex_labels)} vertex labels for {G.vertex_count} vertices"
        )
    for i, e in enumerate(G.edges):
        if not e:
            violations.append(f"edge {i}: empty edge")
            continue
        bad = sorted(v for v in e if not isinstance(v, int) or v < 0 or v >= G.vertex_count)
        if bad:
            violations.append(f"edge {i}: vertex out of range {bad}")
    return violations


def _component_count(vertices: Iterable[int], edges: Iterable[frozenset[int]]) -> int:
    vertices = list(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    uf = UnionFind(len(vertices))
    for e in edges:
        uf.merge(index[v] for v in e)
    return uf.components


def spanning_component_count(G: Hypergraph, A: int) -> int:
    """k((V, A)); isolated vertices are singleton components."""
    uf = UnionFind(G.vertex_count)
    for e in mask_edges(A):
        uf.merge(G.edges[e])
    return uf.components


def restricted_component_count(G: Hypergraph, A: int) -> int:
    """k((V(A), A)), with V(A) the vertices covered by ``A``; 0 for the empty set."""
    return _component_count(G.covered_vertices(A), (G.edges[e] for e in mask_edges(A)))
