"""δ-cycles and broken cycles of hypergraphs.

A nonempty edge subset ``A`` is a *witness* when every edge of ``A`` can be
deleted from ``(V(A), A)`` without raising the number of connected
components. δ-cycles are the inclusion-minimal witnesses. Witness subgraphs
are always taken on the covered vertex set ``V(A)``: extra isolated vertices
add the same amount to both sides of the removability test, so one
representative per edge set suffices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from .hypergraph import (
    EdgeOrder,
    Hypergraph,
    _component_count,
    edge_mask,
    is_subset,
    mask_edges,
    popcount,
    require_within_cap,
    resolve_order,
)


@dataclass(frozen=True)
class DeltaCycle:
    edges: int
    vertices: frozenset[int]

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return mask_edges(self.edges)

    def __len__(self) -> int:
        return popcount(self.edges)


def is_removable(G: Hypergraph, A: int, e: int) -> bool:
    """Whether deleting ``e`` from ``(V(A), A)`` keeps the component count.

    The vertex set stays ``V(A)``: vertices only covered by ``e`` become
    isolated components after the deletion.
    """
    if not (A >> e) & 1:
        raise ValueError(f"edge {e} is not in the subset {mask_edges(A)}")
    vertices = G.covered_vertices(A)
    members = [G.edges[f] for f in mask_edges(A)]
    rest = [G.edges[f] for f in mask_edges(A & ~(1 << e))]
    return _component_count(vertices, members) == _component_count(vertices, rest)


def is_delta_cyclic_witness(G: Hypergraph, A: int) -> bool:
    if A == 0:
        return False
    vertices = G.covered_vertices(A)
    ids = mask_edges(A)
    k = _component_count(vertices, (G.edges[f] for f in ids))
    for e in ids:
        if _component_count(vertices, (G.edges[f] for f in ids if f != e)) != k:
            return False
    return True


@lru_cache(maxsize=256)
def _minimal_witnesses(G: Hypergraph) -> tuple[int, ...]:
    found: list[int] = []
    m = G.edge_count
    for size in range(1, m + 1):
        for ids in combinations(range(m), size):
            A = edge_mask(ids)
            if any(is_subset(C, A) for C in found):
                continue
            if is_delta_cyclic_witness(G, A):
                found.append(A)
    return tuple(sorted(found, key=lambda C: (popcount(C), mask_edges(C))))


def delta_cycle_masks(G: Hypergraph) -> tuple[int, ...]:
    """Edge masks of all δ-cycles, ordered by size then edge ids."""
    require_within_cap(G)
    return _minimal_witnesses(G)


def enumerate_delta_cycles(G: Hypergraph) -> list[DeltaCycle]:
    return [DeltaCycle(C, G.covered_vertices(C)) for C in delta_cycle_masks(G)]


def is_delta_cyclic(G: Hypergraph) -> bool:
    # every witness contains a minimal one
    return bool(delta_cycle_masks(G))


def broken_cycles(G: Hypergraph, order: Optional[EdgeOrder] = None) -> tuple[int, ...]:
    """The set of broken cycles under ``order`` (default: listing order).

    Each δ-cycle loses its maximal edge; duplicates collapse. A δ-cycle made
    of a single edge yields the empty broken cycle ``0``.
    """
    order = resolve_order(G, order)
    out = {C & ~(1 << order.max_edge(C)) for C in delta_cycle_masks(G)}
    return tuple(sorted(out, key=lambda B: (popcount(B), mask_edges(B))))


def closing_edges(G: Hypergraph, B: int) -> tuple[int, ...]:
    """Edges ``e`` not in ``B`` such that ``B + e`` is the edge set of a δ-cycle."""
    cycles = set(delta_cycle_masks(G))
    return tuple(
        e for e in range(G.edge_count) if not (B >> e) & 1 and (B | (1 << e)) in cycles
    )


def _closing_candidates(G: Hypergraph, order: EdgeOrder, B: int) -> tuple[int, ...]:
    if B not in broken_cycles(G, order):
        raise ValueError(f"{mask_edges(B)} is not a broken cycle under the given order")
    return closing_edges(G, B)


def min_closing_edge(G: Hypergraph, order: Optional[EdgeOrder], B: int) -> int:
    order = resolve_order(G, order)
    return min(_closing_candidates(G, order, B), key=order.rank)


def max_closing_edge(G: Hypergraph, order: Optional[EdgeOrder], B: int) -> int:
    order = resolve_order(G, order)
    return max(_closing_candidates(G, order, B), key=order.rank)


class BlockIndexer:
    """Assigns each edge subset to its block of the cancellation partition.

    Block 0 holds the broken-cycle-free subsets. Any other subset ``A`` sits
    in block ``i`` where ``i`` is the rank of the smallest minimal closing
    edge over all broken cycles contained in ``A``. Broken cycles and their
    closing edges are computed once per (hypergraph, order).

    With ``upper_closers=True`` only closing edges ranked above every edge of
    the broken cycle are considered. The plain partition does not always pair
    ``A`` with ``A + e_i`` inside a block (see :func:`block_pairing_failures`);
    the restricted one does.
    """

    def __init__(self, G: Hypergraph, order: Optional[EdgeOrder] = None, upper_closers: bool = False):
        self.G = G
        self.order = resolve_order(G, order)
        rank = self.order.rank
        self.closers = []
        for B in broken_cycles(G, self.order):
            if upper_closers:
                top = max((rank(f) for f in mask_edges(B)), default=0)
                r = min(rank(e) for e in closing_edges(G, B) if rank(e) > top)
            else:
                r = rank(min_closing_edge(G, self.order, B))
            self.closers.append((B, r))

    def __call__(self, A: int) -> int:
        ranks = [r for B, r in self.closers if is_subset(B, A)]
        return min(ranks) if ranks else 0


def block_index(G: Hypergraph, order: Optional[EdgeOrder], A: int) -> int:
    require_within_cap(G)
    return BlockIndexer(G, order)(A)


def block_pairing_failures(G: Hypergraph, order: Optional[EdgeOrder] = None,
                           upper_closers: bool = False) -> list[tuple[int, int]]:
    """Pairs ``(A, i)`` with ``e_i`` not in ``A`` where exactly one of ``A`` and
    ``A + e_i`` lies in block ``i``."""
    require_within_cap(G)
    index = BlockIndexer(G, order, upper_closers)
    blocks = [index(A) for A in G.subsets()]
    out = []
    for i in range(1, G.edge_count + 1):
        bit = 1 << index.order.edge_at(i)
        for A in G.subsets():
            if A & bit:
                continue
            if (blocks[A] == i) != (blocks[A | bit] == i):
                out.append((A, i))
    return out


def broken_cycle_free(A: int, broken: Iterable[int]) -> bool:
    return not any(is_subset(B, A) for B in broken)
