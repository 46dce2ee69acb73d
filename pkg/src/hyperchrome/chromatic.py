"""Chromatic polynomials of hypergraphs, three ways.

* :func:`count_proper_colorings` counts colorings by exhaustion (the oracle);
* :func:`chromatic_subset_expansion` sums ``(-1)^|A| x^k(V, A)`` over every
  edge subset ``A``;
* :func:`chromatic_broken_cycle` sums the same terms over the subsets that
  contain no broken cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .cycles import broken_cycle_free, broken_cycles
from .hypergraph import (
    EdgeOrder,
    Hypergraph,
    popcount,
    require_within_cap,
    resolve_order,
    spanning_component_count,
)
from .polynomial import Polynomial, evaluate

COLORING_BUDGET_BITS = 30
_CHUNK = 1 << 18


class ColoringBudgetExceeded(ValueError):
    pass


def is_proper(G: Hypergraph, coloring: Sequence[int]) -> bool:
    """True iff no edge of ``G`` is monochromatic under ``coloring``.

    ``coloring[v]`` is the color of vertex ``v``; it must cover every vertex.
    """
    if len(coloring) != G.vertex_count:
        raise ValueError(
            f"coloring has {len(coloring)} entries for {G.vertex_count} vertices"
        )
    return all(len({coloring[v] for v in e}) > 1 for e in G.edges)


def count_proper_colorings(G: Hypergraph, k: int) -> int:
    """Number of proper ``k``-colorings, by visiting all ``k**|V|`` colorings."""
    n = G.vertex_count
    if k < 0:
        raise ValueError("number of colors must be nonnegative")
    if k >= 2 and n * np.log2(k) > COLORING_BUDGET_BITS:
        raise ColoringBudgetExceeded(
            f"{k}^{n} colorings exceed the budget of 2^{COLORING_BUDGET_BITS}"
        )
    total = k**n
    if total == 0:
        return 0
    edges = [sorted(e) for e in G.edges]
    places = k ** np.arange(n, dtype=np.int64)
    count = 0
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        colors = (idx[:, None] // places[None, :]) % k
        ok = np.ones(len(idx), dtype=bool)
        for e in edges:
            first = colors[:, e[0]]
            mono = np.all(colors[:, e] == first[:, None], axis=1)
            ok &= ~mono
        count += int(ok.sum())
    return count


def _accumulate(G: Hypergraph, keep: Optional[Callable[[int], bool]] = None,
                check: Optional[Callable[[int, int], None]] = None) -> tuple[Polynomial, int]:
    require_within_cap(G)
    coeffs = [0] * (G.vertex_count + 1)
    terms = 0
    for A in G.subsets():
        if keep is not None and not keep(A):
            continue
        k = spanning_component_count(G, A)
        if check is not None:
            check(A, k)
        coeffs[k] += -1 if popcount(A) & 1 else 1
        terms += 1
    return Polynomial(coeffs), terms


def chromatic_subset_expansion(G: Hypergraph) -> Polynomial:
    return _accumulate(G)[0]


def _graph_check(G: Hypergraph):
    # broken-cycle-free subsets of a graph are forests
    n = G.vertex_count

    def check(A: int, k: int) -> None:
        assert k == n - popcount(A), f"forest identity fails on subset {A:#b}"

    return check if G.is_graph() else None


def broken_cycle_expansion(G: Hypergraph, order: Optional[EdgeOrder] = None) -> tuple[Polynomial, int]:
    """Broken-cycle-pruned sum together with the number of admissible subsets."""
    order = resolve_order(G, order)
    require_within_cap(G)
    broken = broken_cycles(G, order)
    return _accumulate(G, lambda A: broken_cycle_free(A, broken), _graph_check(G))


def chromatic_broken_cycle(G: Hypergraph, order: Optional[EdgeOrder] = None) -> Polynomial:
    return broken_cycle_expansion(G, order)[0]


def chromatic_values(G: Hypergraph, max_k: int) -> dict[int, int]:
    return {k: count_proper_colorings(G, k) for k in range(max_k + 1)}


@dataclass(frozen=True)
class PruningStats:
    total_subsets: int
    admissible_subsets: int
    pruned_fraction: float


def pruning_stats(G: Hypergraph, order: Optional[EdgeOrder] = None) -> PruningStats:
    order = resolve_order(G, order)
    require_within_cap(G)
    broken = broken_cycles(G, order)
    total = 1 << G.edge_count
    admissible = sum(1 for A in G.subsets() if broken_cycle_free(A, broken))
    return PruningStats(total, admissible, 1 - admissible / total)


__all__ = [
    "ColoringBudgetExceeded",
    "PruningStats",
    "broken_cycle_expansion",
    "chromatic_broken_cycle",
    "chromatic_subset_expansion",
    "chromatic_values",
    "count_proper_colorings",
    "evaluate",
    "is_proper",
    "pruning_stats",
]
