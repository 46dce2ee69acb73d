"""Small named hypergraphs and seeded random generators."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Optional

from .hypergraph import EdgeOrder, Hypergraph


def five_vertex_example() -> Hypergraph:
    """Five vertices 1..5 with edges {1,3}, {1,2,3}, {1,4,5}, {3,4,5}."""
    return Hypergraph.from_edges([[1, 3], [1, 2, 3], [1, 4, 5], [3, 4, 5]], vertices=[1, 2, 3, 4, 5])


def triangle() -> Hypergraph:
    return Hypergraph.from_edges([[0, 1], [0, 2], [1, 2]], vertices=3)


def edgeless(n: int) -> Hypergraph:
    return Hypergraph(n, ())


def single_edge(size: int) -> Hypergraph:
    return Hypergraph.from_edges([range(size)], vertices=size)


def cycle_graph(n: int) -> Hypergraph:
    return Hypergraph.from_edges([[i, (i + 1) % n] for i in range(n)], vertices=n)


def complete_graph(n: int) -> Hypergraph:
    return Hypergraph.from_edges(combinations(range(n), 2), vertices=n)


def random_hypergraph(n: int, m: int, rng: random.Random,
                      max_arity: int = 4, min_arity: int = 1) -> Hypergraph:
    """``m`` edges, each a uniform subset of a uniform size in ``min_arity..min(n, max_arity)``."""
    if n < 1 and m > 0:
        raise ValueError("edges need at least one vertex")
    hi = min(n, max_arity)
    lo = min(min_arity, hi)
    edges = []
    for _ in range(m):
        size = rng.randint(lo, hi)
        edges.append(frozenset(rng.sample(range(n), size)))
    return Hypergraph(n, tuple(edges))


def random_simple_graph(n: int, rng: random.Random, p: float = 0.5,
                        max_edges: Optional[int] = None) -> Hypergraph:
    """G(n, p) graph, optionally truncated to a random subset of ``max_edges`` edges."""
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    if max_edges is not None and len(edges) > max_edges:
        edges = sorted(rng.sample(edges, max_edges))
    return Hypergraph(n, tuple(frozenset(e) for e in edges))


def random_order(m: int, rng: random.Random) -> EdgeOrder:
    seq = list(range(m))
    rng.shuffle(seq)
    return EdgeOrder.from_sequence(seq)


def random_corpus(count: int, seed: int, max_vertices: int = 6, max_edges: int = 6) -> list[Hypergraph]:
    """Seeded corpus of small hypergraphs.

    Every fifth member may contain singleton edges; the rest use arity >= 2
    so that most members have a nonzero chromatic polynomial.
    """
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, max_vertices)
        m = rng.randint(0, max_edges)
        min_arity = 1 if i % 5 == 0 or n == 1 else 2
        out.append(random_hypergraph(n, m, rng, min_arity=min_arity))
    return out
