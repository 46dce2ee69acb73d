import random
from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperchrome import (
    EdgeOrder,
    Hypergraph,
    block_index,
    block_pairing_failures,
    broken_cycles,
    cancelling_family,
    edge_mask,
    enumerate_delta_cycles,
    is_delta_cyclic,
    is_delta_cyclic_witness,
    is_removable,
    mask_edges,
    max_closing_edge,
    min_closing_edge,
)
from hyperchrome.generators import random_simple_graph, single_edge

from oracles import bfs_components
from strategies import graph_and_order, hypergraphs


def oracle_witness(G, ids):
    vertices = set().union(*(G.edges[e] for e in ids))
    k = bfs_components(vertices, [G.edges[e] for e in ids])
    return all(
        bfs_components(vertices, [G.edges[f] for f in ids if f != e]) == k for e in ids
    )


def oracle_delta_cycles(G):
    witnesses = [
        frozenset(ids)
        for r in range(1, G.edge_count + 1)
        for ids in combinations(range(G.edge_count), r)
        if oracle_witness(G, ids)
    ]
    return {W for W in witnesses if not any(V < W for V in witnesses)}


def multigraph_cycle_edge_sets(G):
    """Cycles of a multigraph: connected edge sets where every touched vertex
    has degree 2, a loop counting twice."""
    out = set()
    for r in range(1, G.edge_count + 1):
        for ids in combinations(range(G.edge_count), r):
            degree = {}
            for e in ids:
                for v in G.edges[e]:
                    degree[v] = degree.get(v, 0) + (2 if len(G.edges[e]) == 1 else 1)
            if all(d == 2 for d in degree.values()) and bfs_components(
                degree, [G.edges[e] for e in ids]
            ) == 1:
                out.add(frozenset(ids))
    return out


PARALLEL_CLOSERS = Hypergraph.from_edges([["a", "b"], ["b", "c"], ["a", "c"], ["a", "c"]])
LOOP = Hypergraph.from_edges([[0, 1], [1]], vertices=2)
PAIR = Hypergraph.from_edges([["u", "v"], ["u", "v"]])


class TestRemovable:
    def test_edge_with_private_vertex(self, five):
        assert not is_removable(five, five.all_edges, 1)

    def test_edge_inside_the_cycle(self, five):
        assert is_removable(five, edge_mask([0, 2, 3]), 0)

    def test_single_edge_is_a_bridge(self, tri):
        assert not is_removable(tri, edge_mask([0]), 0)

    def test_edge_must_be_member(self, five):
        with pytest.raises(ValueError):
            is_removable(five, edge_mask([0, 2]), 3)


class TestWitness:
    def test_five_vertex_cycle(self, five):
        assert is_delta_cyclic_witness(five, edge_mask([0, 2, 3]))

    def test_whole_five_vertex_hypergraph_is_not_a_witness(self, five):
        assert not is_delta_cyclic_witness(five, five.all_edges)

    def test_singleton_edge(self):
        assert is_delta_cyclic_witness(single_edge(1), 1)

    def test_empty_set(self, five):
        assert not is_delta_cyclic_witness(five, 0)


class TestDeltaCyclic:
    def test_five_vertex(self, five):
        assert is_delta_cyclic(five)

    def test_single_edge(self):
        assert not is_delta_cyclic(single_edge(2))

    def test_parallel_pair(self):
        assert is_delta_cyclic(PAIR)


class TestEnumerate:
    def test_five_vertex_has_one_cycle(self, five):
        cycles = enumerate_delta_cycles(five)
        assert [C.edge_ids for C in cycles] == [(0, 2, 3)]
        assert {five.label(v) for v in cycles[0].vertices} == {"1", "3", "4", "5"}

    def test_triangle(self, tri):
        # frozen from the brute-force oracle over the 7 nonempty subsets
        assert oracle_delta_cycles(tri) == {frozenset({0, 1, 2})}
        assert [C.edge_ids for C in enumerate_delta_cycles(tri)] == [(0, 1, 2)]

    def test_edgeless(self):
        assert enumerate_delta_cycles(Hypergraph(4, ())) == []

    @settings(max_examples=150, deadline=None)
    @given(hypergraphs())
    def test_matches_brute_force(self, G):
        assert {frozenset(C.edge_ids) for C in enumerate_delta_cycles(G)} == oracle_delta_cycles(G)

    @settings(max_examples=100, deadline=None)
    @given(hypergraphs())
    def test_minimality_recheck(self, G):
        for C in enumerate_delta_cycles(G):
            assert is_delta_cyclic_witness(G, C.edges)
            assert C.vertices == G.covered_vertices(C.edges)
            ids = C.edge_ids
            for r in range(1, len(ids)):
                for sub in combinations(ids, r):
                    assert not is_delta_cyclic_witness(G, edge_mask(sub))

    @settings(max_examples=100, deadline=None)
    @given(hypergraphs())
    def test_delta_cyclic_iff_some_cycle(self, G):
        any_witness = any(is_delta_cyclic_witness(G, A) for A in range(1, G.all_edges + 1))
        assert is_delta_cyclic(G) == any_witness == bool(enumerate_delta_cycles(G))


class TestGraphSpecialization:
    def test_random_simple_graphs_against_networkx(self):
        rng = random.Random(11)
        for _ in range(40):
            G = random_simple_graph(rng.randint(3, 7), rng, p=0.45, max_edges=10)
            ours = {frozenset(C.edge_ids) for C in enumerate_delta_cycles(G)}
            edge_id = {frozenset(e): i for i, e in enumerate(G.edges)}
            H = nx.Graph([tuple(e) for e in G.edges])
            theirs = {
                frozenset(edge_id[frozenset((c[j], c[(j + 1) % len(c)]))] for j in range(len(c)))
                for c in nx.simple_cycles(H)
            }
            assert ours == theirs

    @settings(max_examples=150, deadline=None)
    @given(hypergraphs(max_vertices=5, max_edges=6).filter(lambda G: G.is_graph()))
    def test_multigraphs_with_loops(self, G):
        ours = {frozenset(C.edge_ids) for C in enumerate_delta_cycles(G)}
        assert ours == multigraph_cycle_edge_sets(G)

    def test_loop_and_parallel_pair(self):
        assert [C.edge_ids for C in enumerate_delta_cycles(LOOP)] == [(1,)]
        assert [C.edge_ids for C in enumerate_delta_cycles(PAIR)] == [(0, 1)]


class TestBrokenCycles:
    def test_five_vertex_listing_order(self, five):
        assert broken_cycles(five) == (edge_mask([0, 2]),)

    def test_triangle(self, tri):
        assert broken_cycles(tri) == (edge_mask([0, 1]),)

    def test_triangle_reversed(self, tri):
        assert broken_cycles(tri, EdgeOrder.from_sequence([2, 1, 0])) == (edge_mask([1, 2]),)

    def test_singleton_cycle_gives_empty_broken_cycle(self):
        assert broken_cycles(LOOP) == (0,)

    def test_duplicates_collapse(self):
        # both triangles lose their parallel closing edge and leave {ab, bc}
        assert broken_cycles(PARALLEL_CLOSERS) == (edge_mask([2]), edge_mask([0, 1]))

    def test_invalid_order(self, tri):
        with pytest.raises(ValueError):
            broken_cycles(tri, EdgeOrder.identity(4))

    @settings(max_examples=100, deadline=None)
    @given(graph_and_order())
    def test_each_broken_cycle_is_a_cycle_minus_its_top(self, case):
        G, order = case
        cycles = [C.edges for C in enumerate_delta_cycles(G)]
        broken = set(broken_cycles(G, order))
        assert broken == {C & ~(1 << order.max_edge(C)) for C in cycles}
        for B in broken:
            assert any(B & ~C == 0 and bin(C).count("1") == bin(B).count("1") + 1 and B != C for C in cycles)

    @settings(max_examples=100, deadline=None)
    @given(graph_and_order(), st.randoms(use_true_random=False))
    def test_edges_outside_cycles_do_not_matter(self, case, rnd):
        G, order = case
        in_cycles = 0
        for C in enumerate_delta_cycles(G):
            in_cycles |= C.edges
        seq = [e for e in order.sequence() if (in_cycles >> e) & 1]
        for e in order.sequence():
            if not (in_cycles >> e) & 1:
                seq.insert(rnd.randint(0, len(seq)), e)
        assert set(broken_cycles(G, EdgeOrder.from_sequence(seq))) == set(broken_cycles(G, order))


class TestClosingEdges:
    def test_five_vertex(self, five):
        B = edge_mask([0, 2])
        assert min_closing_edge(five, None, B) == 3
        assert max_closing_edge(five, None, B) == 3

    def test_triangle(self, tri):
        B = edge_mask([0, 1])
        assert min_closing_edge(tri, None, B) == 2
        assert max_closing_edge(tri, None, B) == 2

    def test_parallel_pair(self):
        assert min_closing_edge(PAIR, None, edge_mask([0])) == 1

    def test_two_parallel_closers(self):
        B = edge_mask([0, 1])
        assert min_closing_edge(PARALLEL_CLOSERS, None, B) == 2
        assert max_closing_edge(PARALLEL_CLOSERS, None, B) == 3

    def test_not_a_broken_cycle(self, five):
        with pytest.raises(ValueError):
            min_closing_edge(five, None, edge_mask([0]))
        with pytest.raises(ValueError):
            max_closing_edge(five, None, edge_mask([1, 2]))


class TestBlockIndex:
    @pytest.mark.parametrize("edges, expected", [([0], 0), ([0, 2], 4), ([0, 2, 3], 4), ([], 0)])
    def test_five_vertex(self, five, edges, expected):
        assert block_index(five, None, edge_mask(edges)) == expected

    def test_pairing_on_small_named_graphs(self, five, tri):
        for G in (five, tri, PAIR, LOOP):
            for seq in permutations(range(G.edge_count)):
                assert block_pairing_failures(G, EdgeOrder.from_sequence(seq)) == []

    def test_pairing_fails_on_triangle_with_doubled_edge(self):
        # ab < ac1 < bc < ac2: broken cycle {ab, bc} is closed by ac1 (rank 2) and ac2,
        # so A = {ab, ac1} sits in block 3 while A + bc falls into block 2
        order = EdgeOrder.from_sequence([0, 2, 1, 3])
        A = edge_mask([0, 2])
        assert block_index(PARALLEL_CLOSERS, order, A) == 3
        assert block_index(PARALLEL_CLOSERS, order, A | edge_mask([1])) == 2
        assert block_pairing_failures(PARALLEL_CLOSERS, order) == [(A, 3), (A | edge_mask([3]), 3)]
        assert block_pairing_failures(PARALLEL_CLOSERS, order, upper_closers=True) == []

    def test_minimal_closer_below_the_broken_cycle_breaks_pairing(self):
        # broken cycle {e2, e3} is closed by e4 (its cycle's top) and by e0 (rank 1);
        # A = {e0, e2} sits in block 4 but A + e3 drops to block 1
        G = Hypergraph(3, (frozenset({0, 1, 2}), frozenset({0, 2}), frozenset({0, 2}),
                           frozenset({0, 1}), frozenset({0, 1, 2})))
        order = EdgeOrder.identity(5)
        A = edge_mask([0, 2])
        assert block_index(G, order, A) == 4
        assert block_index(G, order, A | edge_mask([3])) == 1
        assert (A, 4) in block_pairing_failures(G, order)
        assert block_pairing_failures(G, order, upper_closers=True) == []

    @settings(max_examples=150, deadline=None)
    @given(graph_and_order(max_edges=6))
    def test_upper_closer_partition_always_pairs(self, case):
        G, order = case
        assert block_pairing_failures(G, order, upper_closers=True) == []

    @settings(max_examples=100, deadline=None)
    @given(graph_and_order(max_edges=7).filter(lambda c: c[0].is_simple_graph()))
    def test_simple_graphs_pair_without_restriction(self, case):
        G, order = case
        assert block_pairing_failures(G, order) == []


class TestCancellingFamily:
    @settings(max_examples=150, deadline=None)
    @given(graph_and_order(), st.data())
    def test_involution(self, case, data):
        G, order = case
        broken = broken_cycles(G, order)
        if not broken:
            return
        sel = data.draw(st.lists(st.sampled_from(broken), min_size=1, unique=True))
        fam = cancelling_family(G, order, sel)
        assert fam.closer == max((max_closing_edge(G, order, B) for B in sel), key=order.rank)
        assert fam.is_involution()
        for A in fam.family:
            assert fam.partner(fam.partner(A)) == A

    def test_five_vertex(self, five):
        fam = cancelling_family(five, None, [edge_mask([0, 2])])
        assert fam.closer == 3
        assert sorted(mask_edges(A) for A in fam.family) == [(0, 1, 2), (0, 1, 2, 3), (0, 2), (0, 2, 3)]
