import numpy as np
import pytest

from linkirr import (
    Digraph,
    LabeledGraph,
    UndirectedGraph,
    are_isomorphic,
    are_isomorphic_labeled,
    are_isomorphic_undirected,
    brute_force_isomorphic,
    find_isomorphism,
    mapping_is_isomorphism,
)
from linkirr.constructions import counterexample_graph, five_vertex_pair
from linkirr.labeling import labeled_link

from conftest import random_digraph, random_permutation


def cyclic():
    return Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


def transitive():
    return Digraph.from_arcs(3, [(0, 1), (1, 2), (0, 2)])


class TestDigraphIso:
    def test_single_arcs(self):
        assert are_isomorphic(Digraph.from_arcs(2, [(0, 1)]),
                              Digraph.from_arcs(2, [(1, 0)]))

    def test_cyclic_vs_transitive(self):
        assert not are_isomorphic(cyclic(), transitive())

    def test_five_vertex_pair_not_isomorphic(self):
        left, right = five_vertex_pair()
        assert not are_isomorphic(left, right)
        # same underlying graph, different orientations
        assert are_isomorphic_undirected(left.underlying_graph(),
                                         right.underlying_graph())

    def test_reflexive_and_symmetric(self):
        rng = np.random.default_rng(51)
        for _ in range(50):
            a = random_digraph(rng, int(rng.integers(0, 7)))
            b = random_digraph(rng, a.n)
            assert are_isomorphic(a, a)
            assert are_isomorphic(a, b) == are_isomorphic(b, a)

    def test_relabeling_invariance(self):
        rng = np.random.default_rng(53)
        for _ in range(50):
            a = random_digraph(rng, int(rng.integers(1, 7)))
            b = random_digraph(rng, a.n)
            pa = random_permutation(rng, a.n)
            pb = random_permutation(rng, b.n)
            assert are_isomorphic(a.relabel(pa), b.relabel(pb)) == are_isomorphic(a, b)

    def test_witness_validates(self):
        rng = np.random.default_rng(59)
        validated = 0
        for _ in range(200):
            a = random_digraph(rng, int(rng.integers(1, 7)))
            b = a.relabel(random_permutation(rng, a.n))
            mapping = find_isomorphism(a, b)
            assert mapping is not None
            assert mapping_is_isomorphism(a, b, mapping)
            validated += 1
        assert validated == 200

    def test_witness_is_deterministic(self):
        rng = np.random.default_rng(61)
        for _ in range(30):
            a = random_digraph(rng, 6)
            b = a.relabel(random_permutation(rng, 6))
            assert find_isomorphism(a, b) == find_isomorphism(a, b)


class TestUndirectedIso:
    def test_paths(self):
        p3 = UndirectedGraph.from_edges(3, [(0, 1), (1, 2)])
        q3 = UndirectedGraph.from_edges(3, [(0, 2), (2, 1)])
        assert are_isomorphic_undirected(p3, q3)

    def test_path_vs_triangle(self):
        p3 = UndirectedGraph.from_edges(3, [(0, 1), (1, 2)])
        assert not are_isomorphic_undirected(p3, UndirectedGraph.complete(3))

    def test_k2_links_of_counterexample(self):
        g, _ = counterexample_graph()
        links = {v: g.induced_subgraph(g.neighbors(v)) for v in range(7)}
        # two vertices have K2 as their link
        k2_vertices = [v for v in range(7)
                       if links[v].n == 2 and links[v].size == 1]
        assert sorted(k2_vertices) == [4, 6]
        assert are_isomorphic_undirected(links[4], links[6])


class TestLabeledIso:
    def one_edge(self, label):
        return LabeledGraph(UndirectedGraph.from_edges(2, [(0, 1)]), {(0, 1): label})

    def test_same_label(self):
        assert are_isomorphic_labeled(self.one_edge(1), self.one_edge(1))

    def test_different_labels(self):
        assert not are_isomorphic_labeled(self.one_edge(1), self.one_edge(2))

    def test_counterexample_links_differ(self):
        # labeled links of (0-based) vertices 4 and 2: one red K2 vs a
        # two-red-edge path; the pair is distinguished by brute comparison
        _, lg = counterexample_graph()
        a, b = labeled_link(lg, 4), labeled_link(lg, 2)
        assert (a.n, len(a.labels)) == (2, 1)
        assert (b.n, len(b.labels)) == (3, 2)
        assert not are_isomorphic_labeled(a, b)

    def test_label_permutation_matters(self):
        g = UndirectedGraph.from_edges(3, [(0, 1), (1, 2)])
        a = LabeledGraph(g, {(0, 1): 1, (1, 2): 2})
        b = LabeledGraph(g, {(0, 1): 2, (1, 2): 1})
        c = LabeledGraph(g, {(0, 1): 1, (1, 2): 1})
        assert are_isomorphic_labeled(a, b)  # reflection swaps the edges
        assert not are_isomorphic_labeled(a, c)


class TestBruteForce:
    def test_empty_graphs(self):
        assert brute_force_isomorphic(Digraph.from_arcs(3, []), Digraph.from_arcs(3, []))

    def test_cyclic_vs_transitive(self):
        assert not brute_force_isomorphic(cyclic(), transitive())

    def test_order_guard(self):
        big = Digraph.from_arcs(10, [])
        with pytest.raises(ValueError):
            brute_force_isomorphic(big, big)

    def test_oracle_agreement_random_pairs(self):
        # 500 unrelated pairs plus relabeled (forced-isomorphic) pairs
        rng = np.random.default_rng(67)
        agreements = 0
        for _ in range(500):
            n = int(rng.integers(1, 7))
            a = random_digraph(rng, n)
            if rng.integers(0, 2) == 0:
                b = a.relabel(random_permutation(rng, n))
            else:
                b = random_digraph(rng, n)
            assert are_isomorphic(a, b) == brute_force_isomorphic(a, b)
            agreements += 1
        assert agreements == 500

    def test_oracle_agreement_order_5_exhaustive_sample(self):
        rng = np.random.default_rng(71)
        for _ in range(1000):
            a = random_digraph(rng, 5)
            b = random_digraph(rng, 5)
            assert are_isomorphic(a, b) == brute_force_isomorphic(a, b)

    def test_oracle_agreement_all_order_3_pairs(self):
        # complete agreement over every pair of loopless digraphs on 3 vertices
        from linkirr import EnumSpec, enumerate_digraphs
        universe = list(enumerate_digraphs(EnumSpec(3, "general")))
        assert len(universe) == 64
        for a in universe:
            for b in universe:
                assert are_isomorphic(a, b) == brute_force_isomorphic(a, b)

    def test_oracle_agreement_all_order_4_tournament_pairs(self):
        from linkirr import EnumSpec, enumerate_digraphs
        universe = list(enumerate_digraphs(EnumSpec(4, "tournaments")))
        assert len(universe) == 64
        for a in universe:
            for b in universe:
                assert are_isomorphic(a, b) == brute_force_isomorphic(a, b)

    def test_undirected_iso_against_digraph_oracle(self):
        # an undirected graph is a symmetric digraph; decisions must agree
        rng = np.random.default_rng(73)
        for _ in range(300):
            n = int(rng.integers(1, 6))
            g = random_digraph(rng, n).underlying_graph()
            h = random_digraph(rng, n).underlying_graph()
            as_digraph = lambda x: Digraph.from_arcs(  # noqa: E731
                x.n, [(u, v) for u, v in x.edges] + [(v, u) for u, v in x.edges])
            assert (are_isomorphic_undirected(g, h)
                    == brute_force_isomorphic(as_digraph(g), as_digraph(h)))
