import numpy as np
import pytest

from linkirr import Digraph, LabeledGraph, UndirectedGraph, two_degree_coincidence
from linkirr.arcio import (
    FormatError,
    dumps_digraph,
    dumps_labeled,
    dumps_undirected,
    loads_digraph,
    loads_labeled,
    loads_undirected,
)
from linkirr.constructions import circulant, d6, regular_tournament_9, two_out_regular_6

from conftest import random_digraph


class TestDigraphConstruction:
    def test_single_arc(self):
        d = Digraph.from_arcs(2, [(0, 1)])
        assert d.n == 2 and d.arcs == ((0, 1),)

    def test_d6_is_tournament_on_6(self):
        d = d6()
        assert d.n == 6 and d.size == 15 and d.is_tournament()

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="self-loop"):
            Digraph.from_arcs(2, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="outside"):
            Digraph.from_arcs(2, [(0, 2)])

    def test_duplicate_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            Digraph.from_arcs(3, [(0, 1), (0, 1)])

    def test_immutable(self):
        d = Digraph.from_arcs(2, [(0, 1)])
        with pytest.raises(AttributeError):
            d.n = 3

    def test_matrix_round_trip(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            d = random_digraph(rng, int(rng.integers(0, 8)))
            assert Digraph.from_matrix(d.to_matrix()) == d


class TestUnderlyingGraph:
    def test_single_arc(self):
        assert Digraph.from_arcs(2, [(0, 1)]).underlying_graph().edges == ((0, 1),)

    def test_d6_underlies_k6(self):
        assert d6().underlying_graph() == UndirectedGraph.complete(6)

    def test_digon_collapses(self):
        d = Digraph.from_arcs(2, [(0, 1), (1, 0)])
        assert d.underlying_graph().edges == ((0, 1),)

    def test_round_trip_orientations(self):
        # underlying(any orientation of G) == G
        from linkirr.enumeration import orientation_at
        rng = np.random.default_rng(11)
        for _ in range(50):
            g = random_digraph(rng, int(rng.integers(2, 8)), "general").underlying_graph()
            code = int(rng.integers(0, 1 << g.size))
            assert orientation_at(g, code).underlying_graph() == g


class TestInducedSubdigraph:
    def test_empty_set(self):
        assert d6().induced_subdigraph([]).n == 0

    def test_full_set_identity(self):
        d = d6()
        assert d.induced_subdigraph(range(6)) == d

    def test_five_vertex_neighborhood_is_cycle(self):
        from linkirr.constructions import five_vertex_pair
        left, _ = five_vertex_pair()
        sub = left.induced_subdigraph([2, 3, 4])
        assert sub == Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            d6().induced_subdigraph([0, 6])

    def test_arcs_match_brute_force(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            d = random_digraph(rng, 7)
            keep = sorted(set(rng.integers(0, 7, size=4).tolist()))
            pos = {v: i for i, v in enumerate(keep)}
            expect = sorted((pos[u], pos[v]) for u, v in d.arcs
                            if u in pos and v in pos)
            assert list(d.induced_subdigraph(keep).arcs) == expect


class TestDegrees:
    def test_directed_triangle(self):
        d = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
        assert d.degrees() == [(1, 1, 2)] * 3

    def test_circulant_5_2(self):
        assert circulant(5, 2).degrees() == [(2, 2, 4)] * 5

    def test_regular_tournament_9(self):
        assert regular_tournament_9().degrees() == [(4, 4, 8)] * 9

    def test_digon_counts_underlying_degree(self):
        d = Digraph.from_arcs(2, [(0, 1), (1, 0)])
        assert d.degrees() == [(1, 1, 1), (1, 1, 1)]

    def test_degree_sums_match_arc_count(self):
        rng = np.random.default_rng(17)
        for _ in range(60):
            d = random_digraph(rng, int(rng.integers(1, 9)))
            degs = d.degrees()
            assert sum(x[0] for x in degs) == sum(x[1] for x in degs) == d.size


class TestPredicates:
    def test_c5_has_no_triangle(self):
        c5 = UndirectedGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        assert not c5.contains_triangle()

    def test_k6_has_triangle(self):
        assert UndirectedGraph.complete(6).contains_triangle()

    def test_five_vertex_underlying_has_triangle(self):
        from linkirr.constructions import five_vertex_pair
        left, _ = five_vertex_pair()
        assert left.underlying_graph().contains_triangle()

    def test_d6_is_tournament(self):
        assert d6().is_tournament()

    def test_circulant_6_2_is_eulerian(self):
        assert circulant(6, 2).is_eulerian()

    def test_digon_is_not_oriented(self):
        d = Digraph.from_arcs(2, [(0, 1), (1, 0)])
        assert not d.is_oriented() and not d.is_tournament()

    def test_two_out_regular_is_oriented(self):
        assert two_out_regular_6().is_oriented()

    def test_eulerian_needs_strong_connectivity(self):
        # two disjoint directed triangles balance degrees but are disconnected
        d = Digraph.from_arcs(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert not d.is_eulerian()


class TestTwoDegreeCoincidence:
    def test_k2(self):
        assert two_degree_coincidence(UndirectedGraph.complete(2)) == (0, 1)

    def test_k6_any_pair(self):
        u, v = two_degree_coincidence(UndirectedGraph.complete(6))
        assert u != v

    def test_path_endpoints(self):
        p3 = UndirectedGraph.from_edges(3, [(0, 1), (1, 2)])
        assert two_degree_coincidence(p3) == (0, 2)

    def test_too_small(self):
        with pytest.raises(ValueError):
            two_degree_coincidence(UndirectedGraph.from_edges(1, []))

    def test_always_exists(self):
        rng = np.random.default_rng(19)
        for _ in range(200):
            g = random_digraph(rng, int(rng.integers(2, 10))).underlying_graph()
            u, v = two_degree_coincidence(g)
            assert u < v and g.degree(u) == g.degree(v)


class TestArcListFormat:
    def test_digraph_round_trip(self):
        rng = np.random.default_rng(23)
        for _ in range(40):
            d = random_digraph(rng, int(rng.integers(0, 9)))
            assert loads_digraph(dumps_digraph(d)) == d

    def test_undirected_round_trip(self):
        g = UndirectedGraph.from_edges(4, [(0, 1), (2, 3)])
        assert loads_undirected(dumps_undirected(g)) == g

    def test_labeled_round_trip(self):
        from linkirr.constructions import counterexample_graph
        _, lg = counterexample_graph()
        assert loads_labeled(dumps_labeled(lg)) == lg

    def test_comments_ignored(self):
        text = "# hello\n2 1\n# mid\n0 1\n"
        assert loads_digraph(text) == Digraph.from_arcs(2, [(0, 1)])

    def test_parse_error_carries_line_number(self):
        with pytest.raises(FormatError) as err:
            loads_digraph("2 1\n0 x\n")
        assert err.value.line == 2

    def test_self_loop_reported(self):
        with pytest.raises(FormatError):
            loads_digraph("2 1\n0 0\n")

    def test_count_mismatch(self):
        with pytest.raises(FormatError):
            loads_digraph("3 2\n0 1\n")


class TestLabeledGraph:
    def test_missing_label_rejected(self):
        g = UndirectedGraph.from_edges(2, [(0, 1)])
        with pytest.raises(ValueError, match="unlabeled"):
            LabeledGraph(g, {})

    def test_nonpositive_label_rejected(self):
        g = UndirectedGraph.from_edges(2, [(0, 1)])
        with pytest.raises(ValueError, match=">= 1"):
            LabeledGraph(g, {(0, 1): 0})

    def test_label_on_non_edge_rejected(self):
        g = UndirectedGraph.from_edges(3, [(0, 1)])
        with pytest.raises(ValueError, match="non-edge"):
            LabeledGraph(g, {(0, 1): 1, (1, 2): 1})
