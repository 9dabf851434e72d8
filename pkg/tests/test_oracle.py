import networkx as nx
import pytest
from hypothesis import given, strategies as st

from src.decide.procedures import check_component_linear
from src.graph.core import CycleSeq, Graph, VertexPath
from src.graph.errors import BadParams, CompleteGraph, PreconditionViolated, SizeLimit
from src.oracle.brute import brute_force_co, enumerate_chordless_cycles, is_chain, is_chordless
from src.oracle.corpus import format_edge_list, read_expected
from src.oracle.generators import (GluingSpec, cycle_graph, gen_co_graph, gen_perturbed,
                                   glue_along_edge)
from src.oracle.lemmas import find_separating_edge, shorten_to_chain, shorten_to_chordless
from src.orient.verify import verify_orientation

from .helpers import (CHORDED_SQUARE, K4_MINUS_EDGE, SINGLE_EDGE, TRIANGLE, complete, cycle,
                      graph, graphs, k23, to_networkx)


def cycles_of(g):
    return [c.vertices for c in enumerate_chordless_cycles(g)]


class TestChordlessCycles:
    def test_four_cycle(self):
        assert cycles_of(cycle(4)) == [(0, 1, 2, 3)]

    def test_chord_splits_the_square(self):
        assert cycles_of(CHORDED_SQUARE) == [(0, 1, 2), (0, 2, 3)]

    def test_k23(self):
        assert cycles_of(k23()) == [(0, 2, 1, 3), (0, 2, 1, 4), (0, 3, 1, 4)]

    def test_k4(self):
        assert len(cycles_of(complete(4))) == 4

    def test_forest(self):
        assert cycles_of(graph([(0, 1), (1, 2), (1, 3)])) == []

    def test_size_cap(self):
        with pytest.raises(SizeLimit):
            enumerate_chordless_cycles(cycle(17))
        assert len(enumerate_chordless_cycles(cycle(17), cap=17)) == 1

    @given(graphs(max_n=9, max_edges_per_vertex=2))
    def test_matches_networkx(self, g):
        expected = {frozenset(c) for c in nx.chordless_cycles(to_networkx(g))}
        found = enumerate_chordless_cycles(g)
        assert {frozenset(c.vertices) for c in found} == expected
        assert all(is_chordless(g, c) for c in found)


class TestBruteForce:
    def test_triangle_first_orientation(self):
        ok, o = brute_force_co(TRIANGLE)
        assert ok
        assert o.to_edge_list() == [(0, 1), (2, 0), (1, 2)]

    def test_k4(self):
        assert brute_force_co(complete(4)) == (False, None)

    def test_k23(self):
        assert brute_force_co(k23()) == (False, None)

    def test_empty_graph(self):
        ok, o = brute_force_co(Graph.empty())
        assert ok and len(o) == 0

    def test_tree_takes_all_low_to_high(self):
        ok, o = brute_force_co(graph([(0, 1), (1, 2), (1, 3)]))
        assert o.to_edge_list() == [(0, 1), (1, 2), (1, 3)]

    def test_edge_cap(self):
        with pytest.raises(SizeLimit):
            brute_force_co(cycle(21))

    def test_chorded_square_witness_verifies(self):
        ok, o = brute_force_co(CHORDED_SQUARE)
        assert ok
        assert verify_orientation(CHORDED_SQUARE, o).ok


class TestChainsAndChords:
    def test_is_chain(self):
        assert is_chain(CHORDED_SQUARE, VertexPath((1, 2, 3)))
        assert not is_chain(CHORDED_SQUARE, VertexPath((1, 0, 3, 2)))
        assert not is_chain(CHORDED_SQUARE, VertexPath((1, 3)))

    def test_is_chordless(self):
        assert is_chordless(CHORDED_SQUARE, CycleSeq((0, 1, 2)))
        assert not is_chordless(CHORDED_SQUARE, CycleSeq((0, 1, 2, 3)))
        assert not is_chordless(TRIANGLE, CycleSeq((0, 1, 3)))


class TestLemmas:
    def test_separating_edge_of_two_triangles(self):
        assert find_separating_edge(K4_MINUS_EDGE) == (0, 1)

    @pytest.mark.parametrize("g", [complete(4), k23()], ids=["K4", "K2,3"])
    def test_no_separating_edge(self, g):
        assert find_separating_edge(g) is None

    @pytest.mark.parametrize("g", [cycle(5), SINGLE_EDGE])
    def test_separating_edge_precondition(self, g):
        with pytest.raises(PreconditionViolated):
            find_separating_edge(g)

    def test_chain_stays(self):
        p = VertexPath((0, 1, 2))
        assert shorten_to_chain(cycle(5), p) == p

    def test_edge_beats_detour(self):
        g = graph([(0, 1), (1, 2), (2, 3), (0, 3)])
        assert shorten_to_chain(g, VertexPath((0, 1, 2, 3))).vertices == (0, 3)

    def test_shortcut_through_chord(self):
        g = graph([(0, 1), (1, 2), (2, 3), (1, 3)])
        chain = shorten_to_chain(g, VertexPath((0, 1, 2, 3)))
        assert chain.vertices == (0, 1, 3)
        assert is_chain(g, chain)

    def test_chain_needs_a_path(self):
        with pytest.raises(PreconditionViolated):
            shorten_to_chain(graph([(0, 1), (2, 3)]), VertexPath((0, 1, 2, 3)))

    def test_triangle_is_chordless(self):
        assert shorten_to_chordless(TRIANGLE, 1, CycleSeq((0, 1, 2))).vertices == (0, 1, 2)

    def test_square_with_chord(self):
        g = graph([(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)])
        c = shorten_to_chordless(g, 1, CycleSeq((0, 1, 2, 3)))
        assert c.vertices in {(0, 1, 3), (1, 2, 3)}

    def test_chordless_cycle_comes_back_rotated(self):
        c = shorten_to_chordless(cycle(6), 4, [3, 4, 5, 0, 1, 2])
        assert c.vertices == (0, 1, 2, 3, 4, 5)

    def test_vertex_off_the_cycle(self):
        with pytest.raises(PreconditionViolated):
            shorten_to_chordless(CHORDED_SQUARE, 3, CycleSeq((0, 1, 2)))


class TestGenerators:
    def test_triangles_on_an_edge(self):
        result = glue_along_edge(GluingSpec(TRIANGLE, (0, 1), TRIANGLE, (0, 1)))
        assert result.graph == Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
        assert result.second_map == (0, 1, 3)

    @pytest.mark.parametrize("k, m", [(3, 5), (4, 4), (6, 3)])
    def test_cycles_on_an_edge(self, k, m):
        g = glue_along_edge(GluingSpec(cycle_graph(k), (0, 1), cycle_graph(m), (1, 2))).graph
        assert (g.vertex_count, g.edge_count) == (k + m - 2, k + m - 1)
        assert check_component_linear(g).answer

    def test_edge_onto_triangle(self):
        g = glue_along_edge(GluingSpec(SINGLE_EDGE, (0, 1), TRIANGLE, (1, 2))).graph
        assert g.is_cycle() and g.vertex_count == 3

    def test_gluing_needs_edges(self):
        with pytest.raises(BadParams):
            GluingSpec(TRIANGLE, (0, 1), cycle(4), (0, 2))

    def test_target_three_is_a_cycle(self):
        g, log = gen_co_graph(5, 3, 6)
        assert g.is_cycle()
        assert log.ears == ()

    def test_same_seed_same_graph(self):
        assert gen_co_graph(42, 200, 6) == gen_co_graph(42, 200, 6)
        assert gen_co_graph(42, 200, 6)[0] != gen_co_graph(43, 200, 6)[0]

    @pytest.mark.parametrize("target_n, max_cycle_len", [(2, 5), (10, 2)])
    def test_bad_params(self, target_n, max_cycle_len):
        with pytest.raises(BadParams):
            gen_co_graph(1, target_n, max_cycle_len)

    @given(st.integers(0, 2**32 - 1), st.integers(3, 80), st.integers(3, 8))
    def test_generated_graphs(self, seed, target_n, max_cycle_len):
        g, log = gen_co_graph(seed, target_n, max_cycle_len)
        assert g.vertex_count >= target_n
        assert g.edge_count - g.vertex_count + 1 == 1 + len(log.ears)
        assert log.reconstructs(g.sorted_edges)
        assert check_component_linear(g).answer

    def test_perturb_square(self):
        g = gen_perturbed(0, cycle(4))
        assert g.edge_count == 5
        assert brute_force_co(g)[0]

    def test_perturb_to_k4(self):
        g = gen_perturbed(7, K4_MINUS_EDGE)
        assert g == complete(4)
        assert not brute_force_co(g)[0]

    def test_perturb_adds_pendant_edge(self):
        g = gen_perturbed(3, Graph.from_edges(4, TRIANGLE.sorted_edges))
        assert g.degree(3) == 1

    def test_perturb_complete_graph(self):
        with pytest.raises(CompleteGraph):
            gen_perturbed(0, TRIANGLE)


class TestCorpus:
    def test_expected_sidecar(self):
        text = format_edge_list(TRIANGLE, expected=True)
        assert text == "# expected: yes\n0 1\n0 2\n1 2\n"
        assert read_expected(text) is True
        assert read_expected(format_edge_list(complete(4), expected=False)) is False

    def test_no_sidecar(self):
        assert read_expected(format_edge_list(TRIANGLE)) is None
