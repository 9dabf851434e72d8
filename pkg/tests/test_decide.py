import pytest

from src.decide.chains import maximal_chain
from src.decide.expansion import EMPTY, Expansion
from src.decide.pipeline import edge_bound_ok, is_cyclically_orientable
from src.decide.procedures import (LinearProcedure, NaiveProcedure, ProcedureManager,
                                   check_component_linear, check_component_naive,
                                   decompose_component_naive)
from src.decide.verdict import (BaseCycle, BaseEdge, DecompositionLog, Ear, EdgeBoundExceeded,
                                LoopStats, NoDegreeTwoVertex, Verdict)
from src.graph.core import CycleSeq, Graph, VertexPath
from src.graph.errors import NotTwoConnected
from src.oracle.generators import gen_co_graph

from .helpers import (BOWTIE, CHORDED_SQUARE, K4_MINUS_EDGE, PATH3, SINGLE_EDGE, TRIANGLE,
                      complete, cycle, graph, k23)


@pytest.mark.parametrize("n, e, expected", [
    (3, 3, True),
    (4, 6, False),
    (2, 1, True),
    (2, 2, False),
    (1, 0, True),
    (1, 1, False),
    (0, 0, True),
    (5, 7, True),
    (5, 8, False),
])
def test_edge_bound(n, e, expected):
    assert edge_bound_ok(n, e) is expected


class TestExpansion:
    def test_join_and_reverse(self):
        inner = Expansion.join(2, 3)
        e = Expansion.join(1, inner, EMPTY, 4)
        assert list(e) == [1, 2, 3, 4]
        assert list(e.reversed()) == [4, 3, 2, 1]
        assert len(e) == 4

    def test_nested_reversal(self):
        e = Expansion.join(1, Expansion.join(2, 3).reversed(), 4)
        assert list(e) == [1, 3, 2, 4]
        assert list(e.reversed()) == [4, 2, 3, 1]
        assert list(e.reversed().reversed()) == [1, 3, 2, 4]

    def test_empty(self):
        assert Expansion.join() is EMPTY
        assert Expansion.join(EMPTY, EMPTY) is EMPTY
        assert list(EMPTY.reversed()) == []


class TestMaximalChain:
    def test_open_chain(self):
        g = cycle(5)
        g = Graph.from_edges(5, list(g.sorted_edges) + [(0, 2)])
        # degree-2 chain through 3: 2 -> 3 -> 4 -> 0
        path, closed = maximal_chain(3, g.adjacency)
        assert not closed
        assert path == [2, 3, 4, 0]

    def test_closed_chain(self):
        path, closed = maximal_chain(2, TRIANGLE.adjacency)
        assert closed
        assert sorted(path) == [0, 1, 2]
        assert path[0] == 2

    def test_chain_closing_at_high_degree_vertex(self):
        # triangle hanging off vertex 0 of degree 3
        g = graph([(0, 1), (1, 2), (0, 2), (0, 3)])
        with pytest.raises(NotTwoConnected):
            maximal_chain(1, g.adjacency)


class TestLinear:
    def test_triangle_is_its_own_base(self):
        v = check_component_linear(TRIANGLE)
        assert v.answer
        assert v.log.ears == ()
        assert v.log.base == BaseCycle(CycleSeq((0, 1, 2)))

    def test_chorded_square_log(self):
        v = check_component_linear(CHORDED_SQUARE)
        assert v.answer
        assert v.log.ears == (Ear(VertexPath((0, 1, 2)), (0, 2)),)
        assert v.log.base == BaseCycle(CycleSeq((0, 2, 3)))
        assert v.stats.iterations == 2
        assert v.stats.type_b == 1 and v.stats.type_a == 0

    def test_k23_contracts_then_runs_dry(self):
        v = check_component_linear(k23(), component_id=4, record_trace=True)
        assert not v.answer
        assert v.reason == NoDegreeTwoVertex(4)
        assert v.stats.type_a == 3
        assert v.stats.synthetic_vertices == 3
        assert v.stats.trace == ((5, 2), (5, 1), (5, 0))

    def test_k4_has_no_degree_two_vertex(self):
        v = check_component_linear(complete(4))
        assert v.reason == NoDegreeTwoVertex(0)
        assert v.stats.iterations == 0

    def test_two_triangles_on_an_edge(self):
        assert check_component_linear(K4_MINUS_EDGE).answer

    def test_single_edge(self):
        v = check_component_linear(SINGLE_EDGE)
        assert v.log.base == BaseEdge((0, 1))

    def test_rejects_pendant_vertex(self):
        with pytest.raises(NotTwoConnected):
            check_component_linear(graph([(0, 1), (1, 2), (0, 2), (2, 3)]))

    @pytest.mark.parametrize("seed", range(40))
    def test_contracted_chains_expand_to_original_vertices(self, seed):
        g, _ = gen_co_graph(seed, 60, 7)
        v = check_component_linear(g)
        assert v.answer
        assert v.log.reconstructs(g.sorted_edges)
        for ear in v.log.ears:
            assert ear.path.is_path_in(g)
            assert g.has_edge(*ear.closing_edge)
        assert v.log.base.cycle.is_cycle_in(g)


class TestNaive:
    def test_five_cycle(self):
        assert check_component_naive(cycle(5))

    def test_two_triangles_on_an_edge(self):
        v = decompose_component_naive(K4_MINUS_EDGE)
        assert v.answer
        assert len(v.log.ears) == 1
        assert v.log.reconstructs(K4_MINUS_EDGE.sorted_edges)

    def test_k4(self):
        assert not check_component_naive(complete(4))

    def test_k23(self):
        v = decompose_component_naive(k23())
        assert v.reason == NoDegreeTwoVertex(0)
        # every chain got marked, none removed
        assert v.stats.iterations == 3

    @pytest.mark.parametrize("seed", range(20))
    def test_log_reconstructs_generated_graphs(self, seed):
        g, _ = gen_co_graph(seed, 40, 6)
        v = decompose_component_naive(g)
        assert v.answer
        assert v.log.reconstructs(g.sorted_edges)


class TestPipeline:
    def test_path_is_two_bridges(self):
        v = is_cyclically_orientable(PATH3)
        assert v.answer
        assert len(v.components) == 2
        assert all(c.log.base is not None and isinstance(c.log.base, BaseEdge)
                   for c in v.components)

    def test_k4_fails_the_global_edge_bound(self):
        v = is_cyclically_orientable(complete(4))
        assert not v.answer
        assert v.reason == EdgeBoundExceeded(None, 4, 6)
        assert v.decomposition is None
        assert v.loop_iterations == 0

    def test_k23(self):
        v = is_cyclically_orientable(k23())
        assert not v.answer
        assert v.reason == NoDegreeTwoVertex(0)

    def test_component_edge_bound(self):
        # K4 on 0..3 plus a long tail keeps the global count within 2n - 3
        edges = list(complete(4).sorted_edges) + [(i, i + 1) for i in range(3, 9)]
        g = graph(edges)
        assert edge_bound_ok(g.vertex_count, g.edge_count)
        v = is_cyclically_orientable(g)
        assert not v.answer
        assert isinstance(v.reason, EdgeBoundExceeded)
        assert (v.reason.n, v.reason.e) == (4, 6)
        assert v.loop_iterations == 0

    def test_every_component_is_checked(self):
        # K2,3 on 0..4 followed by a triangle through cut vertex 4
        g = graph(list(k23().sorted_edges) + [(4, 5), (5, 6), (4, 6)])
        v = is_cyclically_orientable(g)
        assert not v.answer
        assert [c.answer for c in v.components].count(True) == 1
        assert v.reason == next(c.reason for c in v.components if not c.answer)

    def test_logs_use_original_ids(self):
        v = is_cyclically_orientable(BOWTIE)
        assert v.answer
        assert {log.base.cycle.vertices for log in v.logs} == {(0, 1, 2), (2, 3, 4)}
        assert sorted(log.component_id for log in v.logs) == [0, 1]

    @pytest.mark.parametrize("procedure", ["linear", "naive"])
    def test_whole_graph_block_matches_relabelled_block(self, procedure):
        direct = is_cyclically_orientable(CHORDED_SQUARE, procedure).logs
        # vertex 0 isolated, square on 1..4: the block goes through local ids
        shifted = graph((a + 1, b + 1) for a, b in CHORDED_SQUARE.sorted_edges)
        assert shifted.vertex_count == 5
        assert is_cyclically_orientable(shifted, procedure).logs == [
            log.relabel((1, 2, 3, 4)) for log in direct]
        checker = {"linear": LinearProcedure(), "naive": NaiveProcedure()}[procedure]
        assert direct == [checker.check(CHORDED_SQUARE).log]

    def test_edgeless_graph(self):
        v = is_cyclically_orientable(Graph.empty(3))
        assert v.answer
        assert v.components == ()

    @pytest.mark.parametrize("procedure", ["linear", "naive"])
    def test_procedures_agree_on_named_graphs(self, procedure):
        answers = [is_cyclically_orientable(g, procedure).answer
                   for g in (TRIANGLE, CHORDED_SQUARE, K4_MINUS_EDGE, k23(), cycle(7), BOWTIE)]
        assert answers == [True, True, True, False, True, True]

    def test_unknown_procedure(self):
        with pytest.raises(KeyError, match="available: linear, naive"):
            is_cyclically_orientable(TRIANGLE, "quantum")


class TestVerdict:
    def test_positive_needs_log(self):
        with pytest.raises(ValueError):
            Verdict(True)

    def test_negative_needs_reason(self):
        with pytest.raises(ValueError):
            Verdict(False, log=DecompositionLog(0, (), None))

    def test_stats_add(self):
        total = LoopStats(2, 1, 1, 1) + LoopStats(3, 0, 3, 0)
        assert total == LoopStats(5, 1, 4, 1)

    def test_reason_dicts(self):
        assert EdgeBoundExceeded(None, 4, 6).to_dict() == {
            "kind": "edge_bound_exceeded", "component_id": None, "n": 4, "e": 6}
        assert "component 2" in str(NoDegreeTwoVertex(2))

    def test_log_relabel(self):
        log = check_component_linear(CHORDED_SQUARE).log.relabel((10, 11, 12, 13), 5)
        assert log.component_id == 5
        assert log.ears[0].path.vertices == (10, 11, 12)
        assert log.base.cycle.vertices == (10, 12, 13)


class TestProcedureManager:
    def test_discovers_both_procedures(self):
        manager = ProcedureManager()
        assert manager.names() == ["linear", "naive"]
        assert isinstance(manager.get("linear"), LinearProcedure)
        assert isinstance(manager.get("naive"), NaiveProcedure)

    def test_procedure_info(self):
        info = {i["name"]: i["complexity"] for i in ProcedureManager().get_procedure_info()}
        assert info == {"linear": "O(n)", "naive": "O(n^2)"}
