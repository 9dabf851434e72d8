import logging
from typing import List

from ...graph.core import CycleSeq, Graph, VertexPath, edge_key, induced_subgraph
from ..chains import maximal_chain
from ..verdict import (BaseCycle, BaseEdge, DecompositionLog, Ear, LoopStats, NoDegreeTwoVertex,
                       Verdict)
from .base import ComponentProcedure, trivial_verdict, validate_component

logger = logging.getLogger(__name__)


def decompose_component_naive(c: Graph, component_id: int = 0) -> Verdict:
    trivial = trivial_verdict(c, component_id)
    if trivial is not None:
        return trivial
    validate_component(c)

    current = c
    labels = tuple(c.vertices())  # current id -> id in c
    ears: List[Ear] = []
    iterations = 0
    while True:
        if current.edge_count == 1:
            a, b = current.sorted_edges[0]
            base = BaseEdge(edge_key(labels[a], labels[b]))
            return Verdict(True, log=DecompositionLog(component_id, tuple(ears), base),
                           stats=LoopStats(iterations=iterations))

        marked = set()
        cursor = 0
        while True:
            while cursor < current.vertex_count and (
                    current.degree(cursor) != 2 or cursor in marked):
                cursor += 1
            if cursor == current.vertex_count:
                logger.debug("component %d: no unmarked degree-2 vertex after %d ears",
                             component_id, len(ears))
                return Verdict(False, reason=NoDegreeTwoVertex(component_id),
                               stats=LoopStats(iterations=iterations))

            iterations += 1
            path, closed = maximal_chain(cursor, current.adjacency)
            if closed:
                base_cycle = BaseCycle(CycleSeq.canonical([labels[v] for v in path]))
                return Verdict(True, log=DecompositionLog(component_id, tuple(ears), base_cycle),
                               stats=LoopStats(iterations=iterations))

            interior = path[1:-1]
            marked.update(interior)
            u1, ul = path[0], path[-1]
            if current.has_edge(u1, ul):
                ears.append(Ear(VertexPath(tuple(labels[v] for v in path)),
                                edge_key(labels[u1], labels[ul])))
                dropped = set(interior)
                current, mapping = induced_subgraph(
                    current, (v for v in current.vertices() if v not in dropped))
                labels = tuple(labels[v] for v in mapping)
                break


def check_component_naive(c: Graph) -> bool:
    """O(n^2) yes/no answer for a two-connected component (or single edge)"""
    return decompose_component_naive(c).answer


class NaiveProcedure(ComponentProcedure):
    @property
    def name(self) -> str:
        return "naive"

    @property
    def description(self) -> str:
        return "Rescan-and-recurse ear removal with MARKED flags"

    @property
    def complexity(self) -> str:
        return "O(n^2)"

    def check(self, component: Graph, component_id: int = 0) -> Verdict:
        return decompose_component_naive(component, component_id)
