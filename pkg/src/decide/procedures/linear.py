import logging
from typing import List, Tuple

from ...graph.core import CycleSeq, Graph, VertexPath, edge_key
from ..chains import maximal_chain
from ..expansion import Expansion, Piece
from ..verdict import (BaseCycle, DecompositionLog, Ear, LoopStats, NoDegreeTwoVertex,
                       Verdict)
from ..workgraph import WorkGraph
from .base import ComponentProcedure, trivial_verdict, validate_component

logger = logging.getLogger(__name__)


def check_component_linear(c: Graph, component_id: int = 0,
                           record_trace: bool = False) -> Verdict:
    """Decide one two-connected component (e <= 2n - 3 assumed) in O(n)"""
    trivial = trivial_verdict(c, component_id)
    if trivial is not None:
        return trivial
    validate_component(c)

    work = WorkGraph(c)
    adjacency = work.adjacency
    ears: List[Ear] = []
    trace: List[Tuple[int, int]] = []
    iterations = type_a = type_b = synthetic = 0

    def stats() -> LoopStats:
        return LoopStats(iterations, type_a, type_b, synthetic, tuple(trace))

    while work.worklist:
        iterations += 1
        v = work.first()
        path, closed = maximal_chain(v, adjacency)
        if closed:
            base = BaseCycle(CycleSeq.canonical(work.expand_cycle(path)))
            logger.debug("component %d: cycle reached after %d iterations (%d ears)",
                         component_id, iterations, len(ears))
            return Verdict(True, log=DecompositionLog(component_id, tuple(ears), base),
                           stats=stats())

        u1, ul = path[0], path[-1]
        interior = path[1:-1]
        if ul in adjacency[u1]:
            type_b += 1
            ears.append(Ear(VertexPath(tuple(work.expand_path(path))),
                            edge_key(work.origin(u1), work.origin(ul))))
            work.delete_vertices(interior)
            for end in (u1, ul):
                if len(adjacency[end]) == 2:
                    work.enqueue(end)
        else:
            if len(path) == 3:
                type_a += 1
            else:
                type_b += 1
            # w takes the place of u2: {u1, w} keeps the first edge's expansion
            # and {w, ul} carries everything after u2. w never enters L.
            second = path[1]
            head = adjacency[u1][second]
            tail: List[Piece] = [adjacency[second][path[2]]]
            for x, y in zip(path[2:-1], path[3:]):
                tail.append(work.origin(x))
                tail.append(adjacency[x][y])
            origin = work.origin(second)
            work.delete_vertices(interior)
            work.add_synthetic(u1, head, ul, Expansion.join(*tail), origin)
            synthetic += 1
        if record_trace:
            trace.append((work.live_count, len(work.worklist)))

    logger.debug("component %d: worklist empty after %d iterations", component_id, iterations)
    return Verdict(False, reason=NoDegreeTwoVertex(component_id), stats=stats())


class LinearProcedure(ComponentProcedure):
    @property
    def name(self) -> str:
        return "linear"

    @property
    def description(self) -> str:
        return "Worklist ear removal with chain contraction"

    @property
    def complexity(self) -> str:
        return "O(n)"

    def check(self, component: Graph, component_id: int = 0) -> Verdict:
        return check_component_linear(component, component_id)
