import logging
from typing import List, Optional

from ..graph.biconnect import biconnected_components
from ..graph.core import Graph
from .procedures.base import ComponentProcedure, trivial_verdict
from .procedures.manager import default_manager
from .verdict import EdgeBoundExceeded, GraphVerdict, Reason, Verdict

logger = logging.getLogger(__name__)


def edge_bound_ok(n: int, e: int) -> bool:
    """e <= 2n - 3, the edge bound every cyclically orientable graph satisfies"""
    if n <= 1:
        return e == 0
    return e <= 2 * n - 3


def is_cyclically_orientable(g: Graph, procedure: str = "linear") -> GraphVerdict:
    """Global edge bound, block decomposition, per-block bound, then the procedure per block"""
    n, e = g.vertex_count, g.edge_count
    if not edge_bound_ok(n, e):
        logger.debug("edge bound rejects graph: n=%d e=%d", n, e)
        return GraphVerdict(False, (), None, reason=EdgeBoundExceeded(None, n, e),
                            procedure=procedure)

    checker: ComponentProcedure = default_manager().get(procedure)
    decomposition = biconnected_components(g)
    verdicts: List[Verdict] = []
    reason: Optional[Reason] = None
    for component in decomposition:
        ni, ei = len(component.vertices), len(component.edges)
        if ni == n:
            # a block holding every vertex is the whole graph; ids need no translation
            local, mapping = g, None
        else:
            local, mapping = component.as_graph()
        if component.is_bridge:
            verdict = trivial_verdict(local, component.index)
        elif not edge_bound_ok(ni, ei):
            verdict = Verdict(False, reason=EdgeBoundExceeded(component.index, ni, ei))
        else:
            verdict = checker.check(local, component.index)
        if mapping is not None:
            verdict = verdict.relabel(mapping, component.index)
        if not verdict.answer and reason is None:
            reason = verdict.reason
        verdicts.append(verdict)

    logger.debug("%s: %d components, answer=%s", procedure, len(verdicts), reason is None)
    return GraphVerdict(reason is None, tuple(verdicts), decomposition, reason=reason,
                        procedure=procedure)
