from typing import Dict, Optional

from ..decide.pipeline import is_cyclically_orientable
from ..decide.verdict import BaseCycle, BaseEdge, DecompositionLog, GraphVerdict
from ..graph.core import Arc, Edge, Graph, Orientation, edge_key


def orient_from_log(log: DecompositionLog) -> Dict[Edge, Arc]:
    """Cyclic orientation of one component, replaying its log from the base outward.

    The base cycle runs in its stored order (a base edge low -> high). Ears are
    glued back in reverse removal order; each ear path is directed so that the
    path and its already-directed closing edge form a directed cycle.
    """
    direction: Dict[Edge, Arc] = {}
    if isinstance(log.base, BaseEdge):
        direction[edge_key(*log.base.edge)] = log.base.edge
    elif isinstance(log.base, BaseCycle):
        for a, b in log.base.cycle.arcs():
            direction[edge_key(a, b)] = (a, b)

    for ear in reversed(log.ears):
        first, last = ear.path.endpoints
        closing = direction.get(edge_key(first, last))
        if closing is None:
            raise ValueError(f"closing edge {ear.closing_edge} of an ear is not placed yet")
        arcs = ear.path.arcs()
        if closing == (first, last):
            arcs = [(b, a) for a, b in arcs]
        for a, b in arcs:
            direction[edge_key(a, b)] = (a, b)
    return direction


def find_cyclic_orientation(g: Graph, verdict: Optional[GraphVerdict] = None
                            ) -> Optional[Orientation]:
    """A cyclic orientation of g, or None when g is not cyclically orientable"""
    if verdict is None:
        verdict = is_cyclically_orientable(g)
    if not verdict.answer:
        return None
    direction: Dict[Edge, Arc] = {}
    for log in verdict.logs:
        direction.update(orient_from_log(log))
    return Orientation(direction)
