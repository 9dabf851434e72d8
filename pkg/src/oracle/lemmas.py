"""Executable forms of the structural facts behind the decision procedures."""

from collections import deque
from typing import Dict, Iterable, List, Optional, Set, Union

from ..graph.core import CycleSeq, Edge, Graph, VertexPath, connected_vertices
from ..graph.errors import PreconditionViolated
from .brute import is_chordless


def find_separating_edge(c: Graph) -> Optional[Edge]:
    """An edge {v, w} whose endpoints' removal disconnects c, or None.

    Every two-connected cyclically orientable graph that is neither a cycle
    nor a single edge has one.
    """
    if c.edge_count <= 1 or c.is_cycle():
        raise PreconditionViolated("graph is a single edge or a cycle")
    for v, w in c.sorted_edges:
        rest = [x for x in c.vertices() if x != v and x != w]
        if len(rest) < 2:
            continue
        reached = connected_vertices(c, rest[0], removed=frozenset((v, w)))
        if len(reached) < len(rest):
            return v, w
    return None


def _bfs_parents(g: Graph, start: int, allowed: Set[int]) -> Dict[int, int]:
    parents = {start: start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u in allowed and u not in parents:
                parents[u] = v
                queue.append(u)
    return parents


def _trace(parents: Dict[int, int], end: int) -> List[int]:
    out = [end]
    while parents[out[-1]] != out[-1]:
        out.append(parents[out[-1]])
    out.reverse()
    return out


def shorten_to_chain(g: Graph, p: VertexPath) -> VertexPath:
    """Shortest path between p's endpoints using only p's vertices; always a chain"""
    start, end = p.endpoints
    parents = _bfs_parents(g, start, set(p.vertices))
    if end not in parents:
        raise PreconditionViolated(f"{list(p.vertices)} is not a path of the graph")
    return VertexPath(tuple(_trace(parents, end)))


def shorten_to_chordless(g: Graph, v: int, z: Union[CycleSeq, Iterable[int]]) -> CycleSeq:
    """Chordless cycle through v on a subset of the vertices of cycle z.

    A shortest cycle through v inside z's vertex set has no chord: a chord
    would close a shorter cycle through v.
    """
    vertices = set(z.vertices if isinstance(z, CycleSeq) else z)
    if v not in vertices:
        raise PreconditionViolated(f"vertex {v} is not on the cycle")
    allowed = vertices - {v}
    ends = [u for u in g.adjacency[v] if u in allowed]
    best: Optional[List[int]] = None
    for i, a in enumerate(ends):
        parents = _bfs_parents(g, a, allowed)
        for b in ends[i + 1:]:
            if b in parents:
                candidate = _trace(parents, b)
                if best is None or len(candidate) + 1 < len(best):
                    best = candidate + [v]
    if best is None:
        raise PreconditionViolated(f"no cycle through {v} on the given vertices")
    cycle = CycleSeq.canonical(best)
    assert is_chordless(g, cycle), f"shortest cycle {cycle} through {v} has a chord"
    return cycle
