import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ..decide.verdict import BaseCycle, DecompositionLog, Ear
from ..graph.core import Arc, CycleSeq, Edge, Graph, VertexPath, edge_key
from ..graph.errors import BadParams, CompleteGraph

logger = logging.getLogger(__name__)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True)
class GluingSpec:
    """Two graphs, each with an oriented edge; tails and heads get identified"""
    first: Graph
    first_edge: Arc
    second: Graph
    second_edge: Arc

    def __post_init__(self):
        if not self.first.has_edge(*self.first_edge):
            raise BadParams(f"{self.first_edge} is not an edge of the first graph")
        if not self.second.has_edge(*self.second_edge):
            raise BadParams(f"{self.second_edge} is not an edge of the second graph")


@dataclass(frozen=True)
class GluingResult:
    graph: Graph
    first_map: Tuple[int, ...]
    second_map: Tuple[int, ...]


def glue_along_edge(spec: GluingSpec) -> GluingResult:
    """Disjoint union with the two oriented edges identified (tail to tail, head to head).

    The first graph keeps its ids; the second graph's other vertices follow
    in ascending order. The result has n1 + n2 - 2 vertices and e1 + e2 - 1 edges.
    """
    n1 = spec.first.vertex_count
    tail1, head1 = spec.first_edge
    tail2, head2 = spec.second_edge
    second_map: List[int] = []
    fresh = n1
    for x in spec.second.vertices():
        if x == tail2:
            second_map.append(tail1)
        elif x == head2:
            second_map.append(head1)
        else:
            second_map.append(fresh)
            fresh += 1

    shared = edge_key(tail1, head1)
    edges = list(spec.first.sorted_edges)
    for a, b in spec.second.sorted_edges:
        mapped = edge_key(second_map[a], second_map[b])
        if mapped != shared:
            edges.append(mapped)
    graph = Graph.from_edges(fresh, edges)
    return GluingResult(graph, tuple(spec.first.vertices()), tuple(second_map))


def cycle_graph(k: int) -> Graph:
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def gen_co_graph(seed: int, target_n: int, max_cycle_len: int
                 ) -> Tuple[Graph, DecompositionLog]:
    """Glue random cycles onto random edges until there are target_n vertices.

    The output is two-connected and cyclically orientable; the returned log
    lists the glued cycles as ears, last glued first, over the starting cycle.
    """
    if target_n < 3 or max_cycle_len < 3:
        raise BadParams(f"need target_n >= 3 and max_cycle_len >= 3, "
                        f"got {target_n} and {max_cycle_len}")
    rng = make_rng(seed)
    k = int(rng.integers(3, max_cycle_len + 1))
    edges: List[Edge] = [edge_key(i, (i + 1) % k) for i in range(k)]
    ears: List[Ear] = []
    n = k
    while n < target_n:
        a, b = edges[int(rng.integers(len(edges)))]
        if rng.integers(2):
            a, b = b, a
        z = int(rng.integers(3, max_cycle_len + 1))
        path = [b] + list(range(n, n + z - 2)) + [a]
        edges.extend(edge_key(x, y) for x, y in zip(path, path[1:]))
        ears.append(Ear(VertexPath(tuple(path)), edge_key(a, b)))
        n += z - 2

    logger.debug("seed %d: %d vertices, %d edges, %d gluings", seed, n, len(edges), len(ears))
    log = DecompositionLog(0, tuple(reversed(ears)), BaseCycle(CycleSeq.canonical(range(k))))
    return Graph.from_edges(n, edges), log


def gen_perturbed(seed: int, base: Graph) -> Graph:
    """base plus one uniformly chosen non-edge"""
    n = base.vertex_count
    # non-edges {u, x} with x > u, per row u
    rows = [(n - 1 - u) - sum(1 for x in base.adjacency[u] if x > u) for u in range(n)]
    total = sum(rows)
    if total == 0:
        raise CompleteGraph(f"graph on {n} vertices has no non-adjacent pair")

    pick = int(make_rng(seed).integers(total))
    u = 0
    while pick >= rows[u]:
        pick -= rows[u]
        u += 1
    neighbors = set(base.adjacency[u])
    for x in range(u + 1, n):
        if x in neighbors:
            continue
        if pick == 0:
            break
        pick -= 1
    return Graph.from_edges(n, list(base.sorted_edges) + [(u, x)])
