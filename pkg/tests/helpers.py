"""Named graphs, graph corpora and independent reference oracles for the tests."""

from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx
from hypothesis import strategies as st

from src.graph.core import Edge, Graph, edge_key
from src.oracle.generators import make_rng


def graph(edges: Iterable[Sequence[int]], n: Optional[int] = None) -> Graph:
    edges = [tuple(e) for e in edges]
    if n is None:
        n = 1 + max((x for e in edges for x in e), default=-1)
    return Graph.from_edges(n, edges)


def cycle(k: int) -> Graph:
    return graph((i, (i + 1) % k) for i in range(k))


def complete(n: int) -> Graph:
    return graph(combinations(range(n), 2), n)


def k23() -> Graph:
    """Parts {0, 1} and {2, 3, 4}"""
    return graph((a, b) for a in (0, 1) for b in (2, 3, 4))


TRIANGLE = cycle(3)
PATH3 = graph([(0, 1), (1, 2)])
SINGLE_EDGE = graph([(0, 1)])
CHORDED_SQUARE = graph([(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
K4_MINUS_EDGE = graph([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
BOWTIE = graph([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.sorted_edges)
    return h


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices"""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_graphs(seed: int, count: int, sizes: Sequence[int]) -> List[Graph]:
    """Seeded graphs with n drawn from sizes and e <= 2n - 1"""
    rng = make_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.choice(sizes))
        pairs = list(combinations(range(n), 2))
        e = int(rng.integers(0, min(2 * n - 1, len(pairs)) + 1))
        picked = rng.choice(len(pairs), size=e, replace=False)
        out.append(Graph.from_edges(n, [pairs[int(i)] for i in picked]))
    return out


def simple_cycles(g: Graph) -> List[Tuple[int, ...]]:
    """Every simple cycle once, as a vertex tuple starting at its lowest vertex"""
    found = []

    def extend(path: List[int], on_path: Set[int]) -> None:
        start, last = path[0], path[-1]
        for x in g.adjacency[last]:
            if x == start and len(path) >= 3 and path[1] < path[-1]:
                found.append(tuple(path))
            elif x > start and x not in on_path:
                path.append(x)
                on_path.add(x)
                extend(path, on_path)
                on_path.discard(x)
                path.pop()

    for s in g.vertices():
        extend([s], {s})
    return found


def two_connected_classes(g: Graph) -> Set[FrozenSet[Edge]]:
    """Edge classes of the relation "equal, or on a common cycle" (union-find)"""
    parent: Dict[Edge, Edge] = {e: e for e in g.edges}

    def find(e: Edge) -> Edge:
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for c in simple_cycles(g):
        edges = [edge_key(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]
        root = find(edges[0])
        for e in edges[1:]:
            parent[find(e)] = root

    classes: Dict[Edge, Set[Edge]] = {}
    for e in g.edges:
        classes.setdefault(find(e), set()).add(e)
    return {frozenset(c) for c in classes.values()}


@st.composite
def graphs(draw, min_n: int = 2, max_n: int = 30, max_edges_per_vertex: int = 3) -> Graph:
    """Hypothesis strategy: arbitrary simple graphs"""
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.sets(st.sampled_from(pairs), max_size=max_edges_per_vertex * n))
    return Graph.from_edges(n, edges)
