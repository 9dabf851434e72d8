from collections import OrderedDict
from typing import Dict, Iterable, List, Optional, Sequence

from ..graph.core import Graph
from .expansion import EMPTY, Expansion


class WorkGraph:
    """Mutable working copy of one component for the linear procedure.

    `adjacency[x][y]` is the expansion of working edge {x, y} read from x to y;
    deleted vertices have a None row. Vertices >= original_count are synthetic;
    each stands for the original vertex `origin(w)`. `worklist` is the list L:
    insertion ordered, O(1) removal by vertex, O(1) append and O(1) access to
    the front.
    """

    def __init__(self, g: Graph):
        self.original_count = g.vertex_count
        self.adjacency: List[Optional[Dict[int, Expansion]]] = [
            dict.fromkeys(neighbors, EMPTY) for neighbors in g.adjacency
        ]
        self._origin: List[int] = list(range(g.vertex_count))
        self.live_count = g.vertex_count
        self.worklist: "OrderedDict[int, None]" = OrderedDict(
            (v, None) for v, neighbors in enumerate(g.adjacency) if len(neighbors) == 2
        )

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> List[int]:
        return list(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def expansion(self, u: int, v: int) -> Expansion:
        return self.adjacency[u][v]

    def origin(self, v: int) -> int:
        return self._origin[v]

    def is_synthetic(self, v: int) -> bool:
        return v >= self.original_count

    def is_live(self, v: int) -> bool:
        return self.adjacency[v] is not None

    def first(self) -> int:
        return next(iter(self.worklist))

    def enqueue(self, v: int) -> None:
        self.worklist[v] = None

    def delete_vertices(self, vertices: Iterable[int]) -> None:
        """Remove vertices, their edges and their list entries in O(total degree)"""
        adjacency = self.adjacency
        for v in vertices:
            for u in adjacency[v]:
                row = adjacency[u]
                if row is not None:
                    del row[v]
            adjacency[v] = None
            self.worklist.pop(v, None)
            self.live_count -= 1

    def add_synthetic(self, a: int, a_to_w: Expansion, b: int, w_to_b: Expansion,
                      origin: int) -> int:
        """New vertex w adjacent to a and b; returns its id"""
        w = len(self.adjacency)
        self.adjacency.append({a: a_to_w.reversed(), b: w_to_b})
        self.adjacency[a][w] = a_to_w
        self.adjacency[b][w] = w_to_b.reversed()
        self._origin.append(origin)
        self.live_count += 1
        return w

    def expand_path(self, path: Sequence[int]) -> List[int]:
        """Original vertices along a working path, endpoints included"""
        adjacency, origin = self.adjacency, self._origin
        out: List[int] = []
        for x, y in zip(path, path[1:]):
            out.append(origin[x])
            inner = adjacency[x][y]
            if inner.size:
                out.extend(inner)
        out.append(origin[path[-1]])
        return out

    def expand_cycle(self, cycle: Sequence[int]) -> List[int]:
        """Original vertices around a working cycle, without repeating the start"""
        out = self.expand_path(cycle)
        closing = self.adjacency[cycle[-1]][cycle[0]]
        if closing.size:
            out.extend(closing)
        return out
