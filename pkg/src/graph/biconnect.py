import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from .core import Edge, Graph, edge_key, relabel_graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Component:
    """One block: its vertices and its edges (both sorted, original ids)"""
    index: int
    vertices: Tuple[int, ...]
    edges: Tuple[Edge, ...]

    @property
    def is_bridge(self) -> bool:
        return len(self.edges) == 1

    def as_graph(self) -> Tuple[Graph, Tuple[int, ...]]:
        """Dense local copy of the block plus local id -> original id mapping"""
        return relabel_graph(self.edges, self.vertices)

    def to_dict(self) -> Dict[str, object]:
        return {"id": self.index, "vertices": list(self.vertices),
                "edges": [list(e) for e in self.edges], "bridge": self.is_bridge}


@dataclass(frozen=True)
class BiconnectedDecomposition:
    components: Tuple[Component, ...]
    isolated_vertices: Tuple[int, ...]

    @property
    def bridges(self) -> Tuple[Component, ...]:
        return tuple(c for c in self.components if c.is_bridge)

    def __iter__(self) -> Iterator[Component]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)


def biconnected_components(g: Graph) -> BiconnectedDecomposition:
    """Partition the edges of g into blocks in O(n + e).

    Roots are taken in ascending id order, so components come out in the
    order the search completes them.
    """
    n = g.vertex_count
    adjacency = g.adjacency
    disc = [-1] * n
    low = [0] * n
    clock = 0
    edge_stack: List[Edge] = []
    blocks: List[Component] = []
    isolated: List[int] = []

    def close_block(parent: int, child: int) -> None:
        block = []
        while True:
            a, b = edge_stack.pop()
            block.append(edge_key(a, b))
            if a == parent and b == child:
                break
        block.sort()
        vertices = sorted({x for e in block for x in e})
        blocks.append(Component(len(blocks), tuple(vertices), tuple(block)))

    for root in range(n):
        if disc[root] != -1:
            continue
        if not adjacency[root]:
            disc[root] = clock
            clock += 1
            isolated.append(root)
            continue
        disc[root] = low[root] = clock
        clock += 1
        # frames: (vertex, dfs parent, index of next neighbor to scan)
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            u, parent, i = frame
            neighbors = adjacency[u]
            descended = False
            while i < len(neighbors):
                w = neighbors[i]
                i += 1
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    frame[2] = i
                    stack.append([w, u, 0])
                    descended = True
                    break
                if w != parent and disc[w] < disc[u]:
                    # back edge to an ancestor
                    edge_stack.append((u, w))
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            if descended:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[u] < low[p]:
                    low[p] = low[u]
                if low[u] >= disc[p]:
                    close_block(p, u)

    logger.debug("found %d blocks, %d isolated vertices", len(blocks), len(isolated))
    return BiconnectedDecomposition(tuple(blocks), tuple(isolated))
