from typing import Collection, List, Optional, Sequence, Tuple

from ..graph.errors import NotTwoConnected

Rows = Sequence[Optional[Collection[int]]]


def _walk(start: int, first: int, adjacency: Rows) -> List[int]:
    """Follow degree-2 vertices from start through first; stops on degree != 2 or at start"""
    out = [first]
    prev, cur = start, first
    while cur != start:
        row = adjacency[cur]
        if len(row) != 2:
            break
        a, b = row
        nxt = b if a == prev else a
        out.append(nxt)
        prev, cur = cur, nxt
    return out


def maximal_chain(v: int, adjacency: Rows) -> Tuple[List[int], bool]:
    """Longest path through degree-2 vertex v whose interior has degree 2.

    `adjacency[x]` is any sized collection of x's neighbors. Returns
    (vertices, closed). When closed, vertices is the whole cycle starting at v
    and the endpoints are not repeated. Otherwise vertices runs from the end
    reached through v's lower-id neighbor to the other end.
    """
    a, b = sorted(adjacency[v])
    left = _walk(v, a, adjacency)
    if left[-1] == v:
        return [v] + left[:-1], True
    right = _walk(v, b, adjacency)
    path = left[::-1] + [v] + right
    if path[0] == path[-1]:
        raise NotTwoConnected(
            f"degree-2 chain through {v} closes at vertex {path[0]} "
            f"of degree {len(adjacency[path[0]])}")
    return path, False
