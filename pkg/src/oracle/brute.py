from typing import Dict, List, Optional, Tuple

from ..config import get_config
from ..graph.core import CycleSeq, Graph, Orientation, VertexPath
from ..graph.errors import SizeLimit


def enumerate_chordless_cycles(g: Graph, cap: Optional[int] = None) -> List[CycleSeq]:
    """All chordless cycles of g, canonical rotation, sorted"""
    cap = get_config().CHORDLESS_CAP if cap is None else cap
    if g.vertex_count > cap:
        raise SizeLimit(f"chordless-cycle enumeration is capped at {cap} vertices, "
                        f"graph has {g.vertex_count}")

    masks = [0] * g.vertex_count
    for v in g.vertices():
        for u in g.adjacency[v]:
            masks[v] |= 1 << u

    found: List[CycleSeq] = []

    def extend(start: int, path: List[int], on_path: int, interior_adjacent: int) -> None:
        last = path[-1]
        for x in g.adjacency[last]:
            if x <= start or (on_path >> x) & 1 or (interior_adjacent >> x) & 1:
                continue
            if (masks[start] >> x) & 1:
                # x closes the cycle; keep one of its two traversal directions
                if path[1] < x:
                    found.append(CycleSeq(tuple(path) + (x,)))
                continue
            path.append(x)
            extend(start, path, on_path | (1 << x), interior_adjacent | masks[last])
            path.pop()

    for s in g.vertices():
        for v1 in g.adjacency[s]:
            if v1 > s:
                extend(s, [s, v1], (1 << s) | (1 << v1), 0)

    found.sort(key=lambda c: c.vertices)
    return found


def brute_force_co(g: Graph, cap: Optional[int] = None) -> Tuple[bool, Optional[Orientation]]:
    """Search all orientations for one that makes every chordless cycle cyclic.

    Orientations are bit vectors over the sorted edges (bit 0 = low -> high),
    tried in lexicographic order; the first valid one is returned.
    """
    cap = get_config().BRUTE_FORCE_EDGE_CAP if cap is None else cap
    edges = g.sorted_edges
    if len(edges) > cap:
        raise SizeLimit(f"brute-force search is capped at {cap} edges, graph has {len(edges)}")

    index = {e: i for i, e in enumerate(edges)}
    # cycles grouped by the last edge index they use: checkable once it is assigned
    by_last: Dict[int, List[List[Tuple[int, int]]]] = {}
    for cycle in enumerate_chordless_cycles(g, cap=g.vertex_count):
        needs = []
        for a, b in cycle.arcs():
            key = (a, b) if a < b else (b, a)
            needs.append((index[key], 0 if a < b else 1))
        by_last.setdefault(max(i for i, _ in needs), []).append(needs)

    bits = [0] * len(edges)

    def consistent(i: int) -> bool:
        for needs in by_last.get(i, ()):
            first = bits[needs[0][0]] ^ needs[0][1]
            if any(bits[j] ^ want != first for j, want in needs[1:]):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(edges):
            return True
        for bit in (0, 1):
            bits[i] = bit
            if consistent(i) and search(i + 1):
                return True
        return False

    if not search(0):
        return False, None
    return True, Orientation({e: (e if bit == 0 else (e[1], e[0]))
                              for e, bit in zip(edges, bits)})


def is_chain(g: Graph, p: VertexPath) -> bool:
    """p is a path of g with no edge between non-consecutive vertices"""
    if not p.is_path_in(g):
        return False
    vs = p.vertices
    return all(not g.has_edge(vs[i], vs[j])
               for i in range(len(vs)) for j in range(i + 2, len(vs)))


def is_chordless(g: Graph, c: CycleSeq) -> bool:
    """c is a cycle of g with no chord"""
    if not c.is_cycle_in(g):
        return False
    vs = c.vertices
    k = len(vs)
    return all(not g.has_edge(vs[i], vs[j])
               for i in range(k) for j in range(i + 2, k)
               if not (i == 0 and j == k - 1))
