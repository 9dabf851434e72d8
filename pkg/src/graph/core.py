from dataclasses import dataclass
from functools import cached_property
from typing import (Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence,
                    Set, Tuple, Union)

from .errors import DuplicateEdge, ParseError, PartialOrientation, SelfLoop, UnknownVertex

Edge = Tuple[int, int]
Arc = Tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Canonical (low, high) form of the unordered edge {u, v}"""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    Build instances through `Graph.from_edges` (or the parsers); the
    constructor itself does not validate.
    """
    vertex_count: int
    edges: FrozenSet[Edge]
    adjacency: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]],
                   strict: bool = True) -> "Graph":
        """Build a graph, rejecting loops, out-of-range ids and (if strict) duplicates"""
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        seen: Set[Edge] = set()
        neighbors: List[List[int]] = [[] for _ in range(vertex_count)]
        for u, v in edges:
            for x in (u, v):
                if not 0 <= x < vertex_count:
                    raise UnknownVertex(x, vertex_count)
            if u == v:
                raise SelfLoop(f"self-loop on vertex {u}")
            key = edge_key(u, v)
            if key in seen:
                if strict:
                    raise DuplicateEdge(f"duplicate edge {key[0]} {key[1]}")
                continue
            seen.add(key)
            neighbors[u].append(v)
            neighbors[v].append(u)
        return cls(
            vertex_count=vertex_count,
            edges=frozenset(seen),
            adjacency=tuple(tuple(sorted(ns)) for ns in neighbors),
        )

    @classmethod
    def empty(cls, vertex_count: int = 0) -> "Graph":
        return cls.from_edges(vertex_count, ())

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def vertices(self) -> range:
        return range(self.vertex_count)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def is_cycle(self) -> bool:
        """True when the graph is a single cycle (every vertex degree 2, connected)"""
        if self.vertex_count < 3 or any(len(ns) != 2 for ns in self.adjacency):
            return False
        return len(connected_vertices(self, 0)) == self.vertex_count

    def to_dict(self) -> Dict[str, object]:
        return {"vertex_count": self.vertex_count,
                "edges": [list(e) for e in self.sorted_edges]}


@dataclass(frozen=True)
class Orientation:
    """A direction for each edge: edge key -> (tail, head)"""
    direction: Mapping[Edge, Arc]

    @classmethod
    def from_arcs(cls, arcs: Iterable[Arc]) -> "Orientation":
        return cls({edge_key(t, h): (t, h) for t, h in arcs})

    def __len__(self) -> int:
        return len(self.direction)

    def points(self, tail: int, head: int) -> bool:
        """True if edge {tail, head} is directed tail -> head"""
        return self.direction[edge_key(tail, head)] == (tail, head)

    def reversed(self) -> "Orientation":
        return Orientation({key: (h, t) for key, (t, h) in self.direction.items()})

    def to_edge_list(self) -> List[Arc]:
        """Arcs ordered by their edge key"""
        return [self.direction[key] for key in sorted(self.direction)]

    def check_total(self, g: Graph) -> None:
        """Raise PartialOrientation unless every edge of g is oriented exactly once"""
        keys = set(self.direction)
        missing = g.edges - keys
        extra = keys - g.edges
        bad = [key for key, (t, h) in self.direction.items() if edge_key(t, h) != key]
        if missing or extra or bad:
            raise PartialOrientation(missing=missing, extra=set(extra) | set(bad))


@dataclass(frozen=True)
class VertexPath:
    """Distinct vertices, consecutive ones adjacent"""
    vertices: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def endpoints(self) -> Tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def interior(self) -> Tuple[int, ...]:
        return self.vertices[1:-1]

    def arcs(self) -> List[Arc]:
        vs = self.vertices
        return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]

    def edges(self) -> List[Edge]:
        return [edge_key(a, b) for a, b in self.arcs()]

    def is_path_in(self, g: Graph) -> bool:
        vs = self.vertices
        return (len(set(vs)) == len(vs) and len(vs) >= 1
                and all(0 <= v < g.vertex_count for v in vs)
                and all(g.has_edge(a, b) for a, b in self.arcs()))


@dataclass(frozen=True)
class CycleSeq:
    """At least three distinct vertices; consecutive ones and the last/first pair adjacent"""
    vertices: Tuple[int, ...]

    @classmethod
    def canonical(cls, vertices: Sequence[int]) -> "CycleSeq":
        """Rotate to start at the lowest id, heading toward its lower cycle neighbor"""
        vs = list(vertices)
        if len(vs) < 3:
            raise ValueError(f"a cycle needs at least 3 vertices, got {vs}")
        i = vs.index(min(vs))
        vs = vs[i:] + vs[:i]
        if vs[-1] < vs[1]:
            vs = [vs[0]] + vs[:0:-1]
        return cls(tuple(vs))

    def __len__(self) -> int:
        return len(self.vertices)

    def arcs(self) -> List[Arc]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def edges(self) -> List[Edge]:
        return [edge_key(a, b) for a, b in self.arcs()]

    def is_cycle_in(self, g: Graph) -> bool:
        vs = self.vertices
        return (len(vs) >= 3 and len(set(vs)) == len(vs)
                and all(0 <= v < g.vertex_count for v in vs)
                and all(g.has_edge(a, b) for a, b in self.arcs()))

    def __str__(self) -> str:
        return "-".join(str(v) for v in self.vertices)


def connected_vertices(g: Graph, start: int, removed: FrozenSet[int] = frozenset()) -> Set[int]:
    """Vertices reachable from start without entering `removed`"""
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in g.adjacency[v]:
            if u not in seen and u not in removed:
                seen.add(u)
                stack.append(u)
    return seen


def decode_text(text: Union[str, bytes]) -> str:
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"input is not UTF-8: {e}")
    return text


def iter_pairs(text: Union[str, bytes]) -> Iterator[Tuple[int, int, int]]:
    """Yield (line number, u, v) for each "u v" line; comments and blanks skipped"""
    for line_no, raw in enumerate(decode_text(text).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2 or not all(t.isascii() and t.isdigit() for t in tokens):
            raise ParseError(f"expected two non-negative integers, got {line!r}", line_no)
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise SelfLoop(f"self-loop on vertex {u}", line_no)
        yield line_no, u, v


def parse_edge_list(text: Union[str, bytes], strict: bool = True) -> Graph:
    """Parse "u v" lines into a Graph with 1 + max id vertices"""
    seen: Set[Edge] = set()
    edges: List[Edge] = []
    top = -1
    for line_no, u, v in iter_pairs(text):
        key = edge_key(u, v)
        if key in seen:
            if strict:
                raise DuplicateEdge(f"duplicate edge {key[0]} {key[1]}", line_no)
            continue
        seen.add(key)
        edges.append(key)
        top = max(top, key[1])
    return Graph.from_edges(top + 1, edges)


def parse_orientation(text: Union[str, bytes], g: Graph) -> Orientation:
    """Parse a directed edge list ("u v" meaning u -> v) against the edges of g"""
    direction: Dict[Edge, Arc] = {}
    for line_no, t, h in iter_pairs(text):
        key = edge_key(t, h)
        if key not in g.edges or key in direction:
            raise PartialOrientation(extra=[key], line=line_no)
        direction[key] = (t, h)
    orientation = Orientation(direction)
    orientation.check_total(g)
    return orientation


def induced_subgraph(g: Graph, s: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """G restricted to s; returns the subgraph and new-id -> original-id mapping"""
    chosen = sorted(set(s))
    for v in chosen:
        if not 0 <= v < g.vertex_count:
            raise UnknownVertex(v, g.vertex_count)
    index = {v: i for i, v in enumerate(chosen)}
    edges = [(index[v], index[u])
             for v in chosen for u in g.adjacency[v]
             if u > v and u in index]
    return Graph.from_edges(len(chosen), edges), tuple(chosen)


def relabel_graph(edges: Iterable[Edge],
                  mapping: Optional[Sequence[int]] = None) -> Tuple[Graph, Tuple[int, ...]]:
    """Build a dense graph from edges over arbitrary ids; mapping is new id -> old id"""
    edges = list(edges)
    if mapping is None:
        mapping = sorted({x for e in edges for x in e})
    index = {v: i for i, v in enumerate(mapping)}
    return (Graph.from_edges(len(mapping), ((index[a], index[b]) for a, b in edges)),
            tuple(mapping))
