"""DOT text subset: node ids, `--` / `->` edges, no attributes."""

import re
from typing import Dict, List, Optional, Tuple, Union

from .core import Arc, Edge, Graph, Orientation, decode_text, edge_key
from .errors import ParseError

_HEADER = re.compile(r"^(di)?graph(\s+\w+)?\s*\{$")
_NODE = re.compile(r"^(\d+)\s*;?$")
_EDGE = re.compile(r"^(\d+)\s*(--|->)\s*(\d+)\s*;?$")


def emit_dot(g: Graph, o: Optional[Orientation] = None) -> str:
    """Undirected `graph` block, or a `digraph` block when an orientation is given"""
    if o is not None:
        o.check_total(g)
    lines = ["digraph G {" if o is not None else "graph G {"]
    lines.extend(f"  {v};" for v in g.vertices())
    for key in g.sorted_edges:
        if o is None:
            lines.append(f"  {key[0]} -- {key[1]};")
        else:
            tail, head = o.direction[key]
            lines.append(f"  {tail} -> {head};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot(text: Union[str, bytes]) -> Tuple[Graph, Optional[Orientation]]:
    """Read back what emit_dot writes; the orientation is None for `graph` blocks"""
    directed: Optional[bool] = None
    closed = False
    top = -1
    edges: List[Edge] = []
    arcs: Dict[Edge, Arc] = {}
    for line_no, raw in enumerate(decode_text(text).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("//"):
            continue
        if closed:
            raise ParseError("content after closing brace", line_no)
        if directed is None:
            header = _HEADER.match(line)
            if not header:
                raise ParseError(f"expected 'graph {{' or 'digraph {{', got {line!r}", line_no)
            directed = header.group(1) is not None
            continue
        if line == "}":
            closed = True
            continue
        node = _NODE.match(line)
        if node:
            top = max(top, int(node.group(1)))
            continue
        edge = _EDGE.match(line)
        if not edge:
            raise ParseError(f"unsupported DOT statement {line!r}", line_no)
        u, op, v = int(edge.group(1)), edge.group(2), int(edge.group(3))
        if (op == "->") != directed:
            raise ParseError(f"edge operator {op} does not match the block kind", line_no)
        edges.append((u, v))
        arcs[edge_key(u, v)] = (u, v)
        top = max(top, u, v)
    if not closed:
        raise ParseError("missing closing brace")
    g = Graph.from_edges(top + 1, edges)
    return g, (Orientation(arcs) if directed else None)
