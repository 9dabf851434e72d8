from .core import (Arc, CycleSeq, Edge, Graph, Orientation, VertexPath, edge_key,
                   induced_subgraph, parse_edge_list, parse_orientation)
from .dot import emit_dot, parse_dot
from .biconnect import BiconnectedDecomposition, Component, biconnected_components

__all__ = [
    "Arc", "CycleSeq", "Edge", "Graph", "Orientation", "VertexPath", "edge_key",
    "induced_subgraph", "parse_edge_list", "parse_orientation", "emit_dot", "parse_dot",
    "BiconnectedDecomposition", "Component", "biconnected_components",
]
