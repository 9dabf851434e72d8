from abc import ABC, abstractmethod
from typing import Dict, Optional

from ...graph.core import Graph
from ...graph.errors import NotTwoConnected
from ..verdict import BaseEdge, DecompositionLog, Verdict


class ComponentProcedure(ABC):
    """Base class for decision procedures run on a single two-connected component"""

    @property
    @abstractmethod
    def name(self) -> str:
        """Procedure identifier (e.g., 'linear', 'naive')"""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        pass

    @property
    @abstractmethod
    def complexity(self) -> str:
        """Running time in the number of vertices"""
        pass

    @abstractmethod
    def check(self, component: Graph, component_id: int = 0) -> Verdict:
        """Decide one component; a positive verdict carries its decomposition log"""
        pass

    def info(self) -> Dict[str, str]:
        return {"name": self.name, "description": self.description,
                "complexity": self.complexity}


def trivial_verdict(c: Graph, component_id: int) -> Optional[Verdict]:
    """Verdicts for the edgeless and single-edge cases, None otherwise"""
    if c.edge_count == 0:
        return Verdict(True, log=DecompositionLog(component_id, (), None))
    if c.edge_count == 1:
        return Verdict(True, log=DecompositionLog(component_id, (), BaseEdge(c.sorted_edges[0])))
    return None


def validate_component(c: Graph) -> None:
    """Raise NotTwoConnected if a multi-edge component has a vertex of degree <= 1"""
    low = next((v for v, ns in enumerate(c.adjacency) if len(ns) <= 1), None)
    if low is not None:
        raise NotTwoConnected(
            f"vertex {low} has degree {c.degree(low)} in a component with "
            f"{c.edge_count} edges")
