from .pipeline import edge_bound_ok, is_cyclically_orientable
from .procedures import check_component_linear, check_component_naive
from .verdict import (BaseCycle, BaseEdge, DecompositionLog, Ear, EdgeBoundExceeded,
                      GraphVerdict, LoopStats, NoDegreeTwoVertex, Verdict)

__all__ = [
    "edge_bound_ok", "is_cyclically_orientable", "check_component_linear",
    "check_component_naive", "BaseCycle", "BaseEdge", "DecompositionLog", "Ear",
    "EdgeBoundExceeded", "GraphVerdict", "LoopStats", "NoDegreeTwoVertex", "Verdict",
]
