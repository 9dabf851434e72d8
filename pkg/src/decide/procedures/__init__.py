from .base import ComponentProcedure
from .linear import LinearProcedure, check_component_linear
from .manager import ProcedureManager, default_manager
from .naive import NaiveProcedure, check_component_naive, decompose_component_naive

__all__ = [
    "ComponentProcedure", "LinearProcedure", "NaiveProcedure", "ProcedureManager",
    "default_manager", "check_component_linear", "check_component_naive",
    "decompose_component_naive",
]
