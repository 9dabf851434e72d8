import importlib
import inspect
import logging
from pathlib import Path
from typing import Dict, List, Optional, Type

from .base import ComponentProcedure

logger = logging.getLogger(__name__)


class ProcedureManager:
    """Discovers and hands out the component decision procedures"""

    def __init__(self, procedures_dir: Optional[Path] = None):
        self.procedures_dir = procedures_dir or Path(__file__).parent
        self.procedures: Dict[str, ComponentProcedure] = {}
        self.procedure_classes: Dict[str, Type[ComponentProcedure]] = {}
        self._discover_procedures()
        self._load_procedures()

    def _discover_procedures(self):
        """Discover available procedure classes"""
        self.procedure_classes = {}

        # Import all Python files in the procedures directory
        for file in sorted(self.procedures_dir.glob("*.py")):
            if file.name.startswith("_") or file.name in ["base.py", "manager.py"]:
                continue

            module_name = f"{__package__}.{file.stem}"
            try:
                module = importlib.import_module(module_name)
            except ImportError as e:
                logger.error("Error loading procedure module %s: %s", module_name, e)
                continue

            # Find ComponentProcedure subclasses
            for _, obj in inspect.getmembers(module, inspect.isclass):
                if (issubclass(obj, ComponentProcedure) and
                        obj is not ComponentProcedure and
                        obj.__module__ == module_name):
                    self.procedure_classes[obj().name] = obj

    def _load_procedures(self):
        """Instantiate all discovered procedures"""
        for name, procedure_class in self.procedure_classes.items():
            self.procedures[name] = procedure_class()
            logger.debug("Loaded procedure: %s (%s)", name, self.procedures[name].complexity)

    def get(self, name: str) -> ComponentProcedure:
        try:
            return self.procedures[name]
        except KeyError:
            raise KeyError(f"unknown procedure {name!r}; available: "
                           f"{', '.join(sorted(self.procedures))}") from None

    def names(self) -> List[str]:
        return sorted(self.procedures)

    def get_procedure_info(self) -> List[Dict[str, str]]:
        """Get information about loaded procedures"""
        return [procedure.info() for procedure in self.procedures.values()]


_default: Optional[ProcedureManager] = None


def default_manager() -> ProcedureManager:
    global _default
    if _default is None:
        _default = ProcedureManager()
    return _default
