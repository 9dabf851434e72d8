from typing import Iterable, Optional, Tuple


class CyclorientError(Exception):
    """Base class for every error raised by the library"""


class InputError(CyclorientError):
    """Malformed edge-list or orientation text"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class ParseError(InputError):
    pass


class SelfLoop(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class UnknownVertex(CyclorientError):
    def __init__(self, vertex: int, vertex_count: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is not in a graph with {vertex_count} vertices")


class PartialOrientation(CyclorientError):
    """An orientation that does not cover the graph's edges exactly once"""

    def __init__(self, missing: Iterable[Tuple[int, int]] = (),
                 extra: Iterable[Tuple[int, int]] = (), line: Optional[int] = None):
        self.missing = sorted(missing)
        self.extra = sorted(extra)
        self.line = line
        parts = []
        if self.missing:
            parts.append(f"{len(self.missing)} edge(s) not oriented, first {self.missing[0]}")
        if self.extra:
            parts.append(f"{len(self.extra)} unexpected edge(s), first {self.extra[0]}")
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + ("; ".join(parts) or "orientation does not match graph"))


class NotTwoConnected(CyclorientError):
    pass


class SizeLimit(CyclorientError):
    pass


class PreconditionViolated(CyclorientError):
    pass


class BadParams(CyclorientError):
    pass


class CompleteGraph(CyclorientError):
    """No non-adjacent vertex pair exists"""
