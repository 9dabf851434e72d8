from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..decide.verdict import DecompositionLog
from ..graph.core import CycleSeq, Graph, Orientation
from ..oracle.brute import enumerate_chordless_cycles


class VerifyMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    FROM_LOG = "from_log"


@dataclass(frozen=True)
class ViolationReport:
    ok: bool
    violations: Tuple[CycleSeq, ...]
    checked: int

    def to_dict(self) -> Dict[str, Any]:
        return {"ok": self.ok, "checked": self.checked,
                "violations": [list(c.vertices) for c in self.violations]}


def is_cyclically_oriented(cycle: CycleSeq, o: Orientation) -> bool:
    forward = [o.points(a, b) for a, b in cycle.arcs()]
    return all(forward) or not any(forward)


def verify_orientation(g: Graph, o: Orientation, mode: VerifyMode = VerifyMode.EXHAUSTIVE,
                       logs: Union[DecompositionLog, Sequence[DecompositionLog], None] = None,
                       cap: Optional[int] = None) -> ViolationReport:
    """Check o against chordless cycles.

    EXHAUSTIVE enumerates every chordless cycle (small graphs only).
    FROM_LOG checks the base and ear cycles of the given logs, which are
    exactly the chordless cycles of a cyclically orientable graph, in O(n).
    """
    o.check_total(g)
    cycles: Iterable[CycleSeq]
    if mode is VerifyMode.EXHAUSTIVE:
        cycles = enumerate_chordless_cycles(g, cap=cap)
    else:
        if logs is None:
            raise ValueError("from_log verification needs the decomposition logs")
        if isinstance(logs, DecompositionLog):
            logs = [logs]
        cycles = [cycle for log in logs for cycle in log.cycles()]

    checked = 0
    violations: List[CycleSeq] = []
    for cycle in cycles:
        checked += 1
        if not is_cyclically_oriented(cycle, o):
            violations.append(cycle)
    violations.sort(key=lambda c: c.vertices)
    return ViolationReport(not violations, tuple(violations), checked)
