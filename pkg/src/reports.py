from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .config import Config
from .decide.verdict import GraphVerdict, Verdict
from .graph.core import Graph, Orientation
from .orient.verify import ViolationReport


class _Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(default=Config.JSON_SCHEMA, alias="schema")

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


class ComponentReport(BaseModel):
    id: int
    vertices: List[int]
    edges: List[List[int]]
    bridge: bool
    answer: bool
    reason: Optional[Dict[str, Any]] = None
    log: Optional[Dict[str, Any]] = None
    iterations: int = 0


class CheckReport(_Report):
    answer: bool
    procedure: str
    vertex_count: int
    edge_count: int
    loop_iterations: int
    reason: Optional[Dict[str, Any]] = None
    isolated_vertices: List[int] = []
    components: List[ComponentReport] = []

    @classmethod
    def from_verdict(cls, g: Graph, verdict: GraphVerdict) -> "CheckReport":
        components: List[ComponentReport] = []
        isolated: List[int] = []
        if verdict.decomposition is not None:
            isolated = list(verdict.decomposition.isolated_vertices)
            for component, v in zip(verdict.decomposition, verdict.components):
                components.append(ComponentReport(
                    **component.to_dict(),
                    answer=v.answer,
                    reason=_reason(v),
                    log=v.log.to_dict() if v.log is not None else None,
                    iterations=v.stats.iterations,
                ))
        return cls(
            answer=verdict.answer,
            procedure=verdict.procedure,
            vertex_count=g.vertex_count,
            edge_count=g.edge_count,
            loop_iterations=verdict.loop_iterations,
            reason=verdict.reason.to_dict() if verdict.reason is not None else None,
            isolated_vertices=isolated,
            components=components,
        )


class OrientReport(_Report):
    answer: bool
    arcs: List[List[int]] = []
    reason: Optional[Dict[str, Any]] = None

    @classmethod
    def build(cls, verdict: GraphVerdict, orientation: Optional[Orientation]) -> "OrientReport":
        if orientation is None:
            reason = verdict.reason.to_dict() if verdict.reason is not None else None
            return cls(answer=False, reason=reason)
        return cls(answer=True, arcs=[list(arc) for arc in orientation.to_edge_list()])


class VerifyReport(_Report):
    ok: bool
    mode: str
    checked: int
    violations: List[List[int]] = []
    graph_orientable: bool

    @classmethod
    def build(cls, report: ViolationReport, mode: str, graph_orientable: bool) -> "VerifyReport":
        return cls(ok=report.ok, mode=mode, checked=report.checked,
                   violations=[list(c.vertices) for c in report.violations],
                   graph_orientable=graph_orientable)


def _reason(v: Verdict) -> Optional[Dict[str, Any]]:
    return v.reason.to_dict() if v.reason is not None else None
