from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..graph.biconnect import BiconnectedDecomposition
from ..graph.core import CycleSeq, Edge, VertexPath, edge_key


@dataclass(frozen=True)
class Ear:
    """A removed chain plus the edge joining its endpoints"""
    path: VertexPath
    closing_edge: Edge

    def cycle(self) -> CycleSeq:
        """The chordless cycle formed by the path and its closing edge"""
        return CycleSeq.canonical(self.path.vertices)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "ear", "path": list(self.path.vertices),
                "closing_edge": list(self.closing_edge)}


@dataclass(frozen=True)
class BaseCycle:
    cycle: CycleSeq

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "base_cycle", "cycle": list(self.cycle.vertices)}


@dataclass(frozen=True)
class BaseEdge:
    edge: Edge

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "base_edge", "edge": list(self.edge)}


Base = Union[BaseCycle, BaseEdge]


@dataclass(frozen=True)
class DecompositionLog:
    """Ears in removal order followed by the base; replayable certificate.

    `base` is None only for an edgeless graph, which is vacuously orientable.
    """
    component_id: int
    ears: Tuple[Ear, ...]
    base: Optional[Base]

    @property
    def events(self) -> Tuple[Union[Ear, BaseCycle, BaseEdge], ...]:
        return self.ears if self.base is None else self.ears + (self.base,)

    def edges(self) -> List[Edge]:
        """Edges contributed by the base and the ear paths, with repetition"""
        out: List[Edge] = []
        if isinstance(self.base, BaseEdge):
            out.append(edge_key(*self.base.edge))
        elif isinstance(self.base, BaseCycle):
            out.extend(self.base.cycle.edges())
        for ear in self.ears:
            out.extend(ear.path.edges())
        return out

    def reconstructs(self, edges: Sequence[Edge]) -> bool:
        """True when base plus ears is exactly `edges`, each edge once"""
        replay = Counter(self.edges())
        return (all(count == 1 for count in replay.values())
                and set(replay) == {edge_key(*e) for e in edges})

    def cycles(self) -> List[CycleSeq]:
        """Base cycle and ear cycles (the chordless cycles of the component)"""
        out = [ear.cycle() for ear in self.ears]
        if isinstance(self.base, BaseCycle):
            out.append(self.base.cycle)
        return out

    def relabel(self, mapping: Sequence[int], component_id: Optional[int] = None
                ) -> "DecompositionLog":
        """Translate every vertex id through mapping (local id -> original id)"""
        def path(p: VertexPath) -> VertexPath:
            return VertexPath(tuple(mapping[v] for v in p.vertices))

        ears = tuple(Ear(path(e.path), edge_key(mapping[e.closing_edge[0]],
                                                mapping[e.closing_edge[1]]))
                     for e in self.ears)
        base: Optional[Base] = None
        if isinstance(self.base, BaseEdge):
            base = BaseEdge(edge_key(mapping[self.base.edge[0]],
                                     mapping[self.base.edge[1]]))
        elif isinstance(self.base, BaseCycle):
            base = BaseCycle(CycleSeq.canonical([mapping[v] for v in self.base.cycle.vertices]))
        cid = self.component_id if component_id is None else component_id
        return DecompositionLog(cid, ears, base)

    def to_dict(self) -> Dict[str, Any]:
        return {"component_id": self.component_id,
                "events": [event.to_dict() for event in self.events]}


@dataclass(frozen=True)
class EdgeBoundExceeded:
    """e > 2n - 3; component_id is None when the whole graph failed the bound"""
    component_id: Optional[int]
    n: int
    e: int

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "edge_bound_exceeded", "component_id": self.component_id,
                "n": self.n, "e": self.e}

    def __str__(self) -> str:
        where = "graph" if self.component_id is None else f"component {self.component_id}"
        return f"{where} has {self.e} edges on {self.n} vertices (more than 2n-3)"


@dataclass(frozen=True)
class NoDegreeTwoVertex:
    component_id: int

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "no_degree_two_vertex", "component_id": self.component_id}

    def __str__(self) -> str:
        return f"component {self.component_id} has no removable ear"


Reason = Union[EdgeBoundExceeded, NoDegreeTwoVertex]


@dataclass(frozen=True)
class LoopStats:
    """Main-loop counters (type A: length-3 chain without a closing edge; type B: the rest)"""
    iterations: int = 0
    type_a: int = 0
    type_b: int = 0
    synthetic_vertices: int = 0
    trace: Tuple[Tuple[int, int], ...] = ()

    def __add__(self, other: "LoopStats") -> "LoopStats":
        return LoopStats(self.iterations + other.iterations,
                         self.type_a + other.type_a,
                         self.type_b + other.type_b,
                         self.synthetic_vertices + other.synthetic_vertices)


@dataclass(frozen=True)
class Verdict:
    """Outcome for one component: a log when YES, a reason when NO"""
    answer: bool
    log: Optional[DecompositionLog] = None
    reason: Optional[Reason] = None
    stats: LoopStats = field(default_factory=LoopStats)

    def __post_init__(self):
        if self.answer != (self.log is not None) or self.answer == (self.reason is not None):
            raise ValueError("a verdict carries a log exactly when it is positive "
                             "and a reason exactly when it is negative")

    def relabel(self, mapping: Sequence[int], component_id: int) -> "Verdict":
        if self.log is not None:
            return Verdict(True, log=self.log.relabel(mapping, component_id), stats=self.stats)
        reason = self.reason
        if isinstance(reason, NoDegreeTwoVertex):
            reason = NoDegreeTwoVertex(component_id)
        elif isinstance(reason, EdgeBoundExceeded):
            reason = EdgeBoundExceeded(component_id, reason.n, reason.e)
        return Verdict(False, reason=reason, stats=self.stats)


@dataclass(frozen=True)
class GraphVerdict:
    """Overall answer (conjunction over components) plus per-component verdicts"""
    answer: bool
    components: Tuple[Verdict, ...]
    decomposition: Optional[BiconnectedDecomposition]
    reason: Optional[Reason] = None
    procedure: str = "linear"

    @property
    def logs(self) -> List[DecompositionLog]:
        return [v.log for v in self.components if v.log is not None]

    @property
    def loop_iterations(self) -> int:
        return sum(v.stats.iterations for v in self.components)
