"""
Problem instances: ARRIVAL, Digicomp and DAG path-count threshold.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple, Union

import networkx as nx

from src.core_model.acyclicity import require_acyclic, successor_digraph
from src.core_model.errors import InstanceValidationError, NonAcyclicGraphError
from src.core_model.switch_graph import SwitchGraph, VertexId


class InstanceKind(str, Enum):
    ARRIVAL = "arrival"
    DIGICOMP = "digicomp"
    DAG = "dag"


@dataclass(frozen=True)
class ArrivalInstance:
    """Single train released at `origin`; does it ever enter `destination`?"""

    graph: SwitchGraph
    origin: VertexId
    destination: VertexId

    def __post_init__(self):
        self.graph.check_vertex(self.origin, "origin")
        self.graph.check_vertex(self.destination, "destination")

    @property
    def kind(self) -> InstanceKind:
        return InstanceKind.ARRIVAL


@dataclass(frozen=True)
class DigicompInstance:
    """
    `balls` balls released one after another at `origin` of an acyclic switch graph.

    The ball count is an arbitrary-precision natural (Digicomp_EXP encodes it in binary).
    """

    graph: SwitchGraph
    origin: VertexId
    destination: VertexId
    balls: int

    def __post_init__(self):
        self.graph.check_vertex(self.origin, "origin")
        self.graph.check_vertex(self.destination, "destination")
        if self.balls < 0:
            raise InstanceValidationError(f"ball count must be >= 0, got {self.balls}")
        require_acyclic(self.graph)

    @property
    def kind(self) -> InstanceKind:
        return InstanceKind.DIGICOMP


@dataclass(frozen=True)
class DagInstance:
    """
    Path-count threshold question: are there at least `threshold` walks source -> sink?

    Successor lists may repeat targets (parallel edges count as distinct paths).
    """

    successors: Tuple[Tuple[VertexId, ...], ...]
    source: VertexId
    sink: VertexId
    threshold: int

    def __post_init__(self):
        object.__setattr__(
            self, "successors", tuple(tuple(int(v) for v in succ) for succ in self.successors)
        )
        n = self.n
        for role, v in (("source", self.source), ("sink", self.sink)):
            if not 0 <= v < n:
                raise InstanceValidationError(f"{role} {v} is not a vertex of a {n}-vertex DAG")
        for u, succ in enumerate(self.successors):
            for v in succ:
                if not 0 <= v < n:
                    raise InstanceValidationError(
                        f"edge {u} -> {v} leaves the {n}-vertex DAG"
                    )
                if u == v:
                    raise NonAcyclicGraphError((u,), f"DAG has a self-loop at {u}")
        if self.threshold < 0:
            raise InstanceValidationError(f"threshold must be >= 0, got {self.threshold}")
        digraph = successor_digraph(self.successors)
        if not nx.is_directed_acyclic_graph(digraph):
            raise NonAcyclicGraphError(tuple(u for u, _ in nx.find_cycle(digraph)))

    @property
    def n(self) -> int:
        return len(self.successors)

    @property
    def kind(self) -> InstanceKind:
        return InstanceKind.DAG

    def out_degree(self, v: VertexId) -> int:
        return len(self.successors[v])

    def edge_count(self) -> int:
        return sum(len(succ) for succ in self.successors)


Instance = Union[ArrivalInstance, DigicompInstance, DagInstance]


def dag_from_lists(
    successors: Sequence[Sequence[VertexId]], source: VertexId, sink: VertexId, threshold: int = 1
) -> DagInstance:
    return DagInstance(
        successors=tuple(tuple(s) for s in successors),
        source=source,
        sink=sink,
        threshold=threshold,
    )
