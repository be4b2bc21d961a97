"""
Switch graphs and train configurations.

A switch graph is a vertex set [0, n) with two total successor maps s0 and s1.
Each vertex carries a switch bit selecting which successor the next visitor takes.
"""

import re
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from src.core_model.errors import InstanceValidationError

VertexId = int

_LABEL_PATTERN = re.compile(r"^[^\s#]+$")


@dataclass(frozen=True)
class SwitchGraph:
    """
    Immutable switch graph.

    Attributes:
        s0: Solid successor of every vertex (taken when the switch is 0)
        s1: Dashed successor of every vertex (taken when the switch is 1)
        labels: Optional per-vertex display names; None entries are unlabeled
    """

    s0: Tuple[VertexId, ...]
    s1: Tuple[VertexId, ...]
    labels: Optional[Tuple[Optional[str], ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "s0", tuple(int(v) for v in self.s0))
        object.__setattr__(self, "s1", tuple(int(v) for v in self.s1))
        if self.labels is not None:
            labels = tuple(self.labels)
            if all(label is None for label in labels):
                labels = None
            object.__setattr__(self, "labels", labels)

        n = len(self.s0)
        if len(self.s1) != n:
            raise InstanceValidationError(
                f"s0 has {n} entries but s1 has {len(self.s1)}"
            )
        for name, succ in (("s0", self.s0), ("s1", self.s1)):
            for v, target in enumerate(succ):
                if not 0 <= target < n:
                    raise InstanceValidationError(
                        f"{name}({v}) = {target} is not a vertex of a {n}-vertex graph"
                    )
        if self.labels is not None:
            if len(self.labels) != n:
                raise InstanceValidationError(
                    f"{len(self.labels)} labels given for {n} vertices"
                )
            for v, label in enumerate(self.labels):
                if label is not None and not _LABEL_PATTERN.match(label):
                    raise InstanceValidationError(
                        f"label of vertex {v} must be one token without '#': {label!r}"
                    )

    @property
    def n(self) -> int:
        return len(self.s0)

    def successor(self, v: VertexId, bit: int) -> VertexId:
        return self.s1[v] if bit else self.s0[v]

    def label(self, v: VertexId) -> Optional[str]:
        if self.labels is None:
            return None
        return self.labels[v]

    def is_sink(self, v: VertexId) -> bool:
        """A sink (leaf) has both successors equal to itself."""
        return self.s0[v] == v and self.s1[v] == v

    def sinks(self) -> Tuple[VertexId, ...]:
        return tuple(v for v in range(self.n) if self.is_sink(v))

    def edges(self) -> Iterator[Tuple[VertexId, VertexId, int]]:
        """Yield (source, target, bit) for both successor maps, ascending by source."""
        for v in range(self.n):
            yield v, self.s0[v], 0
            yield v, self.s1[v], 1

    def check_vertex(self, v: VertexId, role: str = "vertex") -> None:
        if not 0 <= v < self.n:
            raise InstanceValidationError(
                f"{role} {v} is not a vertex of a {self.n}-vertex graph"
            )


@dataclass(frozen=True)
class Configuration:
    """
    Train position plus the full switch-state vector.

    `switches` holds one byte per vertex, each 0 (next exit s0) or 1 (next exit s1).
    """

    position: VertexId
    switches: bytes

    @classmethod
    def initial(cls, graph: SwitchGraph, origin: VertexId) -> "Configuration":
        """All switches start in state 0."""
        return cls(position=origin, switches=bytes(graph.n))

    def bit(self, v: VertexId) -> int:
        return self.switches[v]

    def bitstring(self) -> str:
        return "".join("1" if b else "0" for b in self.switches)

    def validate(self, graph: SwitchGraph) -> None:
        if len(self.switches) != graph.n:
            raise InstanceValidationError(
                f"configuration has {len(self.switches)} switch bits for {graph.n} vertices"
            )
        if any(b not in (0, 1) for b in self.switches):
            raise InstanceValidationError("switch bits must be 0 or 1")
        graph.check_vertex(self.position, "position")


def graph_from_maps(
    s0: Sequence[VertexId],
    s1: Sequence[VertexId],
    labels: Optional[Sequence[Optional[str]]] = None,
) -> SwitchGraph:
    """Convenience constructor accepting any sequences."""
    return SwitchGraph(
        s0=tuple(s0), s1=tuple(s1), labels=None if labels is None else tuple(labels)
    )
