"""
Result types shared by both Digicomp engines.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

from src.core_model.switch_graph import VertexId


@dataclass(frozen=True)
class BallCounts:
    """
    Per-vertex arrival counts and the switch states left behind.

    An arrival is a ball entering the vertex from another vertex, or being
    released at the origin; bouncing through a self-loop is not a new arrival.
    """

    arrivals: Tuple[int, ...]
    final_switches: bytes

    def __getitem__(self, v: VertexId) -> int:
        return self.arrivals[v]

    @property
    def n(self) -> int:
        return len(self.arrivals)


@dataclass(frozen=True)
class DigicompOutcome:
    """`reached` is True iff some ball entered the destination."""

    reached: bool
    counts: BallCounts
    steps: Optional[int] = field(default=None, compare=False)

    @property
    def verdict(self) -> str:
        return "yes" if self.reached else "no"
