"""
Binary counter gadgets with floor(log2 T) + 1 vertices.

Train counter: entering repeatedly at C, exactly T consecutive entries leave
through port A, the next leaves through B, and every switch is back to 0.

Ball counter: among balls entering one at a time, balls 1..T leave through
port F and ball T+1 is the first to leave through D.

Fragment vertices use local ids 0..m; successor entries are either a local id
or a Port, which the caller wires to real vertices with `CounterGadget.resolve`.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Mapping, Optional, Tuple, Union

from src.core_model.errors import InstanceValidationError
from src.core_model.switch_graph import VertexId


class Port(str, Enum):
    A = "A"
    B = "B"
    F = "F"
    D = "D"


class CounterKind(str, Enum):
    TRAIN = "train"
    BALL = "ball"


Target = Union[int, Port]

_PORTS = {CounterKind.TRAIN: (Port.A, Port.B), CounterKind.BALL: (Port.F, Port.D)}


@dataclass(frozen=True)
class CounterGadget:
    """
    Generated counter fragment.

    Attributes:
        kind: train or ball
        target: The count T
        s0, s1: Successor entries per local vertex (local id or Port)
        labels: Display names, C0..Cm for trains and X0..Xm for balls
        entry: Local id where trains/balls enter
    """

    kind: CounterKind
    target: int
    s0: Tuple[Target, ...]
    s1: Tuple[Target, ...]
    labels: Tuple[str, ...]
    entry: int = 0

    @property
    def size(self) -> int:
        return len(self.s0)

    @property
    def ports(self) -> Tuple[Port, Port]:
        """(continue port, exit port): (A, B) for trains, (F, D) for balls."""
        return _PORTS[self.kind]

    def resolve(
        self, offset: int, wiring: Mapping[Port, VertexId]
    ) -> Tuple[List[VertexId], List[VertexId]]:
        """
        Place the fragment at ids offset..offset+size-1 and wire its ports.

        Returns:
            (s0 list, s1 list) for the placed fragment vertices
        """
        missing = [p.value for p in self.ports if p not in wiring]
        if missing:
            raise InstanceValidationError(f"unwired counter port(s): {', '.join(missing)}")

        def place(entry: Target) -> VertexId:
            if isinstance(entry, Port):
                return wiring[entry]
            return offset + entry

        return [place(e) for e in self.s0], [place(e) for e in self.s1]


def _check_target(target: int, port: Port) -> None:
    if target < 1:
        raise InstanceValidationError(
            f"counter target must be >= 1, got {target}; for T = 0 wire the edge "
            f"straight to whatever port {port.value} would lead to"
        )


def build_train_counter(target: int) -> CounterGadget:
    """
    Flattened train counter for T = target.

    With T = b_m ... b_0 in binary (b_m = 1): a chain C0..Cm with s1(Ci) = C(i+1),
    s1(Cm) = B and s0(C0) = A; for i >= 1, s0(Ci) = A when b_(m-i) = 1, else C0.

    Args:
        target: T >= 1 (arbitrary precision)

    Returns:
        CounterGadget of kind train with m + 1 vertices
    """
    _check_target(target, Port.B)
    m = target.bit_length() - 1
    s0: List[Target] = [Port.A]
    s1: List[Target] = []
    for i in range(1, m + 1):
        s0.append(Port.A if (target >> (m - i)) & 1 else 0)
    for i in range(m):
        s1.append(i + 1)
    s1.append(Port.B)
    return CounterGadget(
        kind=CounterKind.TRAIN,
        target=target,
        s0=tuple(s0),
        s1=tuple(s1),
        labels=tuple(f"C{i}" for i in range(m + 1)),
    )


def build_train_counter_recursive(target: int) -> CounterGadget:
    """
    Train counter by the doubling steps, read off T's bits from the top.

    T -> 2T: the old B exit becomes a new vertex whose solid edge loops back to C
    and whose dashed edge is the new B. T -> 2T + 1: same, but the solid edge
    goes to A, so A is passed once more before the counter restarts.
    """
    _check_target(target, Port.B)

    def grow(t: int) -> Tuple[List[Target], List[Target]]:
        if t == 1:
            return [Port.A], [Port.B]
        s0, s1 = grow(t >> 1)
        new = len(s0)
        s1[s1.index(Port.B)] = new
        s0.append(Port.A if t & 1 else 0)
        s1.append(Port.B)
        return s0, s1

    s0, s1 = grow(target)
    return CounterGadget(
        kind=CounterKind.TRAIN,
        target=target,
        s0=tuple(s0),
        s1=tuple(s1),
        labels=tuple(f"C{i}" for i in range(len(s0))),
    )


def build_ball_counter(target: int) -> CounterGadget:
    """
    Ball counter for T = target.

    With T = b_m ... b_0 (b_m = 1): a chain X0..Xm entered at X0. Xm is the base
    (s0 -> F, s1 -> D); for j < m, X_j forwards its odd-numbered arrivals to
    X(j+1) when b_j = 0 and its even-numbered arrivals when b_j = 1, sending
    the rest to F. Ball T + 1 is the first ball to leave through D.

    Args:
        target: T >= 1 (arbitrary precision)

    Returns:
        CounterGadget of kind ball with m + 1 vertices
    """
    _check_target(target, Port.D)
    m = target.bit_length() - 1
    s0: List[Target] = []
    s1: List[Target] = []
    for j in range(m):
        if (target >> j) & 1:
            s0.append(Port.F)
            s1.append(j + 1)
        else:
            s0.append(j + 1)
            s1.append(Port.F)
    s0.append(Port.F)
    s1.append(Port.D)
    return CounterGadget(
        kind=CounterKind.BALL,
        target=target,
        s0=tuple(s0),
        s1=tuple(s1),
        labels=tuple(f"X{j}" for j in range(m + 1)),
    )


def build_counter(target: int, kind: Union[CounterKind, str]) -> CounterGadget:
    kind = CounterKind(kind)
    if kind == CounterKind.TRAIN:
        return build_train_counter(target)
    return build_ball_counter(target)


def counter_size(target: int) -> Optional[int]:
    """floor(log2 T) + 1, or None for T < 1."""
    return target.bit_length() if target >= 1 else None
