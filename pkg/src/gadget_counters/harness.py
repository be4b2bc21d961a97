"""
Instrumented harnesses for counter gadgets.
"""

from typing import Iterator, List, Optional, Tuple, Union

from src.arrival_engine.train import advance
from src.core_model.instances import ArrivalInstance, DigicompInstance
from src.core_model.switch_graph import SwitchGraph, graph_from_maps
from src.gadget_counters.counters import CounterGadget, CounterKind, Port


def _port_graph(gadget: CounterGadget) -> SwitchGraph:
    """Fragment plus one sink per port, ports at ids size and size + 1."""
    m = gadget.size
    first, second = gadget.ports
    s0, s1 = gadget.resolve(0, {first: m, second: m + 1})
    s0 += [m, m + 1]
    s1 += [m, m + 1]
    labels = list(gadget.labels) + [first.value, second.value]
    return graph_from_maps(s0, s1, labels)


def iter_counter_exits(gadget: CounterGadget, entries: int) -> Iterator[Tuple[Port, bytes]]:
    """
    Enter the gadget `entries` times in a row.

    Switch states persist between entries. For a train counter this is the
    train looping back from A (or B) to the entry; for a ball counter each
    entry is a fresh ball.

    Yields:
        (exit port, fragment switch states right after the exit)
    """
    graph = _port_graph(gadget)
    m = gadget.size
    first, second = gadget.ports
    switches = bytearray(graph.n)
    for _ in range(entries):
        position = gadget.entry
        while position < m:
            position = advance(graph, switches, position)
        yield (first if position == m else second), bytes(switches[:m])


def counter_exit_trace(gadget: CounterGadget, entries: int) -> List[Port]:
    """Exit-port sequence over `entries` consecutive entries."""
    return [port for port, _ in iter_counter_exits(gadget, entries)]


def follows_train_law(gadget: CounterGadget, periods: int = 2) -> bool:
    """
    True when `periods` rounds of T + 1 entries exit as (A^T B)^periods and the
    fragment switches are all 0 right after every B.

    Streams the run without keeping the trace, so T up to 2^20 stays cheap.
    """
    if gadget.kind != CounterKind.TRAIN:
        raise ValueError("the A^T B law applies to train counters")
    graph = _port_graph(gadget)
    s0, s1 = graph.s0, graph.s1
    m, entry, target = gadget.size, gadget.entry, gadget.target
    tap, stop = m, m + 1
    switches = bytearray(graph.n)
    for _ in range(periods):
        for k in range(target + 1):
            position = entry
            while position < m:
                bit = switches[position]
                switches[position] = bit ^ 1
                position = s1[position] if bit else s0[position]
            if position != (tap if k < target else stop):
                return False
        if any(switches[:m]):
            return False
    return True


def first_exit_through(gadget: CounterGadget, port: Port, entries: int) -> Optional[int]:
    """
    1-based index of the first entry that leaves through `port`, or None when
    none of `entries` consecutive entries does.
    """
    graph = _port_graph(gadget)
    s0, s1 = graph.s0, graph.s1
    if port not in gadget.ports:
        raise ValueError(f"{gadget.kind.value} counters have no port {port.value}")
    m, entry = gadget.size, gadget.entry
    wanted = m if port == gadget.ports[0] else m + 1
    switches = bytearray(graph.n)
    for index in range(1, entries + 1):
        position = entry
        while position < m:
            bit = switches[position]
            switches[position] = bit ^ 1
            position = s1[position] if bit else s0[position]
        if position == wanted:
            return index
    return None


def build_counter_harness(gadget: CounterGadget) -> Union[ArrivalInstance, DigicompInstance]:
    """
    Self-contained instance around a gadget.

    Train: port A leads to a tap vertex that feeds straight back into C, port B
    into a sink, destination B. Ball: ports F and D are sinks, destination D,
    T + 1 balls.
    """
    m = gadget.size
    if gadget.kind == CounterKind.TRAIN:
        tap, stop = m, m + 1
        s0, s1 = gadget.resolve(0, {Port.A: tap, Port.B: stop})
        s0 += [gadget.entry, stop]
        s1 += [gadget.entry, stop]
        graph = graph_from_maps(s0, s1, gadget.labels + ("A", "B"))
        return ArrivalInstance(graph=graph, origin=gadget.entry, destination=stop)

    f_sink, d_sink = m, m + 1
    s0, s1 = gadget.resolve(0, {Port.F: f_sink, Port.D: d_sink})
    s0 += [f_sink, d_sink]
    s1 += [f_sink, d_sink]
    graph = graph_from_maps(s0, s1, gadget.labels + ("F", "D"))
    return DigicompInstance(
        graph=graph, origin=gadget.entry, destination=d_sink, balls=gadget.target + 1
    )
