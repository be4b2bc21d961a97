"""
Exact divergence detection for the deterministic train run.

The configuration space has at most n * 2^n elements, so a configuration that
recurs before the destination is entered proves the train never arrives.
Two detectors are provided: a visited-set detector, and Brent's two-speed
scheme that keeps only one saved configuration.
"""

from typing import NamedTuple, Optional

from src.arrival_engine.train import advance
from src.core_model.switch_graph import Configuration, SwitchGraph, VertexId


class Probe(NamedTuple):
    """arrived is None when the budget ran out first."""

    arrived: Optional[bool]
    steps: int
    witness: Optional[Configuration] = None


def detect_hashset(
    graph: SwitchGraph, origin: VertexId, destination: VertexId, budget: int
) -> Probe:
    switches = bytearray(graph.n)
    position = origin
    steps = 0
    seen = set()
    while True:
        if position == destination:
            return Probe(True, steps)
        key = (position, bytes(switches))
        if key in seen:
            return Probe(False, steps, Configuration(position=key[0], switches=key[1]))
        if steps >= budget:
            return Probe(None, steps)
        seen.add(key)
        position = advance(graph, switches, position)
        steps += 1


def detect_brent(
    graph: SwitchGraph, origin: VertexId, destination: VertexId, budget: int
) -> Probe:
    switches = bytearray(graph.n)
    position = origin
    steps = 0
    if position == destination:
        return Probe(True, steps)

    # saved configuration ("tortoise"); the live run is the hare
    saved_position, saved_switches = position, bytes(switches)
    power = lam = 1
    while steps < budget:
        position = advance(graph, switches, position)
        steps += 1
        if position == destination:
            return Probe(True, steps)
        if position == saved_position and switches == saved_switches:
            return _first_repeat(graph, origin, cycle_length=lam)
        if lam == power:
            saved_position, saved_switches = position, bytes(switches)
            power *= 2
            lam = 0
        lam += 1
    return Probe(None, steps)


def _first_repeat(graph: SwitchGraph, origin: VertexId, cycle_length: int) -> Probe:
    """
    Locate the first configuration on the cycle (index mu) with two runs
    cycle_length apart; the first recurrence happens at step mu + cycle_length.
    """
    lead_switches = bytearray(graph.n)
    lead = origin
    for _ in range(cycle_length):
        lead = advance(graph, lead_switches, lead)

    trail_switches = bytearray(graph.n)
    trail = origin
    mu = 0
    while not (trail == lead and trail_switches == lead_switches):
        trail = advance(graph, trail_switches, trail)
        lead = advance(graph, lead_switches, lead)
        mu += 1
    witness = Configuration(position=trail, switches=bytes(trail_switches))
    return Probe(False, mu + cycle_length, witness)
