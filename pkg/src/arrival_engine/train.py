"""
The train step rule: leave v along s_i(v), where i is v's switch bit, then toggle v.
"""

from typing import List, MutableSequence, Tuple

from src.core_model.instances import ArrivalInstance
from src.core_model.switch_graph import Configuration, SwitchGraph, VertexId


def advance(graph: SwitchGraph, switches: MutableSequence[int], position: VertexId) -> VertexId:
    """Apply one step in place on a mutable switch buffer and return the new position."""
    bit = switches[position]
    switches[position] = bit ^ 1
    return graph.successor(position, bit)


def step(config: Configuration, graph: SwitchGraph) -> Configuration:
    """
    Pure single step.

    Args:
        config: Current configuration, valid for `graph`
        graph: Switch graph

    Returns:
        Configuration with the train at s_i(position) and only that switch flipped

    Raises:
        InstanceValidationError: config does not fit the graph
    """
    config.validate(graph)
    switches = bytearray(config.switches)
    position = advance(graph, switches, config.position)
    return Configuration(position=position, switches=bytes(switches))


def trace_arrival(instance: ArrivalInstance, max_steps: int) -> List[Tuple[VertexId, int]]:
    """
    First `max_steps` moves of the unique run, as (position, switch bit consumed).

    The trace does not stop at the destination; it is a plain prefix of the run.
    """
    graph = instance.graph
    switches = bytearray(graph.n)
    position = instance.origin
    trace = []
    for _ in range(max_steps):
        trace.append((position, switches[position]))
        position = advance(graph, switches, position)
    return trace
