"""
Acyclicity in the switch-graph sense: no directed cycles other than self-loops.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import networkx as nx

from src.core_model.errors import NonAcyclicGraphError
from src.core_model.switch_graph import SwitchGraph, VertexId


@dataclass(frozen=True)
class AcyclicityResult:
    """Either `acyclic` is True, or `cycle` lists a vertex sequence closing on itself."""

    acyclic: bool
    cycle: Tuple[VertexId, ...] = ()


def build_digraph(n: int, edges: Iterable[Tuple[VertexId, VertexId]]) -> nx.DiGraph:
    """Directed graph on [0, n) with self-loops dropped; parallel edges collapse."""
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(n))
    digraph.add_edges_from((u, v) for u, v in edges if u != v)
    return digraph


def switch_digraph(graph: SwitchGraph) -> nx.DiGraph:
    return build_digraph(graph.n, ((u, v) for u, v, _ in graph.edges()))


def successor_digraph(successors: Sequence[Sequence[VertexId]]) -> nx.DiGraph:
    return build_digraph(
        len(successors), ((u, v) for u, succ in enumerate(successors) for v in succ)
    )


def _find_cycle(digraph: nx.DiGraph) -> Tuple[VertexId, ...]:
    try:
        cycle_edges = nx.find_cycle(digraph)
    except nx.NetworkXNoCycle:
        return ()
    return tuple(u for u, _ in cycle_edges)


def check_acyclic(graph: SwitchGraph) -> AcyclicityResult:
    """
    Decide acyclicity of a switch graph.

    Args:
        graph: Any switch graph

    Returns:
        AcyclicityResult; when not acyclic the witness cycle verifies by edge-following
    """
    cycle = _find_cycle(switch_digraph(graph))
    return AcyclicityResult(acyclic=not cycle, cycle=cycle)


def _ordered(digraph: nx.DiGraph) -> Tuple[VertexId, ...]:
    if not nx.is_directed_acyclic_graph(digraph):
        raise NonAcyclicGraphError(_find_cycle(digraph))
    return tuple(nx.lexicographical_topological_sort(digraph))


def topological_order(graph: SwitchGraph) -> Tuple[VertexId, ...]:
    """Deterministic topological order of the self-loop-stripped graph."""
    return _ordered(switch_digraph(graph))


def successor_topological_order(
    successors: Sequence[Sequence[VertexId]],
) -> Tuple[VertexId, ...]:
    return _ordered(successor_digraph(successors))


def require_acyclic(graph: SwitchGraph) -> None:
    result = check_acyclic(graph)
    if not result.acyclic:
        raise NonAcyclicGraphError(result.cycle)
