"""
Digicomp_EXP -> ARRIVAL.

A train counter for T releases the train into the Digicomp graph T times: port A
feeds the original origin, every sink of the graph is rerouted back to the
counter entry C, and port B ends in a fresh self-looping vertex F. The train
then reaches t exactly when some ball would.
"""

import logging
from typing import Tuple

from src.core_model.acyclicity import require_acyclic
from src.core_model.instances import ArrivalInstance, DigicompInstance
from src.core_model.switch_graph import SwitchGraph, graph_from_maps
from src.gadget_counters.counters import Port, build_train_counter
from src.reductions.certificate import ReductionCertificate, instance_digest

logger = logging.getLogger(__name__)

REDUCTION_NAME = "digicomp_to_arrival"


def expected_arrival_size(instance: DigicompInstance) -> int:
    """|V| + floor(log2 T) + 2, or 2 for T = 0."""
    if instance.balls == 0:
        return 2
    return instance.graph.n + instance.balls.bit_length() + 1


def _zero_ball_instance(instance: DigicompInstance) -> Tuple[ArrivalInstance, ReductionCertificate]:
    # vertex 0 spins forever, vertex 1 is the unreachable destination
    graph = SwitchGraph(s0=(0, 1), s1=(0, 1), labels=("S", "T"))
    produced = ArrivalInstance(graph=graph, origin=0, destination=1)
    certificate = ReductionCertificate(
        reduction=REDUCTION_NAME,
        source_digest=instance_digest(instance),
        produced_digest=instance_digest(produced),
        roles=("stub:origin", "stub:destination"),
        parameters={"balls": 0, "source_vertices": instance.graph.n, "produced_vertices": 2},
    )
    return produced, certificate


def reduce_digicomp_to_arrival(
    instance: DigicompInstance,
) -> Tuple[ArrivalInstance, ReductionCertificate]:
    """
    Compile a Digicomp instance into an ARRIVAL instance with the same answer.

    Layout: original vertices keep their ids, the counter follows (entry C first),
    F is last. Sinks of the original graph are rewired to C on both slots.

    Args:
        instance: Acyclic Digicomp instance

    Returns:
        (ARRIVAL instance, certificate)

    Raises:
        NonAcyclicGraphError: the source graph has a non-self-loop cycle
    """
    graph = instance.graph
    require_acyclic(graph)
    if instance.balls == 0:
        logger.info("[INFO] Zero balls: emitting the two-vertex diverging instance")
        return _zero_ball_instance(instance)

    n = graph.n
    counter = build_train_counter(instance.balls)
    entry = n + counter.entry
    final = n + counter.size

    s0, s1 = list(graph.s0), list(graph.s1)
    for v in graph.sinks():
        s0[v] = s1[v] = entry
    counter_s0, counter_s1 = counter.resolve(n, {Port.A: instance.origin, Port.B: final})
    s0 += counter_s0 + [final]
    s1 += counter_s1 + [final]

    labels = tuple(graph.labels or (None,) * n) + counter.labels + ("F",)
    produced = ArrivalInstance(
        graph=graph_from_maps(s0, s1, labels),
        origin=entry,
        destination=instance.destination,
    )
    roles = (
        tuple(f"original:{v}" for v in range(n))
        + tuple(f"counter:{j}" for j in range(counter.size))
        + ("F",)
    )
    certificate = ReductionCertificate(
        reduction=REDUCTION_NAME,
        source_digest=instance_digest(instance),
        produced_digest=instance_digest(produced),
        roles=roles,
        parameters={
            "balls": instance.balls,
            "source_vertices": n,
            "counter_size": counter.size,
            "counter_entry": entry,
            "F": final,
            "produced_vertices": produced.graph.n,
        },
    )
    logger.info(
        f"[OK] Reduced {n}-vertex Digicomp instance to {produced.graph.n}-vertex ARRIVAL instance"
    )
    return produced, certificate
