"""
DAG path-count threshold -> Digicomp_EXP.

The DAG is split to out-degree <= 2 and unrolled into n layers. Dropping 2^(n-1)
balls at (s, 0) then delivers 2^(n-1-i) * c(v, i) balls to every layered vertex
(v, i), where c(v, i) counts the paths from (s, 0); in particular exactly
c(t, n-1) balls reach the designated vertex (t, n-1). A ball counter for k - 1
sits behind that vertex, so a ball reaches D iff there are at least k paths.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from src.core_model.errors import InstanceValidationError
from src.core_model.instances import DagInstance, DigicompInstance
from src.core_model.switch_graph import graph_from_maps
from src.digicomp_engine.ball_counts import DigicompOutcome
from src.digicomp_engine.fast import run_digicomp_fast
from src.gadget_counters.counters import Port, build_ball_counter
from src.reductions.certificate import ReductionCertificate, instance_digest
from src.reductions.dag_transforms import layer_dag, split_outdegree

logger = logging.getLogger(__name__)

REDUCTION_NAME = "dagpaths_to_digicomp"


def expected_digicomp_size(split_vertices: int, threshold: int) -> int:
    """n^2 layered copies, F, D, and floor(log2(k - 1)) + 1 counter nodes when k >= 2."""
    counter = (threshold - 1).bit_length() if threshold >= 2 else 0
    return split_vertices * split_vertices + 2 + counter


def reduce_dagpaths_to_digicomp(
    dag: DagInstance, assignment_seed: Optional[int] = None
) -> Tuple[DigicompInstance, ReductionCertificate]:
    """
    Compile a path-count threshold question into a Digicomp instance.

    Layout: layered copy (v, i) at id i * n + v, then F, then the ball counter
    (entry first), then D. Out-degree-2 vertices put the lower target id on s0;
    with `assignment_seed` set, each such pair is swapped by a coin flip instead.

    Args:
        dag: DAG instance with threshold k >= 1
        assignment_seed: Optional seed for a random s0/s1 assignment

    Returns:
        (Digicomp instance with 2^(n-1) balls, certificate)

    Raises:
        InstanceValidationError: k = 0
    """
    k = dag.threshold
    if k < 1:
        raise InstanceValidationError(
            "threshold k = 0 holds vacuously; answer it without reducing"
        )

    split = split_outdegree(dag)
    layered = layer_dag(split)
    n = split.n
    size = n * n
    final = size
    counter = build_ball_counter(k - 1) if k >= 2 else None
    counter_offset = final + 1
    done = counter_offset + (counter.size if counter is not None else 0)
    target = layered.sink
    entry = counter_offset + counter.entry if counter is not None else done

    rng = np.random.default_rng(assignment_seed) if assignment_seed is not None else None
    s0: List[int] = []
    s1: List[int] = []
    for u, succ in enumerate(layered.successors):
        if u == target:
            a = b = entry
        elif len(succ) == 2:
            a, b = sorted(succ)
            if rng is not None and rng.integers(2):
                a, b = b, a
        elif len(succ) == 1:
            a, b = succ[0], final
        else:
            a = b = final
        s0.append(a)
        s1.append(b)

    s0.append(final)
    s1.append(final)
    if counter is not None:
        counter_s0, counter_s1 = counter.resolve(counter_offset, {Port.F: final, Port.D: done})
        s0 += counter_s0
        s1 += counter_s1
    s0.append(done)
    s1.append(done)

    labels = tuple(f"{u % n}@{u // n}" for u in range(size)) + ("F",)
    roles = tuple(
        f"target:{u % n}@{u // n}" if u == target else f"layer:{u % n}@{u // n}"
        for u in range(size)
    ) + ("F",)
    if counter is not None:
        labels += counter.labels
        roles += tuple(f"counter:{j}" for j in range(counter.size))
    labels += ("D",)
    roles += ("D",)

    balls = 1 << (n - 1)
    produced = DigicompInstance(
        graph=graph_from_maps(s0, s1, labels),
        origin=layered.source,
        destination=done,
        balls=balls,
    )
    certificate = ReductionCertificate(
        reduction=REDUCTION_NAME,
        source_digest=instance_digest(dag),
        produced_digest=instance_digest(produced),
        roles=roles,
        parameters={
            "source_vertices": dag.n,
            "split_vertices": n,
            "threshold": k,
            "balls": balls,
            "target_vertex": target,
            "counter_entry": entry,
            "counter_size": counter.size if counter is not None else 0,
            "F": final,
            "D": done,
            "produced_vertices": produced.graph.n,
        },
    )
    logger.info(
        f"[OK] Reduced {dag.n}-vertex DAG (k={k}) to {produced.graph.n}-vertex "
        f"Digicomp instance with 2^{n - 1} balls"
    )
    return produced, certificate


def evaluate_dagpaths_reduction(
    produced: DigicompInstance, certificate: ReductionCertificate
) -> DigicompOutcome:
    """
    Run the fast engine on a produced instance, asserting exact halving.

    Every layered vertex below the last layer must receive an even number of
    balls; an odd count raises InvariantViolationError.
    """
    n = certificate.parameters["split_vertices"]
    below_last_layer = range((n - 1) * n)
    return run_digicomp_fast(produced, expect_even=below_last_layer)
