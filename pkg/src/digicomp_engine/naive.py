"""
Naive Digicomp: drop the balls one at a time under the train step rule.

This is the oracle for the fast evaluator, not a workhorse.
"""

import logging
from typing import List, Optional

from src.arrival_engine.train import advance
from src.config import DEFAULT_NAIVE_BUDGET
from src.core_model.acyclicity import require_acyclic
from src.core_model.errors import BudgetExhaustedError
from src.core_model.instances import DigicompInstance
from src.digicomp_engine.ball_counts import BallCounts, DigicompOutcome

logger = logging.getLogger(__name__)


def run_digicomp_naive(
    instance: DigicompInstance, step_budget: Optional[int] = None
) -> DigicompOutcome:
    """
    Simulate every ball until it stops at a sink.

    Switch states persist from one ball to the next. A ball standing on a sink
    stops without toggling it.

    Args:
        instance: Digicomp instance (acyclic graph)
        step_budget: Limit on total steps over all balls (default 10^6)

    Returns:
        DigicompOutcome with exact arrival counts

    Raises:
        BudgetExhaustedError: budget reached before the last ball stopped
        NonAcyclicGraphError: graph has a non-self-loop cycle
    """
    budget = DEFAULT_NAIVE_BUDGET if step_budget is None else step_budget
    graph = instance.graph
    require_acyclic(graph)
    switches = bytearray(graph.n)
    arrivals = [0] * graph.n
    steps = 0
    if graph.is_sink(instance.origin):
        # no ball ever leaves the origin
        arrivals[instance.origin] = instance.balls
        return _outcome(instance, arrivals, switches, steps)
    if instance.balls > budget:
        # every ball takes at least one step, so the loop would stop at the budget
        raise BudgetExhaustedError(budget, budget)

    for _ in range(instance.balls):
        position = instance.origin
        arrivals[position] += 1
        while not graph.is_sink(position):
            if steps >= budget:
                raise BudgetExhaustedError(steps, budget)
            target = advance(graph, switches, position)
            steps += 1
            if target != position:
                arrivals[target] += 1
            position = target

    return _outcome(instance, arrivals, switches, steps)


def _outcome(
    instance: DigicompInstance, arrivals: List[int], switches: bytearray, steps: int
) -> DigicompOutcome:
    counts = BallCounts(arrivals=tuple(arrivals), final_switches=bytes(switches))
    reached = arrivals[instance.destination] >= 1
    logger.info(
        f"[OK] Naive run: {instance.balls} balls, {steps} steps, "
        f"destination {'reached' if reached else 'not reached'}"
    )
    return DigicompOutcome(reached=reached, counts=counts, steps=steps)
