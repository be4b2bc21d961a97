"""
Decide ARRIVAL instances by simulation.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from src.arrival_engine.cycle_detection import detect_brent, detect_hashset
from src.config import DEFAULT_ARRIVAL_BUDGET
from src.core_model.instances import ArrivalInstance
from src.core_model.switch_graph import Configuration

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    ARRIVES = "arrives"
    DIVERGES = "diverges"
    UNDECIDED = "undecided"


class Detector(str, Enum):
    HASHSET = "hashset"
    CONSTANT_MEMORY = "constant_memory"


@dataclass(frozen=True)
class RunOutcome:
    """
    Result of one run.

    arrives: `steps` is the first step at which the train stands on the destination.
    diverges: `witness` is the first configuration that recurs, at step `steps`.
    undecided: the budget ran out after `steps` steps.
    """

    verdict: Verdict
    steps: int
    witness: Optional[Configuration] = None

    @property
    def decided(self) -> bool:
        return self.verdict != Verdict.UNDECIDED


def run_arrival(
    instance: ArrivalInstance,
    budget: Optional[int] = None,
    detector: Union[Detector, str] = Detector.HASHSET,
) -> RunOutcome:
    """
    Run the train until it arrives, provably diverges, or exhausts the budget.

    Args:
        instance: ARRIVAL instance
        budget: Step limit (default 10^7)
        detector: 'hashset' stores every visited configuration; 'constant_memory'
            uses Brent's cycle finding and keeps O(1) configurations

    Returns:
        RunOutcome; both detectors return identical outcomes when they finish
    """
    budget = DEFAULT_ARRIVAL_BUDGET if budget is None else budget
    detector = Detector(detector)
    detect = detect_hashset if detector == Detector.HASHSET else detect_brent
    result = detect(instance.graph, instance.origin, instance.destination, budget)

    if result.arrived is None:
        logger.warning(f"[WARNING] Undecided after {result.steps} steps (budget {budget})")
        return RunOutcome(verdict=Verdict.UNDECIDED, steps=result.steps)
    if result.arrived:
        logger.info(f"[OK] Train arrives after {result.steps} steps")
        return RunOutcome(verdict=Verdict.ARRIVES, steps=result.steps)
    logger.info(f"[OK] Train diverges; configuration recurs at step {result.steps}")
    return RunOutcome(verdict=Verdict.DIVERGES, steps=result.steps, witness=result.witness)
