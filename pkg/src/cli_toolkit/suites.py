"""
Verification suites: counter laws, engine agreement and end-to-end reductions.

Each suite draws its cases from numpy.random.default_rng(seed), so a report is
a pure function of (suite, seed, cases, inject_fault).
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Union

import numpy as np
import pandas as pd

from src.arrival_engine.run import Verdict, run_arrival
from src.cli_toolkit.generators import random_dag, random_digicomp
from src.config import DEFAULT_PATH_LIMIT
from src.core_model.instance_format import serialize_instance
from src.core_model.instances import ArrivalInstance, DigicompInstance, Instance
from src.core_model.switch_graph import SwitchGraph
from src.digicomp_engine.fast import run_digicomp_fast
from src.digicomp_engine.naive import run_digicomp_naive
from src.digicomp_engine.parity import parity_diagnostic
from src.gadget_counters.counters import (
    Port,
    build_ball_counter,
    build_train_counter,
    build_train_counter_recursive,
    counter_size,
)
from src.gadget_counters.harness import (
    counter_exit_trace,
    first_exit_through,
    follows_train_law,
)
from src.reductions.certificate import verify_certificate
from src.reductions.dag_transforms import layer_dag, split_outdegree
from src.reductions.dagpaths_to_digicomp import (
    evaluate_dagpaths_reduction,
    expected_digicomp_size,
    reduce_dagpaths_to_digicomp,
)
from src.reductions.digicomp_to_arrival import expected_arrival_size, reduce_digicomp_to_arrival
from src.reductions.path_counting import (
    count_paths_bruteforce,
    count_paths_dp,
    meets_threshold,
)

logger = logging.getLogger(__name__)

SUITES = ("counters", "engines", "prop1", "prop2", "compose", "parity")

DEFAULT_CASES = {
    "counters": 4096,
    "engines": 500,
    "prop1": 200,
    "prop2": 200,
    "compose": 50,
    "parity": 200,
}

# exhaustive train traces stop here; the size law runs over every case
TRACE_LIMIT = 1024
# ball thresholds are checked for every T up to here
BALL_THRESHOLD_LIMIT = 1 << 12
# random train traces: up to this many draws of T in [1, RANDOM_TRACE_MAX]
RANDOM_TRACE_DRAWS = 100
RANDOM_TRACE_MAX = 1 << 20


@dataclass
class PropertyCheck:
    """Tally for one property: cases run, failures, first counterexample."""

    suite: str
    name: str
    cases: int = 0
    failures: int = 0
    counterexample: Optional[str] = None

    def record(self, ok: bool, instance: Optional[Instance] = None, note: str = "") -> None:
        self.cases += 1
        if ok:
            return
        self.failures += 1
        if self.counterexample is None:
            text = serialize_instance(instance).decode("utf-8") if instance is not None else ""
            self.counterexample = f"# {note}\n{text}" if note else text

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class VerificationReport:
    seed: int
    inject_fault: bool = False
    checks: List[PropertyCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "suite": c.suite,
                    "property": c.name,
                    "cases": c.cases,
                    "failures": c.failures,
                    "status": "pass" if c.passed else "FAIL",
                }
                for c in self.checks
            ],
            columns=["suite", "property", "cases", "failures", "status"],
        )

    def counterexamples(self) -> Dict[str, str]:
        return {
            f"{c.suite}-{c.name}": c.counterexample
            for c in self.checks
            if c.counterexample is not None
        }


def inject_destination_fault(
    instance: Union[ArrivalInstance, DigicompInstance],
) -> Union[ArrivalInstance, DigicompInstance]:
    """Turn every edge into the destination into a self-loop on its source vertex."""
    graph = instance.graph
    t = instance.destination
    s0 = tuple(v if (w == t and v != t) else w for v, w in enumerate(graph.s0))
    s1 = tuple(v if (w == t and v != t) else w for v, w in enumerate(graph.s1))
    mutated = SwitchGraph(s0=s0, s1=s1, labels=graph.labels)
    if isinstance(instance, DigicompInstance):
        return DigicompInstance(mutated, instance.origin, t, instance.balls)
    return ArrivalInstance(mutated, instance.origin, t)


def _checks(suite: str, *names: str) -> Dict[str, PropertyCheck]:
    return {name: PropertyCheck(suite=suite, name=name) for name in names}


def _train_law_holds(target: int) -> bool:
    return follows_train_law(build_train_counter(target), periods=2)


def _ball_threshold_holds(target: int) -> bool:
    return first_exit_through(build_ball_counter(target), Port.D, target + 1) == target + 1


def suite_counters(
    rng: np.random.Generator, cases: int, inject_fault: bool, path_limit: int = DEFAULT_PATH_LIMIT
) -> List[PropertyCheck]:
    checks = _checks(
        "counters", "size_law", "train_trace", "recursive_agrees", "ball_threshold", "figures"
    )
    for target in range(1, cases + 1):
        size = counter_size(target)
        train, ball = build_train_counter(target), build_ball_counter(target)
        checks["size_law"].record(train.size == size and ball.size == size, note=f"T={target}")
        recursive = build_train_counter_recursive(target)
        agrees = (recursive.s0, recursive.s1) == (train.s0, train.s1)
        if target <= TRACE_LIMIT:
            entries = 2 * (target + 1)
            agrees = agrees and (
                counter_exit_trace(recursive, entries) == counter_exit_trace(train, entries)
            )
        checks["recursive_agrees"].record(agrees, note=f"T={target}")

    trace_targets = list(range(1, min(cases, TRACE_LIMIT) + 1))
    draws = min(RANDOM_TRACE_DRAWS, max(1, cases // 40))
    trace_targets += [int(t) for t in rng.integers(1, RANDOM_TRACE_MAX + 1, size=draws)]
    for target in trace_targets:
        checks["train_trace"].record(_train_law_holds(target), note=f"T={target}")
    for target in range(1, min(cases, BALL_THRESHOLD_LIMIT) + 1):
        checks["ball_threshold"].record(_ball_threshold_holds(target), note=f"T={target}")

    figure16 = build_train_counter(16)
    checks["figures"].record(
        _train_law_holds(16) and figure16.s0 == (Port.A, 0, 0, 0, 0), note="T=16"
    )
    figure22 = build_train_counter(22)
    checks["figures"].record(
        _train_law_holds(22) and figure22.s0 == (Port.A, 0, Port.A, Port.A, 0), note="T=22"
    )
    return list(checks.values())


def suite_engines(
    rng: np.random.Generator, cases: int, inject_fault: bool, path_limit: int = DEFAULT_PATH_LIMIT
) -> List[PropertyCheck]:
    checks = _checks("engines", "naive_equals_fast")
    for _ in range(cases):
        instance = random_digicomp(int(rng.integers(1, 13)), rng, max_balls=64)
        checked = inject_destination_fault(instance) if inject_fault else instance
        naive = run_digicomp_naive(checked)
        fast = run_digicomp_fast(instance)
        checks["naive_equals_fast"].record(naive == fast, instance)
    return list(checks.values())


def suite_prop1(
    rng: np.random.Generator, cases: int, inject_fault: bool, path_limit: int = DEFAULT_PATH_LIMIT
) -> List[PropertyCheck]:
    checks = _checks("prop1", "verdict_preserved", "size_bound", "certificate")
    for _ in range(cases):
        instance = random_digicomp(int(rng.integers(1, 11)), rng, max_balls=32)
        produced, certificate = reduce_digicomp_to_arrival(instance)
        checks["size_bound"].record(
            produced.graph.n == expected_arrival_size(instance), instance
        )
        checks["certificate"].record(
            not verify_certificate(instance, produced, certificate), instance
        )
        if inject_fault:
            produced = inject_destination_fault(produced)
        arrives = run_arrival(produced).verdict == Verdict.ARRIVES
        checks["verdict_preserved"].record(
            arrives == run_digicomp_fast(instance).reached, instance
        )
    return list(checks.values())


def suite_prop2(
    rng: np.random.Generator, cases: int, inject_fault: bool, path_limit: int = DEFAULT_PATH_LIMIT
) -> List[PropertyCheck]:
    checks = _checks(
        "prop2",
        "oracles_agree",
        "split_preserves_paths",
        "layer_preserves_paths",
        "verdict_preserved",
        "counter_entry_count",
        "assignment_independent",
        "size_bound",
        "certificate",
    )
    for _ in range(cases):
        dag = random_dag(int(rng.integers(1, 9)), rng, max_degree=4, max_threshold=20)
        paths = count_paths_bruteforce(dag, limit=path_limit)
        checks["oracles_agree"].record(paths == count_paths_dp(dag), dag)
        split = split_outdegree(dag)
        checks["split_preserves_paths"].record(
            count_paths_bruteforce(split, limit=path_limit) == paths, dag
        )
        checks["layer_preserves_paths"].record(count_paths_dp(layer_dag(split)) == paths, dag)

        produced, certificate = reduce_dagpaths_to_digicomp(dag)
        checks["size_bound"].record(
            produced.graph.n == expected_digicomp_size(split.n, dag.threshold), dag
        )
        checks["certificate"].record(not verify_certificate(dag, produced, certificate), dag)
        if inject_fault:
            produced = inject_destination_fault(produced)
        outcome = evaluate_dagpaths_reduction(produced, certificate)
        entry = certificate.parameters["counter_entry"]
        checks["verdict_preserved"].record(outcome.reached == (paths >= dag.threshold), dag)
        # with k = 1 the entry is D itself, which keeps the arrivals
        checks["counter_entry_count"].record(outcome.counts[entry] == paths, dag)

        swapped, swapped_cert = reduce_dagpaths_to_digicomp(
            dag, assignment_seed=int(rng.integers(0, 2**32))
        )
        other = evaluate_dagpaths_reduction(swapped, swapped_cert)
        checks["assignment_independent"].record(
            other.reached == (paths >= dag.threshold) and other.counts[entry] == paths, dag
        )
    return list(checks.values())


def suite_compose(
    rng: np.random.Generator, cases: int, inject_fault: bool, path_limit: int = DEFAULT_PATH_LIMIT
) -> List[PropertyCheck]:
    checks = _checks("compose", "verdict_preserved", "size_bound")
    for _ in range(cases):
        # out-degree <= 2 keeps 2^(n-1) small enough for train simulation
        dag = random_dag(int(rng.integers(1, 7)), rng, max_degree=2, max_threshold=8)
        digicomp, _ = reduce_dagpaths_to_digicomp(dag)
        arrival, _ = reduce_digicomp_to_arrival(digicomp)
        checks["size_bound"].record(
            arrival.graph.n == expected_arrival_size(digicomp), dag
        )
        if inject_fault:
            arrival = inject_destination_fault(arrival)
        arrives = run_arrival(arrival).verdict == Verdict.ARRIVES
        checks["verdict_preserved"].record(
            arrives == meets_threshold(dag), dag
        )
    return list(checks.values())


def suite_parity(
    rng: np.random.Generator, cases: int, inject_fault: bool, path_limit: int = DEFAULT_PATH_LIMIT
) -> List[PropertyCheck]:
    checks = _checks("parity", "target_switch_is_path_parity")
    for _ in range(cases):
        dag = random_dag(int(rng.integers(1, 9)), rng, max_degree=4, max_threshold=20)
        produced, certificate = reduce_dagpaths_to_digicomp(dag)
        if inject_fault:
            produced = inject_destination_fault(produced)
        counts = run_digicomp_fast(produced).counts
        target = certificate.parameters["target_vertex"]
        checks["target_switch_is_path_parity"].record(
            parity_diagnostic(counts, target) == count_paths_dp(dag) % 2, dag
        )
    return list(checks.values())


SuiteRunner = Callable[[np.random.Generator, int, bool, int], List[PropertyCheck]]

_RUNNERS: Dict[str, SuiteRunner] = {
    "counters": suite_counters,
    "engines": suite_engines,
    "prop1": suite_prop1,
    "prop2": suite_prop2,
    "compose": suite_compose,
    "parity": suite_parity,
}


def run_suite(
    suite: str,
    seed: int,
    cases: Optional[int] = None,
    inject_fault: bool = False,
    path_limit: int = DEFAULT_PATH_LIMIT,
) -> VerificationReport:
    """
    Run one verification suite.

    Args:
        suite: One of SUITES
        seed: Generator seed
        cases: Case count (suite default when None); for 'counters' the
            exhaustive range of T
        inject_fault: Mutate every produced instance so its destination is
            unreachable; the suite is then expected to report failures

    Returns:
        VerificationReport with one PropertyCheck per property
    """
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    cases = DEFAULT_CASES[suite] if cases is None else cases
    logger.info(f"[PROCESSING] Suite {suite}: {cases} cases, seed {seed}")
    rng = np.random.default_rng(seed)
    report = VerificationReport(seed=seed, inject_fault=inject_fault)
    report.checks.extend(_RUNNERS[suite](rng, cases, inject_fault, path_limit))
    status = "[OK]" if report.passed else "[ERROR]"
    logger.info(f"{status} Suite {suite} finished")
    return report


def run_suites(
    suites: Sequence[str],
    seed: int,
    cases: Optional[int] = None,
    inject_fault: bool = False,
    path_limit: int = DEFAULT_PATH_LIMIT,
) -> VerificationReport:
    report = VerificationReport(seed=seed, inject_fault=inject_fault)
    for suite in suites:
        report.checks.extend(run_suite(suite, seed, cases, inject_fault, path_limit).checks)
    return report
