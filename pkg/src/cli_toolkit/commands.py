"""
Command implementations behind the switchgraph CLI.

Each command takes the parsed arguments plus a CliConfig, writes its decision
output to stdout and returns the process exit code.
"""

import argparse
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional

import pandas as pd

from src.arrival_engine.run import run_arrival
from src.arrival_engine.train import trace_arrival
from src.cli_toolkit import reports
from src.cli_toolkit.generators import random_dag, random_digicomp
from src.cli_toolkit.suites import SUITES, run_suites
from src.config import Settings
from src.core_model.dot_export import export_dag_dot, export_dot
from src.core_model.instance_format import parse_instance, serialize_instance, write_instance
from src.core_model.instances import DagInstance, InstanceKind
from src.core_model.switch_graph import VertexId
from src.digicomp_engine.fast import run_digicomp_fast
from src.digicomp_engine.naive import run_digicomp_naive
from src.gadget_counters.counters import build_counter
from src.gadget_counters.harness import build_counter_harness
from src.reductions.certificate import ReductionCertificate, verify_certificate
from src.reductions.dagpaths_to_digicomp import reduce_dagpaths_to_digicomp
from src.reductions.digicomp_to_arrival import reduce_digicomp_to_arrival

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_FAILED = 4


@dataclass(frozen=True)
class CliConfig:
    """
    Resolved run configuration: CLI flags over environment settings over defaults.

    Attributes:
        command: Subcommand name
        fmt: 'text' or 'json'
        seed: Generator seed
        arrival_budget: Step budget for ARRIVAL runs
        naive_budget: Step budget for the naive Digicomp engine
        path_limit: Walk limit for brute-force path enumeration
    """

    command: str
    fmt: str
    seed: int
    arrival_budget: int
    naive_budget: int
    path_limit: int

    @classmethod
    def from_args(cls, args: argparse.Namespace, settings: Settings) -> "CliConfig":
        budget = getattr(args, "budget", None)
        seed = getattr(args, "seed", None)
        return cls(
            command=args.command,
            fmt=args.format,
            seed=settings.seed if seed is None else seed,
            arrival_budget=settings.arrival_budget if budget is None else budget,
            naive_budget=settings.naive_budget if budget is None else budget,
            path_limit=settings.path_limit,
        )


def _read(path: str, kind: Optional[InstanceKind] = None):
    logger.info(f"[LOADING] Loading instance from: {path}")
    return parse_instance(Path(path).read_bytes(), kind)


def _emit(text: str) -> None:
    print(text)


def cmd_sim_arrival(args: argparse.Namespace, config: CliConfig) -> int:
    instance = _read(args.file, InstanceKind.ARRIVAL)
    outcome = run_arrival(instance, budget=config.arrival_budget, detector=args.detector)
    _emit(reports.format_arrival(outcome, config.fmt))
    return EXIT_OK if outcome.decided else EXIT_BUDGET


def cmd_sim_digicomp(args: argparse.Namespace, config: CliConfig) -> int:
    instance = _read(args.file, InstanceKind.DIGICOMP)
    if args.engine == "naive":
        outcome = run_digicomp_naive(instance, step_budget=config.naive_budget)
    else:
        outcome = run_digicomp_fast(instance)
    _emit(reports.format_digicomp(instance, outcome, config.fmt))
    return EXIT_OK


def _counter_marks(size: int, ports) -> Dict[VertexId, str]:
    marks = {v: f"counter:{v}" for v in range(size)}
    marks[size] = f"port:{ports[0].value}"
    marks[size + 1] = f"port:{ports[1].value}"
    return marks


def cmd_gen_counter(args: argparse.Namespace, config: CliConfig) -> int:
    gadget = build_counter(args.target, args.kind)
    harness = build_counter_harness(gadget)
    out = write_instance(harness, args.out)
    dot_path = out.with_suffix(".dot")
    dot_path.write_text(
        export_dot(
            harness.graph,
            marks=_counter_marks(gadget.size, gadget.ports),
            name=f"{gadget.kind.value}_counter",
        )
    )
    logger.info(f"[OK] DOT saved to: {dot_path}")
    _emit(f"COUNTER {gadget.kind.value} {gadget.size} vertices")
    return EXIT_OK


def _certificate_path(out: Path) -> Path:
    return out.with_name(out.name + ".cert.json")


def cmd_reduce(args: argparse.Namespace, config: CliConfig) -> int:
    if args.source_kind == "digicomp":
        source = _read(args.file, InstanceKind.DIGICOMP)
        produced, certificate = reduce_digicomp_to_arrival(source)
    else:
        source = _read(args.file, InstanceKind.DAG)
        produced, certificate = reduce_dagpaths_to_digicomp(
            source, assignment_seed=args.assignment_seed
        )

    out = write_instance(produced, args.out)
    cert_path = _certificate_path(out)
    cert_path.write_text(certificate.to_json())
    logger.info(f"[OK] Certificate saved to: {cert_path}")
    if args.dot:
        dot_path = out.with_suffix(".dot")
        dot_path.write_text(
            export_dot(produced.graph, marks=certificate.role_marks(), name=certificate.reduction)
        )
        logger.info(f"[OK] DOT saved to: {dot_path}")
    _emit(reports.format_reduction(produced, certificate, config.fmt, out=str(out)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: CliConfig) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    report = run_suites(
        suites,
        config.seed,
        cases=args.cases,
        inject_fault=args.inject_fault,
        path_limit=config.path_limit,
    )
    _emit(reports.format_verification(report, config.fmt))

    counterexamples = report.counterexamples()
    if counterexamples:
        dump_dir = Path(args.dump_dir)
        dump_dir.mkdir(parents=True, exist_ok=True)
        for name, text in counterexamples.items():
            path = dump_dir / f"{name}.txt"
            path.write_text(text)
            logger.warning(f"[WARNING] Counterexample for {name} dumped to: {path}")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_gen_random(args: argparse.Namespace, config: CliConfig) -> int:
    if args.kind == "dag":
        instance = random_dag(args.n, config.seed)
    else:
        instance = random_digicomp(args.n, config.seed)
    if args.out:
        write_instance(instance, args.out)
        _emit(f"GENERATED {instance.kind.value} {args.out}")
    else:
        _emit(serialize_instance(instance).decode("utf-8").rstrip("\n"))
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace, config: CliConfig) -> int:
    instance = _read(args.file)
    if isinstance(instance, DagInstance):
        dot = export_dag_dot(instance.successors, instance.source, instance.sink)
    else:
        marks = None
        if args.cert:
            marks = ReductionCertificate.from_json(Path(args.cert).read_text()).role_marks()
        dot = export_dot(instance.graph, marks=marks, name=instance.kind.value)
    if args.out:
        Path(args.out).write_text(dot)
        logger.info(f"[OK] DOT saved to: {args.out}")
    else:
        _emit(dot.rstrip("\n"))
    return EXIT_OK


def cmd_trace(args: argparse.Namespace, config: CliConfig) -> int:
    instance = _read(args.file, InstanceKind.ARRIVAL)
    moves = trace_arrival(instance, args.steps)
    frame = pd.DataFrame(moves, columns=["position", "bit"])
    frame.insert(0, "step", range(len(frame)))
    frame.insert(2, "label", [instance.graph.label(v) or "" for v in frame["position"]])
    if config.fmt == reports.JSON:
        _emit(frame.to_json(orient="records", indent=2))
    else:
        _emit(frame.to_string(index=False))
    return EXIT_OK


def cmd_check_cert(args: argparse.Namespace, config: CliConfig) -> int:
    source = _read(args.source)
    produced = _read(args.produced)
    certificate = ReductionCertificate.from_json(Path(args.cert).read_text())
    problems = verify_certificate(source, produced, certificate)
    _emit(reports.format_certificate_check(problems, config.fmt))
    return EXIT_OK if not problems else EXIT_FAILED


COMMANDS = {
    "sim-arrival": cmd_sim_arrival,
    "sim-digicomp": cmd_sim_digicomp,
    "gen-counter": cmd_gen_counter,
    "reduce": cmd_reduce,
    "verify": cmd_verify,
    "gen-random": cmd_gen_random,
    "export-dot": cmd_export_dot,
    "trace": cmd_trace,
    "check-cert": cmd_check_cert,
}
