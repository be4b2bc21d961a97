"""
Argument parsing and exit-code mapping for the switchgraph command line.

Exit codes: 0 ran and decided, 1 usage, 2 parse or validation error,
3 budget exhausted, 4 a verification suite or certificate check failed.
"""

import argparse
import logging
import sys
from typing import List, Optional

from src.cli_toolkit import reports
from src.cli_toolkit.commands import (
    COMMANDS,
    EXIT_BUDGET,
    EXIT_INVALID,
    EXIT_USAGE,
    CliConfig,
)
from src.cli_toolkit.suites import SUITES
from src.config import get_settings
from src.core_model.decimal_text import decimal_to_int, is_decimal
from src.core_model.errors import (
    BudgetExhaustedError,
    ConfigurationError,
    InstanceParseError,
    InstanceValidationError,
    InvariantViolationError,
    PathEnumerationLimitError,
)

logger = logging.getLogger(__name__)


class SwitchGraphArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _natural(text: str) -> int:
    if not is_decimal(text):
        raise argparse.ArgumentTypeError(f"expected a decimal natural, got {text!r}")
    return decimal_to_int(text)


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a value >= 1, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = SwitchGraphArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=reports.FORMATS, default=reports.TEXT, help="output format"
    )
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = SwitchGraphArgumentParser(
        prog="switchgraph",
        description="Simulate, generate and reduce switch-graph instances.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, parents=[common])

    p = command("sim-arrival", "run the train on an ARRIVAL instance")
    p.add_argument("file")
    p.add_argument("--budget", type=_natural, help="step budget")
    p.add_argument(
        "--detector", choices=["hashset", "constant_memory"], default="hashset"
    )

    p = command("sim-digicomp", "drop the balls of a Digicomp instance")
    p.add_argument("file")
    p.add_argument("--engine", choices=["naive", "fast"], default="fast")
    p.add_argument("--budget", type=_natural, help="step budget for the naive engine")

    p = command("gen-counter", "write a counter harness instance and its DOT")
    p.add_argument("target", type=_natural, help="the count T (>= 1)")
    p.add_argument("--kind", choices=["train", "ball"], default="train")
    p.add_argument("--out", required=True)

    p = command("reduce", "compile an instance into the next problem")
    p.add_argument("--from", dest="source_kind", choices=["digicomp", "dagpaths"], required=True)
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.add_argument("--dot", action="store_true", help="also write a role-coloured DOT file")
    p.add_argument(
        "--assignment-seed", type=_natural, default=None, help="random s0/s1 assignment (dagpaths)"
    )

    p = command("verify", "run verification suites")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--seed", type=_natural, default=None)
    p.add_argument("--cases", type=_positive, default=None)
    p.add_argument("--inject-fault", action="store_true")
    p.add_argument("--dump-dir", default="outputs/counterexamples")

    p = command("gen-random", "write a seeded random instance")
    p.add_argument("--kind", choices=["dag", "acyclic-switchgraph"], required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--seed", type=_natural, default=None)
    p.add_argument("--out", default=None)

    p = command("export-dot", "render an instance as DOT")
    p.add_argument("file")
    p.add_argument("--cert", default=None, help="certificate whose roles colour the nodes")
    p.add_argument("--out", default=None)

    p = command("trace", "print the first moves of an ARRIVAL run")
    p.add_argument("file")
    p.add_argument("--steps", type=_natural, default=20)

    p = command("check-cert", "check a reduction certificate")
    p.add_argument("source")
    p.add_argument("produced")
    p.add_argument("cert")
    return parser


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(message)s",
        stream=sys.stderr,
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one switchgraph command.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        Process exit code
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        settings = get_settings()
    except ConfigurationError as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return EXIT_INVALID
    _configure_logging("INFO" if args.verbose else settings.log_level)
    config = CliConfig.from_args(args, settings)

    try:
        return COMMANDS[args.command](args, config)
    except (BudgetExhaustedError, PathEnumerationLimitError) as e:
        logger.error(f"[ERROR] {e}")
        return EXIT_BUDGET
    except (InstanceParseError, InstanceValidationError, InvariantViolationError) as e:
        logger.error(f"[ERROR] {e}")
        return EXIT_INVALID
    except OSError as e:
        logger.error(f"[ERROR] Cannot access {e.filename}: {e.strerror}")
        return EXIT_INVALID
