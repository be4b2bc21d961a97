"""
Text and json renderings of command results.

Both formats carry the same decision content. Naturals in json are exact
decimal strings.
"""

import json
from typing import Any, Dict, Optional

import pandas as pd

from src.arrival_engine.run import RunOutcome, Verdict
from src.cli_toolkit.suites import VerificationReport
from src.core_model.decimal_text import int_to_decimal
from src.core_model.instances import DigicompInstance, Instance
from src.digicomp_engine.ball_counts import DigicompOutcome
from src.reductions.certificate import ReductionCertificate

TEXT = "text"
JSON = "json"
FORMATS = (TEXT, JSON)


def _dump(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2)


def format_arrival(outcome: RunOutcome, fmt: str = TEXT) -> str:
    if fmt == JSON:
        payload: Dict[str, Any] = {
            "verdict": outcome.verdict.value,
            "steps": int_to_decimal(outcome.steps),
        }
        if outcome.verdict == Verdict.DIVERGES:
            # steps is the step at which the witness recurs
            payload["witness"] = {
                "position": outcome.witness.position,
                "switches": outcome.witness.bitstring(),
            }
        return _dump(payload)
    if outcome.verdict == Verdict.ARRIVES:
        return f"ARRIVES {outcome.steps}"
    if outcome.verdict == Verdict.DIVERGES:
        return "DIVERGES"
    return f"UNDECIDED {outcome.steps}"


def counts_frame(instance: DigicompInstance, outcome: DigicompOutcome) -> pd.DataFrame:
    """Per-vertex arrivals (exact decimals) and final switch bits."""
    graph, n = instance.graph, outcome.counts.n
    return pd.DataFrame(
        {
            "vertex": list(range(n)),
            "label": [graph.label(v) or "" for v in range(n)],
            "arrivals": [int_to_decimal(c) for c in outcome.counts.arrivals],
            "switch": list(outcome.counts.final_switches),
        }
    )


def format_digicomp(instance: DigicompInstance, outcome: DigicompOutcome, fmt: str = TEXT) -> str:
    if fmt == JSON:
        return _dump(
            {
                "verdict": outcome.verdict,
                "counts": {
                    str(v): int_to_decimal(c) for v, c in enumerate(outcome.counts.arrivals)
                },
                "final_switches": "".join(str(b) for b in outcome.counts.final_switches),
            }
        )
    table = counts_frame(instance, outcome).to_string(index=False)
    return f"{outcome.verdict.upper()}\n{table}"


def format_reduction(
    produced: Instance, certificate: ReductionCertificate, fmt: str = TEXT, out: Optional[str] = None
) -> str:
    n = certificate.parameters["produced_vertices"]
    if fmt == JSON:
        return _dump(
            {
                "verdict": "reduced",
                "kind": produced.kind.value,
                "vertices": int_to_decimal(n),
                "out": out,
                "certificate": json.loads(certificate.to_json()),
            }
        )
    return f"REDUCED {certificate.reduction} {n} vertices"


def format_verification(report: VerificationReport, fmt: str = TEXT) -> str:
    frame = report.to_frame()
    verdict = "pass" if report.passed else "fail"
    if fmt == JSON:
        return _dump(
            {
                "verdict": verdict,
                "seed": int_to_decimal(report.seed),
                "inject_fault": report.inject_fault,
                "properties": [
                    {
                        "suite": row.suite,
                        "property": row.property,
                        "cases": int_to_decimal(int(row.cases)),
                        "failures": int_to_decimal(int(row.failures)),
                        "status": row.status,
                    }
                    for row in frame.itertuples(index=False)
                ],
            }
        )
    return f"{frame.to_string(index=False)}\n{verdict.upper()}"


def format_certificate_check(problems, fmt: str = TEXT) -> str:
    if fmt == JSON:
        return _dump({"verdict": "valid" if not problems else "invalid", "problems": list(problems)})
    if not problems:
        return "VALID"
    return "INVALID\n" + "\n".join(f"  {p}" for p in problems)
