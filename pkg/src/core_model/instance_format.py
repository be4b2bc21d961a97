"""
Line-oriented instance text format.

    switchgraph v1 <arrival|digicomp|dag>
    n <count>
    v <id> <s0-target> <s1-target> [label]      (dag: v <id> <succ-count> <succ>...)
    s <id>
    t <id>
    balls <decimal>                               (digicomp only)
    k <decimal>                                   (dag only)

'#' starts a comment. Canonical text lists the fields in exactly this order,
vertices ascending, and ends with a newline.
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from src.core_model.decimal_text import decimal_to_int, int_to_decimal, is_decimal
from src.core_model.errors import InstanceParseError
from src.core_model.instances import (
    ArrivalInstance,
    DagInstance,
    DigicompInstance,
    Instance,
    InstanceKind,
)
from src.core_model.switch_graph import SwitchGraph

logger = logging.getLogger(__name__)

MAGIC = "switchgraph"
VERSION = "v1"

_TOKEN = re.compile(r"\S+")

# (token, column)
_Tokens = List[Tuple[str, int]]


def _tokenize(line: str) -> _Tokens:
    body = line.split("#", 1)[0]
    return [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(body)]


def _natural(token: Tuple[str, int], line_no: int, what: str) -> int:
    text, column = token
    if not is_decimal(text):
        raise InstanceParseError(f"expected a decimal {what}, got {text!r}", line_no, column)
    return decimal_to_int(text)


def _vertex(token: Tuple[str, int], line_no: int, n: int, what: str) -> int:
    value = _natural(token, line_no, what)
    if value >= n:
        raise InstanceParseError(
            f"{what} {value} is not a vertex id in [0, {n})", line_no, token[1]
        )
    return value


def _coerce_kind(kind: Union[None, str, InstanceKind]) -> Optional[InstanceKind]:
    if kind is None or isinstance(kind, InstanceKind):
        return kind
    return InstanceKind(kind)


def parse_instance(
    text: Union[bytes, str], kind: Union[None, str, InstanceKind] = None
) -> Instance:
    """
    Parse and validate an instance.

    Args:
        text: UTF-8 bytes or an already decoded string
        kind: Expected kind; None accepts whatever the header declares

    Returns:
        ArrivalInstance, DigicompInstance or DagInstance

    Raises:
        InstanceParseError: grammar violations, dangling or duplicate vertices,
            missing fields, fields foreign to the kind
        InstanceValidationError: structural invariants (e.g. a cycle in a digicomp graph)
    """
    expected = _coerce_kind(kind)
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise InstanceParseError(f"input is not UTF-8 ({e.reason})", 1) from e

    lines = [(i, _tokenize(raw)) for i, raw in enumerate(text.splitlines(), 1)]
    lines = [(i, tokens) for i, tokens in lines if tokens]
    if not lines:
        raise InstanceParseError("empty input, expected header", 1)

    header_line, header = lines[0]
    if len(header) != 3 or header[0][0] != MAGIC:
        raise InstanceParseError(
            f"header must be '{MAGIC} {VERSION} <kind>'", header_line, header[0][1]
        )
    if header[1][0] != VERSION:
        raise InstanceParseError(
            f"unsupported format version {header[1][0]!r}", header_line, header[1][1]
        )
    try:
        declared = InstanceKind(header[2][0])
    except ValueError:
        raise InstanceParseError(
            f"unknown instance kind {header[2][0]!r}", header_line, header[2][1]
        ) from None
    if expected is not None and declared != expected:
        raise InstanceParseError(
            f"expected a {expected.value} instance, file declares {declared.value}",
            header_line,
            header[2][1],
        )

    scalars: Dict[str, Tuple[int, _Tokens]] = {}
    vertex_lines: List[Tuple[int, _Tokens]] = []
    allowed = {"n", "s", "t"}
    if declared == InstanceKind.DIGICOMP:
        allowed.add("balls")
    if declared == InstanceKind.DAG:
        allowed.add("k")

    for line_no, tokens in lines[1:]:
        key, column = tokens[0]
        if key == "v":
            vertex_lines.append((line_no, tokens))
        elif key in ("n", "s", "t", "balls", "k"):
            if key not in allowed:
                raise InstanceParseError(
                    f"field '{key}' is not allowed in a {declared.value} instance",
                    line_no,
                    column,
                )
            if key in scalars:
                raise InstanceParseError(f"field '{key}' given twice", line_no, column)
            if len(tokens) != 2:
                raise InstanceParseError(
                    f"field '{key}' takes exactly one value", line_no, column
                )
            scalars[key] = (line_no, tokens)
        else:
            raise InstanceParseError(f"unknown field {key!r}", line_no, column)

    missing = sorted(allowed - set(scalars))
    if missing:
        raise InstanceParseError(
            f"missing header field(s): {', '.join(missing)}", lines[-1][0] + 1
        )

    n_line, n_tokens = scalars["n"]
    n = _natural(n_tokens[1], n_line, "vertex count")
    if n < 1:
        raise InstanceParseError("vertex count must be at least 1", n_line, n_tokens[1][1])

    if declared == InstanceKind.DAG:
        rows = _parse_dag_vertices(vertex_lines, n)
    else:
        rows = _parse_switch_vertices(vertex_lines, n)

    seen = set(rows)
    if len(seen) != n:
        absent = next(v for v in range(n) if v not in seen)
        raise InstanceParseError(
            f"vertex {absent} has no 'v' line ({len(seen)} of {n} given)",
            lines[-1][0] + 1,
        )

    s_line, s_tokens = scalars["s"]
    t_line, t_tokens = scalars["t"]
    origin = _vertex(s_tokens[1], s_line, n, "origin")
    destination = _vertex(t_tokens[1], t_line, n, "destination")

    if declared == InstanceKind.DAG:
        k_line, k_tokens = scalars["k"]
        instance = DagInstance(
            successors=tuple(rows[v] for v in range(n)),
            source=origin,
            sink=destination,
            threshold=_natural(k_tokens[1], k_line, "threshold"),
        )
    else:
        labels = tuple(rows[v][2] for v in range(n))
        graph = SwitchGraph(
            s0=tuple(rows[v][0] for v in range(n)),
            s1=tuple(rows[v][1] for v in range(n)),
            labels=labels,
        )
        if declared == InstanceKind.DIGICOMP:
            b_line, b_tokens = scalars["balls"]
            instance = DigicompInstance(
                graph=graph,
                origin=origin,
                destination=destination,
                balls=_natural(b_tokens[1], b_line, "ball count"),
            )
        else:
            instance = ArrivalInstance(graph=graph, origin=origin, destination=destination)

    logger.debug(f"[OK] Parsed {declared.value} instance with {n} vertices")
    return instance


def _parse_switch_vertices(vertex_lines, n: int):
    rows = {}
    for line_no, tokens in vertex_lines:
        if len(tokens) not in (4, 5):
            raise InstanceParseError(
                "vertex line must be 'v <id> <s0> <s1> [label]'", line_no, tokens[0][1]
            )
        v = _vertex(tokens[1], line_no, n, "vertex id")
        if v in rows:
            raise InstanceParseError(f"duplicate vertex id {v}", line_no, tokens[1][1])
        s0 = _vertex(tokens[2], line_no, n, "s0 target")
        s1 = _vertex(tokens[3], line_no, n, "s1 target")
        label = tokens[4][0] if len(tokens) == 5 else None
        rows[v] = (s0, s1, label)
    return rows


def _parse_dag_vertices(vertex_lines, n: int):
    rows = {}
    for line_no, tokens in vertex_lines:
        if len(tokens) < 3:
            raise InstanceParseError(
                "vertex line must be 'v <id> <succ-count> <succ>...'", line_no, tokens[0][1]
            )
        v = _vertex(tokens[1], line_no, n, "vertex id")
        if v in rows:
            raise InstanceParseError(f"duplicate vertex id {v}", line_no, tokens[1][1])
        count = _natural(tokens[2], line_no, "successor count")
        if len(tokens) != 3 + count:
            raise InstanceParseError(
                f"vertex {v} declares {count} successors but lists {len(tokens) - 3}",
                line_no,
                tokens[2][1],
            )
        rows[v] = tuple(_vertex(tok, line_no, n, "successor") for tok in tokens[3:])
    return rows


def serialize_instance(instance: Instance) -> bytes:
    """Canonical UTF-8 text; parse_instance inverts it exactly."""
    lines = [f"{MAGIC} {VERSION} {instance.kind.value}"]
    if isinstance(instance, DagInstance):
        lines.append(f"n {instance.n}")
        for v, succ in enumerate(instance.successors):
            lines.append(" ".join(["v", str(v), str(len(succ))] + [str(w) for w in succ]))
        lines.append(f"s {instance.source}")
        lines.append(f"t {instance.sink}")
        lines.append(f"k {int_to_decimal(instance.threshold)}")
    else:
        graph = instance.graph
        lines.append(f"n {graph.n}")
        for v in range(graph.n):
            row = f"v {v} {graph.s0[v]} {graph.s1[v]}"
            label = graph.label(v)
            if label is not None:
                row += f" {label}"
            lines.append(row)
        lines.append(f"s {instance.origin}")
        lines.append(f"t {instance.destination}")
        if isinstance(instance, DigicompInstance):
            lines.append(f"balls {int_to_decimal(instance.balls)}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def read_instance(path: Union[str, Path], kind: Union[None, str, InstanceKind] = None) -> Instance:
    """Load an instance file."""
    path = Path(path)
    logger.info(f"[LOADING] Loading instance from: {path}")
    return parse_instance(path.read_bytes(), kind)


def write_instance(instance: Instance, path: Union[str, Path]) -> Path:
    """Write canonical text, creating parent directories as needed."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(serialize_instance(instance))
    logger.info(f"[OK] Instance saved to: {path}")
    return path
