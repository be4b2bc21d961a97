"""
Graphviz DOT rendering of switch graphs.

Solid edges are s0, dashed edges are s1, matching the usual counter drawings.
"""

from typing import Mapping, Optional, Sequence

from src.core_model.switch_graph import SwitchGraph, VertexId

# Fill colours keyed on the role prefix of a mark ("counter:2" -> "counter")
ROLE_COLORS = {
    "counter": "lightblue",
    "layer": "white",
    "target": "gold",
    "original": "white",
    "F": "lightgrey",
    "D": "palegreen",
    "port": "lightyellow",
    "tap": "lightyellow",
}


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def export_dot(
    graph: SwitchGraph,
    marks: Optional[Mapping[VertexId, str]] = None,
    name: str = "switchgraph",
) -> str:
    """
    Render a switch graph as DOT text.

    Args:
        graph: Graph to render
        marks: Optional role or port annotation per vertex, shown under the label
            and used to pick a fill colour
        name: Graph name in the DOT header

    Returns:
        DOT source with one node per vertex and exactly 2n edges
    """
    marks = marks or {}
    out = [f"digraph {_quote(name)} {{", "  node [shape=circle];"]
    for v in range(graph.n):
        text = graph.label(v) or str(v)
        attrs = []
        mark = marks.get(v)
        if mark:
            text = f"{text}\\n{mark}"
            color = ROLE_COLORS.get(mark.split(":", 1)[0])
            if color:
                attrs += ["style=filled", f"fillcolor={color}"]
        attrs.insert(0, f"label={_quote(text)}")
        out.append(f"  {v} [{', '.join(attrs)}];")
    for source, target, bit in graph.edges():
        style = "dashed" if bit else "solid"
        out.append(f"  {source} -> {target} [style={style}];")
    out.append("}")
    return "\n".join(out) + "\n"


def export_dag_dot(
    successors: Sequence[Sequence[VertexId]],
    source: VertexId,
    sink: VertexId,
    name: str = "dag",
) -> str:
    """Render DAG successor lists as DOT; every parallel edge is drawn separately."""
    out = [f"digraph {_quote(name)} {{", "  node [shape=circle];"]
    for v in range(len(successors)):
        attrs = [f"label={_quote(str(v))}"]
        if v in (source, sink):
            attrs += ["style=filled", f"fillcolor={ROLE_COLORS['target' if v == sink else 'port']}"]
        out.append(f"  {v} [{', '.join(attrs)}];")
    for v, succ in enumerate(successors):
        for w in succ:
            out.append(f"  {v} -> {w};")
    out.append("}")
    return "\n".join(out) + "\n"
