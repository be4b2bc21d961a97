"""
Hypothesis strategies for DAGs and acyclic switch graphs.
"""

from hypothesis import strategies as st

from src.core_model.instances import DagInstance, DigicompInstance
from src.core_model.switch_graph import SwitchGraph


@st.composite
def dags(draw, max_n: int = 8, max_degree: int = 5, max_threshold: int = 20):
    """DAGs whose edges always point to higher ids; parallel edges allowed."""
    n = draw(st.integers(1, max_n))
    successors = []
    for v in range(n):
        if v == n - 1:
            successors.append(())
            continue
        targets = draw(st.lists(st.integers(v + 1, n - 1), max_size=max_degree))
        successors.append(tuple(targets))
    return DagInstance(
        successors=tuple(successors),
        source=draw(st.integers(0, n - 1)),
        sink=draw(st.integers(0, n - 1)),
        threshold=draw(st.integers(1, max_threshold)),
    )


@st.composite
def acyclic_switch_graphs(draw, max_n: int = 10):
    n = draw(st.integers(1, max_n))
    s0, s1 = [], []
    for v in range(n):
        if v == n - 1 or draw(st.integers(0, 9)) == 0:
            s0.append(v)
            s1.append(v)
            continue
        a = draw(st.integers(v + 1, n - 1))
        b = draw(st.integers(v + 1, n - 1))
        loop = draw(st.sampled_from(["none", "s0", "s1"]))
        if loop == "s0":
            a = v
        elif loop == "s1":
            b = v
        s0.append(a)
        s1.append(b)
    return SwitchGraph(s0=tuple(s0), s1=tuple(s1))


@st.composite
def digicomp_instances(draw, max_n: int = 10, max_balls: int = 64):
    graph = draw(acyclic_switch_graphs(max_n=max_n))
    return DigicompInstance(
        graph=graph,
        origin=draw(st.integers(0, graph.n - 1)),
        destination=draw(st.integers(0, graph.n - 1)),
        balls=draw(st.integers(0, max_balls)),
    )
