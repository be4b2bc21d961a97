"""
Seeded random instance generators for the property suites.

Every generator takes either a seed or a numpy Generator; the same seed always
yields the same instance.
"""

from typing import List, Union

import numpy as np

from src.core_model.instances import DagInstance, DigicompInstance
from src.core_model.switch_graph import SwitchGraph, graph_from_maps

SeedLike = Union[int, np.random.Generator]


def _rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_dag(
    n: int, seed: SeedLike, max_degree: int = 4, max_threshold: int = 20
) -> DagInstance:
    """
    Random DAG built along a hidden topological order.

    Vertex at order position p only links to positions above p, with repeats
    allowed (parallel edges); a random permutation then hides the order.

    Args:
        n: Vertex count (>= 1)
        seed: Seed or Generator
        max_degree: Upper bound on out-degree
        max_threshold: Upper bound on k (k >= 1)

    Returns:
        DagInstance with source at order position 0 and a random sink
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = _rng(seed)
    order = rng.permutation(n)
    successors: List[List[int]] = [[] for _ in range(n)]
    for p in range(n - 1):
        degree = int(rng.integers(0, max_degree + 1))
        for q in rng.integers(p + 1, n, size=degree):
            successors[int(order[p])].append(int(order[q]))
    return DagInstance(
        successors=tuple(tuple(s) for s in successors),
        source=int(order[0]),
        sink=int(order[rng.integers(0, n)]),
        threshold=int(rng.integers(1, max_threshold + 1)),
    )


def random_acyclic_switch_graph(
    n: int, seed: SeedLike, self_loop_rate: float = 0.2, sink_rate: float = 0.1
) -> SwitchGraph:
    """
    Random acyclic switch graph whose every walk ends at a sink.

    Vertex n - 1 is always a sink; any other vertex is a sink with probability
    `sink_rate`, and otherwise exits to higher ids, with at most one of its two
    slots replaced by a self-loop. A ball therefore stops within 2n steps.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = _rng(seed)
    s0, s1 = [], []
    for v in range(n):
        if v == n - 1 or rng.random() < sink_rate:
            s0.append(v)
            s1.append(v)
            continue
        a, b = (int(x) for x in rng.integers(v + 1, n, size=2))
        if rng.random() < self_loop_rate:
            if rng.integers(2):
                a = v
            else:
                b = v
        s0.append(a)
        s1.append(b)
    return graph_from_maps(s0, s1)


def random_digicomp(n: int, seed: SeedLike, max_balls: int = 64) -> DigicompInstance:
    """Random acyclic graph, origin 0, random destination and ball count in [0, max_balls]."""
    rng = _rng(seed)
    graph = random_acyclic_switch_graph(n, rng)
    return DigicompInstance(
        graph=graph,
        origin=0,
        destination=int(rng.integers(0, n)),
        balls=int(rng.integers(0, max_balls + 1)),
    )
