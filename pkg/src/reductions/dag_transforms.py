"""
Shape-normalizing transforms on DAG instances.

Both transforms preserve the number of source -> sink paths exactly.
"""

import logging
from typing import List, Sequence

from src.core_model.errors import InstanceValidationError
from src.core_model.instances import DagInstance
from src.core_model.switch_graph import VertexId

logger = logging.getLogger(__name__)


def split_outdegree(dag: DagInstance) -> DagInstance:
    """
    Bring every out-degree down to at most 2.

    A vertex with d > 2 out-edges keeps its id as the root of a balanced binary
    routing tree with d leaves; the d - 2 inner vertices get new ids after the
    existing ones, allocated in ascending order of the split vertex and in
    pre-order inside each tree.

    Args:
        dag: DAG instance

    Returns:
        DAG with out-degree <= 2 and the same path count; the input itself when
        nothing needs splitting
    """
    if all(len(succ) <= 2 for succ in dag.successors):
        return dag

    successors: List[List[VertexId]] = [list(succ) for succ in dag.successors]

    def route(targets: Sequence[VertexId]) -> List[VertexId]:
        half = (len(targets) + 1) // 2
        return [leaf_or_tree(targets[:half]), leaf_or_tree(targets[half:])]

    def leaf_or_tree(targets: Sequence[VertexId]) -> VertexId:
        if len(targets) == 1:
            return targets[0]
        inner = len(successors)
        successors.append([])
        successors[inner] = route(targets)
        return inner

    split = 0
    for v in range(dag.n):
        if len(dag.successors[v]) > 2:
            successors[v] = route(dag.successors[v])
            split += 1

    logger.info(
        f"[PROCESSING] Split {split} vertices, added {len(successors) - dag.n} routing vertices"
    )
    return DagInstance(
        successors=tuple(tuple(succ) for succ in successors),
        source=dag.source,
        sink=dag.sink,
        threshold=dag.threshold,
    )


def layer_id(v: VertexId, layer: int, n: int) -> VertexId:
    """Id of the layered copy (v, layer)."""
    return layer * n + v


def layer_dag(dag: DagInstance) -> DagInstance:
    """
    Unroll a DAG into n layers so every source -> sink path has length n - 1.

    Copy (u, i) links to (v, i + 1) for each edge u -> v with u != t, and
    (t, i) links to (t, i + 1). Source becomes (s, 0), sink (t, n - 1); the
    layered copy of vertex v in layer i has id i * n + v.

    Args:
        dag: DAG with out-degree <= 2

    Returns:
        Layered DAG with n^2 vertices and the same path count

    Raises:
        InstanceValidationError: some vertex has out-degree above 2
    """
    wide = [v for v in range(dag.n) if dag.out_degree(v) > 2]
    if wide:
        raise InstanceValidationError(
            f"layering needs out-degree <= 2; vertex {wide[0]} has {dag.out_degree(wide[0])}"
        )
    n, t = dag.n, dag.sink
    successors = []
    for i in range(n):
        for v in range(n):
            if i == n - 1:
                successors.append(())
            elif v == t:
                successors.append((layer_id(t, i + 1, n),))
            else:
                successors.append(tuple(layer_id(w, i + 1, n) for w in dag.successors[v]))
    return DagInstance(
        successors=tuple(successors),
        source=layer_id(dag.source, 0, n),
        sink=layer_id(t, n - 1, n),
        threshold=dag.threshold,
    )
