"""
Reference path counters for DAG instances.
"""

import logging
from typing import Optional

from src.config import DEFAULT_PATH_LIMIT
from src.core_model.acyclicity import successor_topological_order
from src.core_model.errors import PathEnumerationLimitError
from src.core_model.instances import DagInstance

logger = logging.getLogger(__name__)


def count_paths_bruteforce(dag: DagInstance, limit: Optional[int] = None) -> int:
    """
    Count source -> sink paths by enumerating every walk prefix.

    Args:
        dag: DAG instance
        limit: Maximum number of walk prefixes to expand (default 10^6)

    Returns:
        Number of distinct paths; parallel edges give distinct paths

    Raises:
        PathEnumerationLimitError: more than `limit` prefixes were expanded
    """
    limit = DEFAULT_PATH_LIMIT if limit is None else limit
    stack = [dag.source]
    expanded = 0
    paths = 0
    while stack:
        v = stack.pop()
        expanded += 1
        if expanded > limit:
            raise PathEnumerationLimitError(limit)
        if v == dag.sink:
            paths += 1
            continue
        stack.extend(dag.successors[v])
    return paths


def count_paths_dp(dag: DagInstance) -> int:
    """Count source -> sink paths by summing over a topological order."""
    ways = [0] * dag.n
    ways[dag.source] = 1
    for v in successor_topological_order(dag.successors):
        if ways[v] == 0 or v == dag.sink:
            continue
        for w in dag.successors[v]:
            ways[w] += ways[v]
    logger.debug(f"[INFO] {ways[dag.sink]} paths from {dag.source} to {dag.sink}")
    return ways[dag.sink]


def meets_threshold(dag: DagInstance) -> bool:
    """The DAG path-count question: at least k paths from s to t?"""
    return count_paths_dp(dag) >= dag.threshold
