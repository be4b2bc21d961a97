"""
Toggle-parity diagnostic.

A vertex with two non-self exits toggles once per arrival, so its final switch
bit is the parity of its arrival count. At the target copy of a path-count
reduction that parity is the parity of the number of source-to-target paths.
"""

from src.core_model.switch_graph import VertexId
from src.digicomp_engine.ball_counts import BallCounts


def parity_diagnostic(counts: BallCounts, vertex: VertexId) -> int:
    """Final switch bit at `vertex`."""
    return counts.final_switches[vertex]
