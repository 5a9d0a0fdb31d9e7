"""
Circuit Core - Matching Package
Exact bipartite matching kernels used by every scheduling algorithm
"""

from .kernels import (
    HopcroftKarp,
    enumerate_matchings,
    max_cardinality_matching,
    max_weight_matching,
)
from .types import MultiEdgeSet, WeightMatrix

__all__ = [
    'HopcroftKarp',
    'MultiEdgeSet',
    'WeightMatrix',
    'enumerate_matchings',
    'max_cardinality_matching',
    'max_weight_matching',
]
