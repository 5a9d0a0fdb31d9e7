"""
Circuit Core - Matching Kernels
Exact maximum-weight and maximum-cardinality bipartite matching

Both kernels return the lexicographically smallest optimal edge set
(edges sorted by (sender, receiver)), so results are deterministic.
Weights are exact rationals; no tolerances are involved.
"""

import logging
from collections import deque
from fractions import Fraction
from typing import Deque, Dict, List, Optional, Sequence, Set, Tuple

from ..core.types import Edge, Matching
from .types import MultiEdgeSet, WeightMatrix

logger = logging.getLogger(__name__)

# Marks an unreached vertex in the Hopcroft-Karp layering
UNREACHED = -1


# ============================================================================
# HUNGARIAN METHOD (maximum weight)
# ============================================================================

def _solve_assignment(weights: Sequence[Sequence[Fraction]]) -> Tuple[Fraction, List[Edge]]:
    """
    Maximum-weight assignment on a rectangular matrix via the potential-based
    Hungarian method (the matrix is padded to a square with zero weights)

    Args:
        weights: Row-major nonnegative weights

    Returns:
        (total weight, list of (row, column) pairs inside the original shape)
    """
    rows = len(weights)
    cols = len(weights[0])
    size = max(rows, cols)

    # Minimize cost = -weight; padding costs nothing
    cost = [
        [-weights[i][j] if i < rows and j < cols else Fraction(0) for j in range(size)]
        for i in range(size)
    ]

    row_potential = [Fraction(0)] * (size + 1)
    col_potential = [Fraction(0)] * (size + 1)
    col_owner = [0] * (size + 1)
    way = [0] * (size + 1)

    for row in range(1, size + 1):
        col_owner[0] = row
        current_col = 0
        min_slack: List[Optional[Fraction]] = [None] * (size + 1)
        visited = [False] * (size + 1)

        while True:
            visited[current_col] = True
            current_row = col_owner[current_col]
            step: Optional[Fraction] = None
            next_col = 0

            for col in range(1, size + 1):
                if visited[col]:
                    continue
                reduced = cost[current_row - 1][col - 1] - row_potential[current_row] - col_potential[col]
                if min_slack[col] is None or reduced < min_slack[col]:
                    min_slack[col] = reduced
                    way[col] = current_col
                if step is None or min_slack[col] < step:
                    step = min_slack[col]
                    next_col = col

            for col in range(size + 1):
                if visited[col]:
                    row_potential[col_owner[col]] += step
                    col_potential[col] -= step
                else:
                    min_slack[col] -= step

            current_col = next_col
            if col_owner[current_col] == 0:
                break

        # Augment along the alternating path
        while True:
            previous = way[current_col]
            col_owner[current_col] = col_owner[previous]
            current_col = previous
            if current_col == 0:
                break

    pairs = [
        (col_owner[col] - 1, col - 1)
        for col in range(1, size + 1)
        if col_owner[col] - 1 < rows and col - 1 < cols
    ]
    total = sum((weights[i][j] for i, j in pairs), Fraction(0))
    return total, pairs


def _masked(weights: Sequence[Sequence[Fraction]], rows: Set[int], cols: Set[int]) -> List[List[Fraction]]:
    """Copy of the weights with the given rows and columns zeroed"""
    zero = Fraction(0)
    return [
        [zero if i in rows or j in cols else value for j, value in enumerate(row)]
        for i, row in enumerate(weights)
    ]


def max_weight_matching(weights: WeightMatrix) -> Tuple[Matching, Fraction]:
    """
    Maximum-weight matching, zero-weight edges excluded

    Args:
        weights: Nonnegative edge weights

    Returns:
        (lexicographically smallest optimal matching, its exact weight)
    """
    table = weights.to_rows()
    best, _ = _solve_assignment(table)
    if best == 0:
        return Matching(), Fraction(0)

    chosen: List[Edge] = []
    chosen_weight = Fraction(0)
    used_rows: Set[int] = set()
    used_cols: Set[int] = set()

    # Fix edges in lexicographic order whenever an optimum still contains them
    for i, j in weights.support():
        if i in used_rows or j in used_cols:
            continue
        rest, _ = _solve_assignment(_masked(table, used_rows | {i}, used_cols | {j}))
        if chosen_weight + table[i][j] + rest == best:
            chosen.append((i, j))
            chosen_weight += table[i][j]
            used_rows.add(i)
            used_cols.add(j)
            if chosen_weight == best:
                break

    return Matching(tuple(chosen)), best


# ============================================================================
# HOPCROFT-KARP (maximum cardinality)
# ============================================================================

class HopcroftKarp:
    """
    Hopcroft-Karp maximum matching on a bipartite graph given as
    {sender: [receivers]}; adjacency lists are scanned in the given order
    so results are identical across runs.
    """

    def __init__(self, graph_left: Dict[int, List[int]]):
        self._graph_left = graph_left
        self._left: List[int] = list(graph_left.keys())
        self._pair_left: Dict[int, int] = {}
        self._pair_right: Dict[int, int] = {}
        self._dist_left: Dict[int, int] = {}
        self._reference_distance = UNREACHED

    def maximum_matching(self) -> Dict[int, int]:
        """Run the algorithm and return {sender: receiver}"""
        self._pair_left.clear()
        self._pair_right.clear()
        while self._bfs():
            for left in self._left:
                if left not in self._pair_left:
                    self._dfs(left)
        return dict(self._pair_left)

    def _bfs(self) -> bool:
        queue: Deque[int] = deque()
        for left in self._left:
            if left not in self._pair_left:
                self._dist_left[left] = 0
                queue.append(left)
            else:
                self._dist_left[left] = UNREACHED
        self._reference_distance = UNREACHED

        while queue:
            left = queue.popleft()
            if self._reference_distance != UNREACHED and self._dist_left[left] >= self._reference_distance:
                continue
            for right in self._graph_left[left]:
                other = self._pair_right.get(right)
                if other is None:
                    if self._reference_distance == UNREACHED:
                        self._reference_distance = self._dist_left[left] + 1
                elif self._dist_left[other] == UNREACHED:
                    self._dist_left[other] = self._dist_left[left] + 1
                    queue.append(other)
        return self._reference_distance != UNREACHED

    def _dfs(self, left: int) -> bool:
        for right in self._graph_left[left]:
            other = self._pair_right.get(right)
            if other is None:
                if self._reference_distance == self._dist_left[left] + 1:
                    self._pair_left[left] = right
                    self._pair_right[right] = left
                    return True
            elif self._dist_left[other] == self._dist_left[left] + 1 and self._dfs(other):
                self._pair_left[left] = right
                self._pair_right[right] = left
                return True
        self._dist_left[left] = UNREACHED
        return False


def _cardinality(edges: Sequence[Edge], rows: Set[int], cols: Set[int]) -> int:
    graph: Dict[int, List[int]] = {}
    for i, j in edges:
        if i in rows or j in cols:
            continue
        graph.setdefault(i, []).append(j)
    return len(HopcroftKarp(graph).maximum_matching())


def max_cardinality_matching(edges: MultiEdgeSet) -> Matching:
    """
    Maximum-cardinality matching among edges of multiplicity >= 1

    Args:
        edges: Unit-demand multigraph

    Returns:
        Lexicographically smallest maximum matching (ties go to the smallest receiver)
    """
    support = edges.support()
    best = _cardinality(support, set(), set())

    chosen: List[Edge] = []
    used_rows: Set[int] = set()
    used_cols: Set[int] = set()
    for i, j in support:
        if len(chosen) == best:
            break
        if i in used_rows or j in used_cols:
            continue
        if len(chosen) + 1 + _cardinality(support, used_rows | {i}, used_cols | {j}) == best:
            chosen.append((i, j))
            used_rows.add(i)
            used_cols.add(j)

    return Matching(tuple(chosen))


# ============================================================================
# ENUMERATION
# ============================================================================

def enumerate_matchings(senders: int, receivers: int, support: Optional[Sequence[Edge]] = None,
                        include_empty: bool = True) -> List[Matching]:
    """
    Every matching of the complete (or given) bipartite graph

    Args:
        senders: Row count
        receivers: Column count
        support: Restrict to these edges (default: all pairs)
        include_empty: Whether the empty matching is part of the result

    Returns:
        Matchings sorted by their edge tuples
    """
    allowed: Dict[int, List[int]] = {i: [] for i in range(senders)}
    if support is None:
        for i in range(senders):
            allowed[i] = list(range(receivers))
    else:
        for i, j in sorted(set(support)):
            allowed[i].append(j)

    found: List[Tuple[Edge, ...]] = []

    def extend(sender: int, taken: Set[int], current: List[Edge]):
        if sender == senders:
            found.append(tuple(current))
            return
        extend(sender + 1, taken, current)
        for receiver in allowed[sender]:
            if receiver in taken:
                continue
            taken.add(receiver)
            current.append((sender, receiver))
            extend(sender + 1, taken, current)
            current.pop()
            taken.remove(receiver)

    extend(0, set(), [])
    found.sort()
    if not include_empty:
        found = [edges for edges in found if edges]
    return [Matching(edges) for edges in found]
