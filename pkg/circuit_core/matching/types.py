"""
Circuit Core - Matching Inputs
Edge-weight matrices and unit-demand multigraphs fed to the matching kernels
"""

from dataclasses import dataclass
from typing import Iterator, List, Tuple

from ..core.errors import DimensionMismatchError, InvariantViolationError
from ..core.types import DemandMatrix, Edge, Matching, RationalMatrix


class WeightMatrix(RationalMatrix):
    """
    Nonnegative edge weights for maximum-weight matching

    Used with weights min(R_e, alpha) by the greedy and with the dual
    prices b_e by the LP pricing step.
    """


@dataclass(frozen=True)
class MultiEdgeSet:
    """
    Bipartite multigraph of unit-demand edges

    Attributes:
        counts: Row-major multiplicity of each (sender, receiver) edge
    """
    counts: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.counts)
        if not rows or not rows[0]:
            raise InvariantViolationError("MultiEdgeSet needs at least one row and one column")
        width = len(rows[0])
        normalized = []
        for i, row in enumerate(rows):
            if len(row) != width:
                raise DimensionMismatchError(f"row {i} has {len(row)} entries, expected {width}")
            checked = []
            for j, count in enumerate(row):
                if isinstance(count, bool) or int(count) != count or count < 0:
                    raise InvariantViolationError(
                        f"multiplicity at ({i}, {j}) must be a nonnegative integer, got {count}"
                    )
                checked.append(int(count))
            normalized.append(tuple(checked))
        object.__setattr__(self, 'counts', tuple(normalized))

    @classmethod
    def empty(cls, senders: int, receivers: int) -> 'MultiEdgeSet':
        return cls(tuple((0,) * receivers for _ in range(senders)))

    @classmethod
    def from_edges(cls, senders: int, receivers: int, edges) -> 'MultiEdgeSet':
        """Build from an iterable of (sender, receiver) pairs; repeats add multiplicity"""
        rows = [[0] * receivers for _ in range(senders)]
        for i, j in edges:
            if not (0 <= i < senders and 0 <= j < receivers):
                raise DimensionMismatchError(f"edge ({i}, {j}) outside {senders}x{receivers}")
            rows[i][j] += 1
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def from_matrix(cls, matrix: RationalMatrix) -> 'MultiEdgeSet':
        """Interpret an integral demand matrix as a multigraph"""
        if not matrix.is_integral():
            raise InvariantViolationError("multigraph traffic must be integral")
        return cls(tuple(tuple(int(value) for value in row) for row in matrix.values))

    @property
    def senders(self) -> int:
        return len(self.counts)

    @property
    def receivers(self) -> int:
        return len(self.counts[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.senders, self.receivers

    def __getitem__(self, edge: Edge) -> int:
        i, j = edge
        return self.counts[i][j]

    def support(self) -> List[Edge]:
        """Edges with multiplicity >= 1, row-major order"""
        return [(i, j) for i, row in enumerate(self.counts) for j, count in enumerate(row) if count > 0]

    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def is_empty(self) -> bool:
        return self.total() == 0

    def edges(self) -> Iterator[Edge]:
        """Every edge copy, row-major order"""
        for i, row in enumerate(self.counts):
            for j, count in enumerate(row):
                for _ in range(count):
                    yield i, j

    def union(self, other: 'MultiEdgeSet') -> 'MultiEdgeSet':
        """Multiset union: multiplicities add"""
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape {self.shape} does not match {other.shape}")
        return MultiEdgeSet(tuple(
            tuple(a + b for a, b in zip(row_a, row_b))
            for row_a, row_b in zip(self.counts, other.counts)
        ))

    def remove_matching(self, matching: Matching) -> 'MultiEdgeSet':
        """Drop one copy of every edge of the matching"""
        matching.check_within(self.senders, self.receivers)
        rows = [list(row) for row in self.counts]
        for i, j in matching:
            if rows[i][j] == 0:
                raise InvariantViolationError(f"edge ({i}, {j}) is not present in the multigraph")
            rows[i][j] -= 1
        return MultiEdgeSet(tuple(tuple(row) for row in rows))

    def to_demand(self) -> DemandMatrix:
        return DemandMatrix(self.counts)
