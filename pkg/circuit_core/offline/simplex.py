"""
Circuit Core - Exact Simplex
Dense rational tableau simplex for  max c.x  s.t.  A x <= b, x >= 0, b >= 0

Slack variables occupy the first columns, so the slack block of the tableau
is always the current basis inverse. That makes column generation cheap:
a new column enters as B^-1 a with reduced cost c - y.a, and the tableau
stays primal feasible (warm start). Pivoting follows Bland's rule, which
guarantees termination under degeneracy.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from ..core.errors import InvariantViolationError

logger = logging.getLogger(__name__)


class UnboundedProgramError(InvariantViolationError):
    """The objective can grow without limit"""


class SimplexTableau:
    """
    Revised-by-hand tableau over Fractions

    Columns 0..m-1 are the slacks of the m rows; structural columns are
    appended with add_column() and numbered from m upwards.
    """

    def __init__(self, rhs: Sequence[Fraction]):
        """
        Initialize with the all-slack basis

        Args:
            rhs: Right-hand side b (must be nonnegative)
        """
        self.m = len(rhs)
        self.rhs: List[Fraction] = [Fraction(value) for value in rhs]
        if any(value < 0 for value in self.rhs):
            raise InvariantViolationError("simplex right-hand side must be nonnegative")

        self.rows: List[List[Fraction]] = [
            [Fraction(1) if col == row else Fraction(0) for col in range(self.m)]
            for row in range(self.m)
        ]
        self.reduced: List[Fraction] = [Fraction(0)] * self.m
        self.basis: List[int] = list(range(self.m))
        self.value = Fraction(0)
        self.structural = 0
        self.pivots = 0

    def add_column(self, coefficients: Sequence[Fraction], cost: Fraction) -> int:
        """
        Append a structural column

        Args:
            coefficients: Column of A (length m)
            cost: Objective coefficient

        Returns:
            Structural index of the new variable (0-based)
        """
        nonzero = [(row, Fraction(value)) for row, value in enumerate(coefficients) if value != 0]
        for tableau_row in self.rows:
            tableau_row.append(sum((tableau_row[row] * value for row, value in nonzero), Fraction(0)))

        duals = self.duals()
        self.reduced.append(Fraction(cost) - sum((duals[row] * value for row, value in nonzero), Fraction(0)))
        self.structural += 1
        return self.structural - 1

    def duals(self) -> List[Fraction]:
        """Row prices y = c_B B^-1, read off the slack reduced costs"""
        return [-self.reduced[row] for row in range(self.m)]

    def primal(self) -> List[Fraction]:
        """Values of the structural variables"""
        values = [Fraction(0)] * self.structural
        for row, variable in enumerate(self.basis):
            if variable >= self.m:
                values[variable - self.m] = self.rhs[row]
        return values

    def _pivot(self, pivot_row: int, pivot_col: int):
        factor = self.rows[pivot_row][pivot_col]
        row = [value / factor for value in self.rows[pivot_row]]
        rhs = self.rhs[pivot_row] / factor
        self.rows[pivot_row] = row
        self.rhs[pivot_row] = rhs

        for index in range(self.m):
            if index == pivot_row:
                continue
            scale = self.rows[index][pivot_col]
            if scale == 0:
                continue
            self.rows[index] = [a - scale * b for a, b in zip(self.rows[index], row)]
            self.rhs[index] -= scale * rhs

        scale = self.reduced[pivot_col]
        self.reduced = [a - scale * b for a, b in zip(self.reduced, row)]
        self.value += scale * rhs
        self.basis[pivot_row] = pivot_col
        self.pivots += 1

    def _entering(self) -> Optional[int]:
        for col, reduced in enumerate(self.reduced):
            if reduced > 0:
                return col
        return None

    def solve(self, max_pivots: Optional[int] = None) -> Fraction:
        """
        Pivot to optimality

        Args:
            max_pivots: Optional guard on the number of pivots of this call

        Returns:
            Optimal objective value
        """
        start = self.pivots
        while True:
            col = self._entering()
            if col is None:
                return self.value

            candidates = [
                (self.rhs[row] / self.rows[row][col], self.basis[row], row)
                for row in range(self.m)
                if self.rows[row][col] > 0
            ]
            if not candidates:
                raise UnboundedProgramError(f"column {col} can increase without bound")

            _, _, row = min(candidates)
            self._pivot(row, col)

            if max_pivots is not None and self.pivots - start > max_pivots:
                raise InvariantViolationError(f"simplex exceeded {max_pivots} pivots")


def solve_lp(a_matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction],
             costs: Sequence[Fraction]):
    """
    One-shot solve of  max c.x  s.t.  A x <= b, x >= 0

    Args:
        a_matrix: Row-major constraint matrix (m x n)
        rhs: b, nonnegative
        costs: c

    Returns:
        tuple: (objective, primal values, row duals)
    """
    tableau = SimplexTableau(rhs)
    for col in range(len(costs)):
        tableau.add_column([a_matrix[row][col] for row in range(len(rhs))], costs[col])
    objective = tableau.solve()
    logger.debug(f"simplex solved {len(rhs)}x{len(costs)} in {tableau.pivots} pivots: {objective}")
    return objective, tableau.primal(), tableau.duals()
