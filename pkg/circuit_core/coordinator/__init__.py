"""
Circuit Core - Solver Coordinator
Named offline solvers with shared timing
"""

from .clock import SolveClock
from .coordinator import SolverCoordinator

__all__ = [
    'SolveClock',
    'SolverCoordinator',
]
