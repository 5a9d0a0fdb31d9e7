"""
Solver Coordinator
Registry of offline schedulers with timing, and the handles the online reduction calls
"""

import logging
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Tuple, Union

from ..config import get_solver_config
from ..core.types import Instance, Schedule, to_rational
from ..offline import LpReport, default_slot_count, greedy_schedule, hybrid_report, lp_schedule_report
from ..oracle import optimal_schedule_integer
from .clock import SolveClock

logger = logging.getLogger(__name__)

# solver(instance, **params) -> Schedule, or an LpReport carrying per-profile diagnostics
Solver = Callable[..., Union[Schedule, LpReport]]


def _greedy(inst: Instance, **_) -> Schedule:
    return greedy_schedule(inst)


def _lp(inst: Instance, k: Optional[int] = None, epsilon=None, seed: int = 0, **_) -> LpReport:
    if epsilon is None:
        epsilon = get_solver_config('hybrid')['default_epsilon']
    return lp_schedule_report(inst, k or default_slot_count(inst), to_rational(epsilon, 'epsilon'), seed)


def _hybrid(inst: Instance, epsilon=None, seed: int = 0, **_) -> LpReport:
    if epsilon is None:
        epsilon = get_solver_config('hybrid')['default_epsilon']
    return hybrid_report(inst, to_rational(epsilon, 'epsilon'), seed)[1]


def _oracle(inst: Instance, k: Optional[int] = None, **_) -> Schedule:
    schedule, _ = optimal_schedule_integer(inst, max_configs=k)
    return schedule


class SolverCoordinator:
    """
    Coordinates offline solvers behind one calling convention

    Responsibilities:
    - Keep the registry of named solvers
    - Time every solve on a shared clock
    - Build offline handles for the online reduction
    - Report status
    """

    def __init__(self, register_defaults: bool = True):
        """
        Initialize solver coordinator

        Args:
            register_defaults: Register greedy, lp, hybrid and oracle
        """
        self.clock = SolveClock()
        self.solvers: Dict[str, Solver] = {}
        self.solver_configs: Dict[str, Dict[str, Any]] = {}
        self.failures: Dict[str, int] = {}

        if register_defaults:
            self.register_solver('greedy', _greedy)
            self.register_solver('lp', _lp, get_solver_config('lp'))
            self.register_solver('hybrid', _hybrid, get_solver_config('hybrid'))
            self.register_solver('oracle', _oracle)

        logger.debug(f"Solver Coordinator initialized with {len(self.solvers)} solvers")

    def register_solver(self, solver_name: str, solver: Solver, config: Optional[Dict[str, Any]] = None):
        """
        Register a solver with the coordinator

        Args:
            solver_name: Unique identifier (e.g., 'greedy', 'lp')
            solver: Callable taking (instance, **params) and returning a Schedule or LpReport
            config: Optional defaults reported in the status
        """
        if solver_name in self.solvers:
            logger.warning(f"Solver '{solver_name}' already registered, replacing")

        self.solvers[solver_name] = solver
        if config:
            self.solver_configs[solver_name] = config

        logger.debug(f"✓ Registered solver: {solver_name}")

    def _lookup(self, solver_name: str) -> Solver:
        if solver_name not in self.solvers:
            logger.error(f"Solver '{solver_name}' not registered")
            raise ValueError(f"Unknown solver: {solver_name}")
        return self.solvers[solver_name]

    def solve_report(self, solver_name: str, instance: Instance, **params) -> Tuple[Schedule, Tuple[dict, ...]]:
        """
        Run a registered solver and keep its diagnostics

        Args:
            solver_name: Name of solver
            instance: Problem instance
            **params: Passed to the solver (epsilon, k, seed, ...)

        Returns:
            (schedule, diagnostics): diagnostics are the LP per-profile
            entries, empty for solvers that return a bare Schedule
        """
        solver = self._lookup(solver_name)
        try:
            with self.clock.measure(solver_name) as timing:
                result = solver(instance, **params)
        except Exception as e:
            self.failures[solver_name] = self.failures.get(solver_name, 0) + 1
            logger.error(f"✗ Solver '{solver_name}' failed: {e}", exc_info=True)
            raise

        if isinstance(result, LpReport):
            schedule, diagnostics = result.schedule, result.diagnostics
        else:
            schedule, diagnostics = result, ()
        logger.debug(
            f"✓ {solver_name}: {len(schedule)} configurations in {timing['seconds'] * 1000:.1f} ms"
        )
        return schedule, diagnostics

    def solve(self, solver_name: str, instance: Instance, **params) -> Schedule:
        """Run a registered solver (see solve_report) and return its schedule"""
        return self.solve_report(solver_name, instance, **params)[0]

    def offline_handle(self, solver_name: str, epsilon=None, k: Optional[int] = None) -> Callable[[Instance, int], Schedule]:
        """
        Offline handle for online_blocked

        Args:
            solver_name: Name of solver
            epsilon: Accuracy passed to lp/hybrid
            k: Configuration limit passed to lp/oracle

        Returns:
            Callable (instance, seed) -> Schedule
        """
        self._lookup(solver_name)
        params: Dict[str, Any] = {}
        if epsilon is not None:
            params['epsilon'] = Fraction(to_rational(epsilon, 'epsilon'))
        if k is not None:
            params['k'] = k

        def handle(instance: Instance, seed: int) -> Schedule:
            return self.solve(solver_name, instance, seed=seed, **params)

        return handle

    def get_solver_status(self, solver_name: str) -> Optional[dict]:
        """
        Get status of a specific solver

        Returns:
            dict: Solver status or None if not found
        """
        if solver_name not in self.solvers:
            return None
        timings = self.clock.get_stats()['solvers'].get(solver_name, {'calls': 0, 'seconds': 0.0})
        return {
            'solver_name': solver_name,
            'config': self.solver_configs.get(solver_name, {}),
            'calls': timings['calls'],
            'seconds': timings['seconds'],
            'failures': self.failures.get(solver_name, 0),
        }

    def get_coordinator_status(self) -> dict:
        """
        Get overall coordinator status

        Returns:
            dict: Coordinator status information
        """
        return {
            'registered_solvers': list(self.solvers.keys()),
            'solver_count': len(self.solvers),
            'clock_stats': self.clock.get_stats(),
            'solvers': {name: self.get_solver_status(name) for name in self.solvers},
        }

    def __enter__(self):
        """Context manager entry"""
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        """Context manager exit - log the totals"""
        stats = self.clock.get_stats()
        logger.debug(f"Solver Coordinator closing after {stats['total_calls']} solves")

    def __repr__(self):
        return f"<SolverCoordinator(solvers={len(self.solvers)})>"
