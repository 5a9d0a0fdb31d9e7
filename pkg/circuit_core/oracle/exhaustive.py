"""
Circuit Core - Exhaustive Oracles
Ground-truth optima for desk-scale instances and traces

optimal_schedule_integer searches every sequence of (matching, integer
duration) configurations; optimal_online_no_delay searches every choice of
per-step matchings. Both memoize on the exact remaining state and refuse
inputs beyond the ORACLE_LIMITS size guards.
"""

import logging
import threading
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..config import get_oracle_limit
from ..core.errors import BudgetExceededError, InvariantViolationError
from ..core.types import Configuration, Instance, Matching, Schedule
from ..matching import MultiEdgeSet, enumerate_matchings
from ..online.types import Trace

logger = logging.getLogger(__name__)

Counts = Tuple[Tuple[int, ...], ...]


def _integer(value: Fraction, name: str) -> int:
    if value.denominator != 1:
        raise InvariantViolationError(f"oracle needs an integer {name}, got {value}")
    return int(value)


class _IntegerSearch:
    """Memoized search over integer-duration schedules"""

    def __init__(self, inst: Instance):
        self.senders, self.receivers = inst.demand.shape
        self.delta = _integer(inst.delta, 'delta')
        self.matchings = enumerate_matchings(self.senders, self.receivers, include_empty=False)
        self.memo: Dict[Tuple[Counts, int, int], Tuple[int, Optional[Tuple[Matching, int]]]] = {}
        self.lock = threading.Lock()

    def best(self, remaining: Counts, time: int, configs: int) -> Tuple[int, Optional[Tuple[Matching, int]]]:
        """(best gain, first move) from a residual with `time` left and `configs` allowed"""
        key = (remaining, time, configs)
        with self.lock:
            cached = self.memo.get(key)
        if cached is not None:
            return cached

        best_value, best_move = 0, None
        if configs > 0 and time >= self.delta + 1:
            for matching in self.matchings:
                largest = max(remaining[i][j] for i, j in matching)
                if any(remaining[i][j] == 0 for i, j in matching):
                    continue
                for alpha in range(1, min(time - self.delta, largest) + 1):
                    after = [list(row) for row in remaining]
                    gain = 0
                    for i, j in matching:
                        sent = min(after[i][j], alpha)
                        after[i][j] -= sent
                        gain += sent
                    rest, _ = self.best(
                        tuple(tuple(row) for row in after), time - alpha - self.delta, configs - 1
                    )
                    if gain + rest > best_value:
                        best_value, best_move = gain + rest, (matching, alpha)

        with self.lock:
            self.memo[key] = (best_value, best_move)
        return best_value, best_move


def optimal_schedule_integer(inst: Instance, max_configs: Optional[int] = None) -> Tuple[Schedule, Fraction]:
    """
    Best schedule with integer durations, optionally limited to max_configs configurations

    Matchings are restricted to edges with positive residual demand; any
    other schedule is matched in value by one of these.

    Args:
        inst: Instance with integer demands, delta and window
        max_configs: Optional limit on the number of configurations

    Returns:
        (optimal schedule, its throughput)

    Raises:
        BudgetExceededError: instance beyond the oracle size guards
    """
    senders, receivers = inst.demand.shape
    if senders * receivers > get_oracle_limit('max_cells'):
        raise BudgetExceededError(
            f"oracle handles at most {get_oracle_limit('max_cells')} cells, got {senders}x{receivers}"
        )
    if inst.window > get_oracle_limit('max_window'):
        raise BudgetExceededError(
            f"oracle handles windows up to {get_oracle_limit('max_window')}, got {inst.window}"
        )
    if not inst.demand.is_integral():
        raise InvariantViolationError("oracle needs integer demands")
    window = _integer(inst.window, 'window')

    search = _IntegerSearch(inst)
    limit = max_configs if max_configs is not None else window + 1
    state: Counts = tuple(tuple(int(value) for value in row) for row in inst.demand.values)
    value, _ = search.best(state, window, limit)

    configs: List[Configuration] = []
    time, remaining = window, state
    while True:
        _, move = search.best(remaining, time, limit)
        if move is None:
            break
        matching, alpha = move
        configs.append(Configuration(matching, alpha))
        after = [list(row) for row in remaining]
        for i, j in matching:
            after[i][j] -= min(after[i][j], alpha)
        remaining = tuple(tuple(row) for row in after)
        time -= alpha + search.delta
        limit -= 1

    logger.debug(f"oracle: {len(search.memo)} states, f={value}")
    return inst.schedule(configs), Fraction(value)


def optimal_online_no_delay(trace: Trace) -> Tuple[List[Matching], Fraction]:
    """
    Best per-step matchings with full knowledge of the trace (no switching delay)

    Args:
        trace: Integral trace

    Returns:
        (matching of every step, total sent)

    Raises:
        BudgetExceededError: trace beyond the oracle size guards
    """
    if trace.horizon > get_oracle_limit('online_max_horizon'):
        raise BudgetExceededError(
            f"online oracle handles horizons up to {get_oracle_limit('online_max_horizon')}, got {trace.horizon}"
        )
    side = get_oracle_limit('online_max_side')
    if trace.senders > side or trace.receivers > side:
        raise BudgetExceededError(f"online oracle handles sides up to {side}, got {trace.shape}")
    arrivals = trace.edge_sets()
    per_step = get_oracle_limit('online_max_edges_per_step')
    if any(step.total() > per_step for step in arrivals):
        raise BudgetExceededError(f"online oracle handles up to {per_step} edges per step")

    matchings = enumerate_matchings(trace.senders, trace.receivers)
    memo: Dict[Tuple[int, Counts], Tuple[int, Optional[Matching]]] = {}

    def best(t: int, pending: MultiEdgeSet) -> Tuple[int, Optional[Matching]]:
        if t == trace.horizon:
            return 0, None
        key = (t, pending.counts)
        if key in memo:
            return memo[key]
        available = pending.union(arrivals[t])
        best_value, best_matching = -1, None
        for matching in matchings:
            if any(available[edge] == 0 for edge in matching):
                continue
            rest, _ = best(t + 1, available.remove_matching(matching))
            if len(matching) + rest > best_value:
                best_value, best_matching = len(matching) + rest, matching
        memo[key] = (best_value, best_matching)
        return memo[key]

    total, _ = best(0, MultiEdgeSet.empty(trace.senders, trace.receivers))
    chosen: List[Matching] = []
    pending = MultiEdgeSet.empty(trace.senders, trace.receivers)
    for t in range(trace.horizon):
        _, matching = best(t, pending)
        chosen.append(matching)
        pending = pending.union(arrivals[t]).remove_matching(matching)

    return chosen, Fraction(total)
