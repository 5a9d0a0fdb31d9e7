"""
Circuit Core - Throughput Objective
The objective f, residuals, feasibility and the window-shrink transformation
"""

import logging
import math
from fractions import Fraction
from typing import List, Sequence

from .errors import GuaranteeNotApplicableError, InfeasibleScheduleError
from .types import Configuration, DemandMatrix, RationalMatrix, Schedule

logger = logging.getLogger(__name__)


def schedule_load(configs: Sequence[Configuration], senders: int, receivers: int) -> RationalMatrix:
    """
    Total time each edge is scheduled: sum of alpha * M over the configurations

    Args:
        configs: Configurations (any order, duplicates additive)
        senders: Row count of the instance
        receivers: Column count of the instance

    Returns:
        RationalMatrix of per-edge scheduled time
    """
    load = [[Fraction(0)] * receivers for _ in range(senders)]
    for config in configs:
        config.matching.check_within(senders, receivers)
        for i, j in config.matching:
            load[i][j] += config.duration
    return RationalMatrix(tuple(tuple(row) for row in load))


def _configs(schedule) -> Sequence[Configuration]:
    if isinstance(schedule, Schedule):
        return schedule.configs
    return tuple(schedule)


def evaluate_throughput(schedule, demand: DemandMatrix) -> Fraction:
    """
    Data sent by a schedule: ||min(D, sum alpha M)||_1

    Args:
        schedule: Schedule or any iterable of Configuration
        demand: Demand matrix D

    Returns:
        Exact amount of data sent, in [0, ||D||_1]
    """
    load = schedule_load(_configs(schedule), demand.senders, demand.receivers)
    return sum(
        (min(value, load[edge]) for edge, value in demand.entries()),
        Fraction(0),
    )


def residual(demand: DemandMatrix, schedule) -> DemandMatrix:
    """
    Demand left after running a schedule: D - min(D, sum alpha M)

    Args:
        demand: Demand matrix D
        schedule: Schedule or any iterable of Configuration

    Returns:
        DemandMatrix of unsent data
    """
    load = schedule_load(_configs(schedule), demand.senders, demand.receivers)
    return demand.capped_subtract(load)


def is_feasible(schedule: Schedule) -> bool:
    """True iff sum over configurations of (alpha + delta) fits in the window"""
    return schedule.time_used <= schedule.window


def integral_schedule(schedule: Schedule) -> Schedule:
    """
    Floor every duration to an integer and drop configurations that reach zero

    The result never uses more time than the input, so feasibility is kept.
    """
    configs = []
    for config in schedule.configs:
        duration = Fraction(math.floor(config.duration))
        if duration > 0:
            configs.append(Configuration(config.matching, duration))
    return schedule.with_configs(configs)


# ============================================================================
# WINDOW SHRINK
# ============================================================================

def _trimmed(configs: Sequence[Configuration], index: int, amount: Fraction) -> List[Configuration]:
    """Remove `amount` time from configuration `index`; delete it when that empties it"""
    out = list(configs)
    target = out[index]
    if target.duration > amount:
        out[index] = Configuration(target.matching, target.duration - amount)
    else:
        del out[index]
    return out


def _best_candidate(candidates: List[List[Configuration]], demand: DemandMatrix) -> List[Configuration]:
    # Maximum remaining throughput == minimum exact marginal loss; lowest index wins ties
    best, best_value = None, None
    for candidate in candidates:
        value = evaluate_throughput(candidate, demand)
        if best_value is None or value > best_value:
            best, best_value = candidate, value
    return best


def shrink_schedule(schedule: Schedule, demand: DemandMatrix) -> Schedule:
    """
    Fit a feasible schedule into a window of W - delta while keeping
    at least (1 - 2 delta / W) of its throughput

    Cases:
        - T_data >= W/2: take delta time off one configuration (a configuration
          no longer than delta is removed instead), choosing the one whose exact
          marginal loss against the full schedule is smallest.
        - T_switch >= W/2: remove the configuration with the smallest exact
          marginal contribution.
        - otherwise time_used < W: if the schedule already fits W - delta it is
          returned as is, else the overshoot (< delta) is taken off the
          configuration with the smallest exact loss.

    Args:
        schedule: Schedule feasible for its window W
        demand: Demand matrix the throughput is measured against

    Returns:
        Schedule whose window is W - delta (unchanged schedule when delta = 0)

    Raises:
        GuaranteeNotApplicableError: W <= 2 delta
        InfeasibleScheduleError: the input does not fit its own window
    """
    delta, window = schedule.delta, schedule.window
    if delta == 0:
        return schedule
    if window <= 2 * delta:
        raise GuaranteeNotApplicableError(
            f"shrink guarantee needs W > 2*delta (W={window}, delta={delta})"
        )
    if not is_feasible(schedule):
        raise InfeasibleScheduleError(
            f"schedule uses {schedule.time_used} time, window is {window}"
        )

    configs = list(schedule.configs)
    target_window = window - delta
    half = window / 2

    if not configs:
        return schedule.with_configs((), window=target_window)

    if schedule.data_time >= half:
        candidates = [_trimmed(configs, index, delta) for index in range(len(configs))]
        case = 'trim'
    elif schedule.switch_time >= half:
        candidates = [configs[:index] + configs[index + 1:] for index in range(len(configs))]
        case = 'remove'
    else:
        overshoot = schedule.time_used - target_window
        if overshoot <= 0:
            return schedule.with_configs(configs, window=target_window)
        candidates = [_trimmed(configs, index, overshoot) for index in range(len(configs))]
        case = 'overshoot'

    chosen = _best_candidate(candidates, demand)
    logger.debug(f"shrink ({case}): {len(configs)} -> {len(chosen)} configurations")
    return schedule.with_configs(chosen, window=target_window)
