"""
Circuit Core - Hybrid Scheduler
Greedy when the switching delay is small against the window, LP otherwise
"""

import logging
import math
from fractions import Fraction
from typing import Optional, Tuple

from ..core.constants import GREEDY_THRESHOLD, ONE_MINUS_INV_E_UPPER
from ..core.types import Instance, Schedule, to_rational
from .greedy import greedy_schedule
from .lp import LpReport, default_slot_count, lp_schedule_report

logger = logging.getLogger(__name__)


def hybrid_branch(inst: Instance, epsilon) -> Tuple[str, Optional[int]]:
    """
    Decide which algorithm serves an instance

    Args:
        inst: Problem instance
        epsilon: Accuracy in (0, 1 - 1/e)

    Returns:
        ('greedy', None) or ('lp', k) with k >= 1. When delta > W the LP
        branch still gets k = 1 and produces the empty schedule.
    """
    epsilon = to_rational(epsilon, 'epsilon')
    if not 0 < epsilon < ONE_MINUS_INV_E_UPPER:
        raise ValueError(f"epsilon must lie in (0, 1 - 1/e), got {epsilon}")

    if inst.delta <= GREEDY_THRESHOLD * epsilon * inst.window:
        return 'greedy', None

    # At most 2(e-1)/(e epsilon) + 1 configurations remain useful on this branch
    cap = math.floor(1 / (GREEDY_THRESHOLD * epsilon)) + 1
    return 'lp', min(default_slot_count(inst), cap)


def hybrid_report(inst: Instance, epsilon=Fraction(1, 5), seed: int = 0) -> Tuple[str, LpReport]:
    """
    Dispatch to greedy_schedule or lp_schedule_report

    Args:
        inst: Problem instance
        epsilon: Accuracy in (0, 1 - 1/e)
        seed: Root seed for the LP rounding

    Returns:
        (branch, report). The greedy branch carries no LP diagnostics.
    """
    if inst.window == 0:
        return 'greedy', LpReport(inst.empty_schedule())

    branch, k = hybrid_branch(inst, epsilon)
    logger.debug(f"hybrid: delta={inst.delta} window={inst.window} -> {branch} (k={k})")
    if branch == 'greedy':
        return branch, LpReport(greedy_schedule(inst))
    return branch, lp_schedule_report(inst, k, to_rational(epsilon, 'epsilon'), seed)


def hybrid_schedule(inst: Instance, epsilon=Fraction(1, 5), seed: int = 0) -> Schedule:
    """Feasible schedule from the branch hybrid_branch picks (empty when W = 0 or delta > W)"""
    return hybrid_report(inst, epsilon, seed)[1].schedule
