"""
Circuit Core - Greedy Scheduler
Repeatedly pick the configuration sending the most data per unit of time
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from ..core.types import Configuration, DemandMatrix, Instance, Matching, Schedule, to_nonnegative
from ..matching import WeightMatrix, max_weight_matching

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GreedyChoice:
    """
    Best configuration for one greedy step

    Attributes:
        matching: Chosen matching
        alpha: Chosen duration
        ratio: gain / (alpha + delta)
        gain: ||min(R, alpha M)||_1 against the residual it was chosen for
    """
    matching: Matching
    alpha: Fraction
    ratio: Fraction
    gain: Fraction


def best_configuration(residual: DemandMatrix, delta) -> Optional[GreedyChoice]:
    """
    Configuration maximizing ||min(R, alpha M)||_1 / (alpha + delta)

    The ratio is piecewise linear-over-affine in alpha with breakpoints at the
    entries of R, so only the distinct positive entries are tried; for each,
    the best matching is a maximum-weight matching under min(R_e, alpha).

    Args:
        residual: Remaining demand R
        delta: Switching delay (0 allowed: ratio becomes gain per unit time)

    Returns:
        GreedyChoice, or None when R is all zero. Equal ratios go to the smallest alpha.
    """
    delta = to_nonnegative(delta, 'delta')
    best: Optional[GreedyChoice] = None

    for alpha in residual.distinct_positive_values():
        weights = WeightMatrix(residual.capped_minimum(alpha).values)
        matching, gain = max_weight_matching(weights)
        ratio = gain / (alpha + delta)
        if best is None or ratio > best.ratio:
            best = GreedyChoice(matching, alpha, ratio, gain)

    return best


def greedy_schedule(inst: Instance) -> Schedule:
    """
    Greedy schedule with final truncation

    Picks configurations while the time used stays within W and some demand
    remains; if the last pick overshoots W its duration is cut to
    beta = W - delta - (time of the earlier picks), or it is dropped when
    beta <= 0.

    Args:
        inst: Problem instance

    Returns:
        Feasible schedule
    """
    configs: List[Configuration] = []
    remaining = inst.demand
    used = Fraction(0)

    while used <= inst.window:
        choice = best_configuration(remaining, inst.delta)
        if choice is None or choice.gain == 0:
            break

        configs.append(Configuration(choice.matching, choice.alpha))
        remaining = remaining.capped_subtract(_load(choice, remaining))
        used += choice.alpha + inst.delta
        logger.debug(
            f"greedy step {len(configs)}: alpha={choice.alpha} edges={len(choice.matching)} "
            f"gain={choice.gain} ratio={choice.ratio} used={used}"
        )

    if used > inst.window:
        last = configs.pop()
        earlier = sum((config.duration + inst.delta for config in configs), Fraction(0))
        beta = inst.window - inst.delta - earlier
        if beta > 0:
            configs.append(Configuration(last.matching, beta))
            logger.debug(f"greedy truncated last configuration to beta={beta}")
        else:
            logger.debug(f"greedy dropped last configuration (beta={beta})")

    return inst.schedule(configs)


def _load(choice: GreedyChoice, remaining: DemandMatrix) -> DemandMatrix:
    """alpha * M as a matrix shaped like the residual"""
    senders, receivers = remaining.shape
    return DemandMatrix.from_edges(senders, receivers, {edge: choice.alpha for edge in choice.matching})
