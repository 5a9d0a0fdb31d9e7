"""
Circuit Core - Adversarial Trace
A single matching injected at the last step of the window, and the
uni-criteria policies it defeats
"""

import itertools
from fractions import Fraction
from typing import Callable, Optional

from ..core.errors import InvariantViolationError
from ..core.streams import make_rng
from ..core.types import DemandMatrix, Matching, to_rational
from ..matching import WeightMatrix, max_weight_matching
from .algorithms import run_policy
from .types import OnlineRun, Trace

Policy = Callable[[Trace, object, int], OnlineRun]


def _matching_trace(n: int, window: int, permutation) -> Trace:
    steps = [DemandMatrix.zeros(n, n) for _ in range(window - 1)]
    steps.append(DemandMatrix.from_edges(n, n, {(i, int(j)): 1 for i, j in enumerate(permutation)}))
    return Trace(n, n, tuple(steps))


def adversarial_trace(n: int, delta, window: int, seed: int = 0) -> Trace:
    """
    Nothing arrives until step W, then a uniformly random perfect matching
    of unit demands

    Args:
        n: Number of senders and receivers
        delta: Switching delay
        window: W (>= delta + 1)
        seed: Root seed (adversary stream)

    Returns:
        Trace of horizon W
    """
    delta = to_rational(delta, 'delta')
    if n < 1:
        raise InvariantViolationError(f"n must be positive, got {n}")
    if window < delta + 1:
        raise InvariantViolationError(f"adversarial trace needs W >= delta + 1 (W={window}, delta={delta})")

    permutation = make_rng(seed, 'adversary', n, int(window)).permutation(n)
    return _matching_trace(n, int(window), permutation)


def _identity(n: int, m: int) -> Matching:
    return Matching(tuple((i, i) for i in range(min(n, m))))


def hold_policy(trace: Trace, delta, window: int, initial: Optional[Matching] = None) -> OnlineRun:
    """Configure one matching up front (identity by default) and never switch"""
    fixed = initial if initial is not None else _identity(trace.senders, trace.receivers)
    return run_policy(trace, delta, window, lambda current, pending: fixed)


def switch_policy(trace: Trace, delta, window: int) -> OnlineRun:
    """Switch to a maximum matching of the pending demand whenever the configured one is worse"""

    def choose(current, pending):
        capped = WeightMatrix(pending.capped_minimum(1).values)
        best, weight = max_weight_matching(capped)
        if weight == 0:
            return None
        if current is not None and sum((capped[edge] for edge in current), Fraction(0)) == weight:
            return current
        return best

    return run_policy(trace, delta, window, choose)


def expected_policy_value(policy: Policy, n: int, delta, window: int) -> Fraction:
    """
    Exact expected data a deterministic policy sends within the window on
    the adversarial trace, averaging over all n! injected matchings
    """
    total = Fraction(0)
    count = 0
    for permutation in itertools.permutations(range(n)):
        total += policy(_matching_trace(n, int(window), permutation), delta, int(window)).total
        count += 1
    return total / count
