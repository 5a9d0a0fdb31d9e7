"""
Circuit Core - Online Algorithms
Greedy maximum matching without switching delay, and the blocked reduction
to an offline scheduler for positive delay
"""

import logging
import math
from fractions import Fraction
from typing import Callable, List

from ..core.errors import InfeasibleScheduleError
from ..core.objective import evaluate_throughput, integral_schedule, is_feasible, residual
from ..core.streams import derive_seed
from ..core.types import DemandMatrix, Instance, Schedule, to_rational
from ..matching import MultiEdgeSet, max_cardinality_matching
from .types import IDLE, SEND, SWITCH, OnlineRun, StepAction, Trace

logger = logging.getLogger(__name__)

# (instance, seed) -> schedule feasible for instance.window
OfflineHandle = Callable[[Instance, int], Schedule]


def online_no_delay(trace: Trace) -> OnlineRun:
    """
    Serve a maximum-cardinality matching of the pending multigraph every step

    Args:
        trace: Integral trace of unit-demand edges

    Returns:
        OnlineRun whose credits are |M_t| per step
    """
    arrivals = trace.edge_sets()
    pending = MultiEdgeSet.empty(trace.senders, trace.receivers)
    actions, matchings, credits = [], [], []

    for arrived in arrivals:
        pending = pending.union(arrived)
        matching = max_cardinality_matching(pending)
        pending = pending.remove_matching(matching)

        sent = Fraction(len(matching))
        matchings.append(matching)
        credits.append(sent)
        actions.append(StepAction(SEND, matching, sent) if len(matching) else StepAction(IDLE, sent=sent))

    total = sum(credits, Fraction(0))
    logger.debug(f"online no-delay: T={trace.horizon} total={total} left={pending.total()}")
    return OnlineRun(
        actions=tuple(actions),
        matchings=tuple(matchings),
        credits=tuple(credits),
        total=total,
    )


def _block_actions(schedule: Schedule, delta: int, length: int) -> List[StepAction]:
    """delta switch steps then alpha send steps per configuration, idle for the rest"""
    actions: List[StepAction] = []
    for config in schedule.configs:
        actions.extend(StepAction(SWITCH) for _ in range(delta))
        actions.extend(StepAction(SEND, config.matching) for _ in range(int(config.duration)))
    actions.extend(StepAction(IDLE) for _ in range(length - len(actions)))
    return actions


def online_blocked(trace: Trace, delta, k: int, offline: OfflineHandle, seed: int = 0) -> OnlineRun:
    """
    Accumulate arrivals for k*delta steps, then execute an offline schedule
    for them during the next k*delta steps

    Block r gathers arrivals of steps r*k*delta+1 .. (r+1)*k*delta, on top of
    whatever earlier blocks left unsent. Its schedule runs in block r+1, so
    the first block is spent waiting and the last block runs after the
    horizon. A partial final block is padded with empty arrivals.

    Args:
        trace: Arrival trace
        delta: Switching delay in steps (integer >= 1)
        k: Block length in units of delta (>= 3)
        offline: Offline scheduler called as offline(instance, seed)
        seed: Root seed; block r hands its solver derive_seed(seed, 'rounding', r)

    Returns:
        OnlineRun with one block schedule and credit per block

    Raises:
        InfeasibleScheduleError: the offline handle overran its window
    """
    delta = to_rational(delta, 'delta')
    if delta.denominator != 1 or delta < 1:
        raise ValueError(f"delta must be an integer >= 1, got {delta}")
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    delta = int(delta)

    length = k * delta
    block_count = math.ceil(trace.horizon / length)
    if block_count == 0:
        return OnlineRun(delta=Fraction(delta))

    pending = DemandMatrix.zeros(trace.senders, trace.receivers)
    actions: List[StepAction] = [StepAction(IDLE) for _ in range(length)]
    blocks, credits = [], []

    for r in range(block_count):
        pending = pending + trace.block(r * length, length)
        inst = Instance(pending, delta, length)
        schedule = offline(inst, derive_seed(seed, 'rounding', r))

        if not is_feasible(schedule) or schedule.window > length or schedule.delta != delta:
            raise InfeasibleScheduleError(
                f"block {r}: offline schedule uses {schedule.time_used} of {length} steps "
                f"(delta={schedule.delta})"
            )
        for config in schedule.configs:
            config.matching.check_within(trace.senders, trace.receivers)

        schedule = integral_schedule(inst.schedule(schedule.configs))
        credit = evaluate_throughput(schedule, pending)
        pending = residual(pending, schedule)

        blocks.append(schedule)
        credits.append(credit)
        actions.extend(_block_actions(schedule, delta, length))
        logger.debug(f"block {r}: {len(schedule)} configurations, credit {credit}, left {pending.total()}")

    total = sum(credits, Fraction(0))
    run = OnlineRun(
        actions=tuple(actions),
        blocks=tuple(blocks),
        credits=tuple(credits),
        total=total,
        delta=Fraction(delta),
    )
    run.check_accounting()
    return run


def _rate_limited_send(pending: DemandMatrix, matching) -> DemandMatrix:
    """One step of sending: every edge of the matching moves at most one unit"""
    senders, receivers = pending.shape
    return DemandMatrix.from_edges(senders, receivers, {
        edge: min(pending[edge], Fraction(1)) for edge in matching
    })


def run_policy(trace: Trace, delta, window: int, choose) -> OnlineRun:
    """
    Simulate a uni-criteria policy for `window` steps

    Every step, arrivals join the pending demand first. When no switch is in
    progress the policy picks a target matching; a target different from the
    configured one costs delta switch steps before sending resumes, and a
    configured matching sends one unit per edge per step.

    Args:
        trace: Arrival trace (steps past `window` are ignored)
        delta: Switching delay in steps
        window: Number of steps the policy may use
        choose: choose(current matching or None, pending demand) -> target or None

    Returns:
        OnlineRun with per-step credits
    """
    delta = int(to_rational(delta, 'delta'))
    pending = DemandMatrix.zeros(trace.senders, trace.receivers)
    current = None
    target = None
    switching = 0
    actions, credits = [], []

    for t in range(window):
        if t < trace.horizon:
            pending = pending + trace.steps[t]

        if switching == 0:
            wanted = choose(current, pending)
            if wanted is not None and wanted != current:
                target = wanted
                switching = delta
                if switching == 0:
                    current = target

        if switching > 0:
            switching -= 1
            if switching == 0:
                current = target
            actions.append(StepAction(SWITCH, sent=Fraction(0)))
            credits.append(Fraction(0))
            continue

        if current is None:
            actions.append(StepAction(IDLE, sent=Fraction(0)))
            credits.append(Fraction(0))
            continue

        load = _rate_limited_send(pending, current)
        pending = pending.capped_subtract(load)
        actions.append(StepAction(SEND, current, load.total()))
        credits.append(load.total())

    return OnlineRun(
        actions=tuple(actions),
        credits=tuple(credits),
        total=sum(credits, Fraction(0)),
        delta=Fraction(delta),
    )
