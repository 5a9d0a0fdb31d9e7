"""
Circuit Core - Online Model
Arrival traces and the step-by-step record of an online run
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..core.errors import DimensionMismatchError, InvariantViolationError
from ..core.types import DemandMatrix, Matching, RationalMatrix, Schedule
from ..matching import MultiEdgeSet

SEND = 'send'
SWITCH = 'switch'
IDLE = 'idle'

ACTION_KINDS = (SEND, SWITCH, IDLE)


@dataclass(frozen=True)
class Trace:
    """
    Demand revealed one step at a time

    Attributes:
        senders: Number of senders n
        receivers: Number of receivers m
        steps: Arrival matrix of every step, in order (horizon T = len(steps))
    """
    senders: int
    receivers: int
    steps: Tuple[DemandMatrix, ...] = ()

    def __post_init__(self):
        if self.senders < 1 or self.receivers < 1:
            raise InvariantViolationError(
                f"trace needs at least one sender and receiver, got {self.senders}x{self.receivers}"
            )
        steps = []
        for t, step in enumerate(self.steps):
            if isinstance(step, MultiEdgeSet):
                step = step.to_demand()
            elif not isinstance(step, DemandMatrix):
                values = step.values if isinstance(step, RationalMatrix) else step
                step = DemandMatrix(values)
            if step.shape != (self.senders, self.receivers):
                raise DimensionMismatchError(
                    f"step {t} has shape {step.shape}, trace is {self.senders}x{self.receivers}"
                )
            steps.append(step)
        object.__setattr__(self, 'steps', tuple(steps))

    @classmethod
    def from_edge_sets(cls, senders: int, receivers: int, edge_sets: Sequence) -> 'Trace':
        """Trace of unit-demand edges; each element is an iterable of (sender, receiver) pairs"""
        return cls(senders, receivers, tuple(
            MultiEdgeSet.from_edges(senders, receivers, edges) for edges in edge_sets
        ))

    @property
    def horizon(self) -> int:
        return len(self.steps)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.senders, self.receivers

    def __iter__(self) -> Iterator[DemandMatrix]:
        return iter(self.steps)

    def is_integral(self) -> bool:
        return all(step.is_integral() for step in self.steps)

    def edge_sets(self) -> List[MultiEdgeSet]:
        """Steps as multigraphs; only defined for integral traces"""
        if not self.is_integral():
            raise InvariantViolationError("trace has non-integer arrivals")
        return [MultiEdgeSet.from_matrix(step) for step in self.steps]

    def block(self, start: int, length: int) -> DemandMatrix:
        """Sum of the arrivals of steps start .. start+length-1 (missing steps count as zero)"""
        total = DemandMatrix.zeros(self.senders, self.receivers)
        for step in self.steps[start:start + length]:
            total = total + step
        return total

    def aggregate(self) -> DemandMatrix:
        """Everything that ever arrives"""
        return self.block(0, self.horizon)

    def total(self) -> Fraction:
        return self.aggregate().total()


@dataclass(frozen=True)
class StepAction:
    """
    What the switch does during one time step

    Attributes:
        kind: 'send', 'switch' or 'idle'
        matching: The configured matching while sending
        sent: Data moved during the step (None when credited per block)
    """
    kind: str
    matching: Optional[Matching] = None
    sent: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in ACTION_KINDS:
            raise InvariantViolationError(f"unknown action kind: {self.kind}")
        if self.kind == SEND and self.matching is None:
            raise InvariantViolationError("a send step needs a matching")


@dataclass(frozen=True)
class OnlineRun:
    """
    Record of one online execution

    Attributes:
        actions: One action per time step of the run
        blocks: Block schedules in execution order (blocked algorithm only)
        matchings: Matching used at every arrival step (no-delay algorithm only)
        credits: Data credited per block or per step
        total: Total data sent
        delta: Switching delay the run was charged with
    """
    actions: Tuple[StepAction, ...] = ()
    blocks: Tuple[Schedule, ...] = ()
    matchings: Tuple[Matching, ...] = ()
    credits: Tuple[Fraction, ...] = ()
    total: Fraction = Fraction(0)
    delta: Fraction = Fraction(0)

    @property
    def length(self) -> int:
        return len(self.actions)

    def counts(self) -> Dict[str, int]:
        counts = {kind: 0 for kind in ACTION_KINDS}
        for action in self.actions:
            counts[action.kind] += 1
        return counts

    @property
    def sends(self) -> int:
        return self.counts()[SEND]

    @property
    def switches(self) -> int:
        return self.counts()[SWITCH]

    @property
    def idles(self) -> int:
        return self.counts()[IDLE]

    def check_accounting(self):
        """
        Step accounting: every step is exactly one action, and every
        configuration of every block is preceded by delta switch steps

        Raises:
            InvariantViolationError: on any mismatch
        """
        counts = self.counts()
        if sum(counts.values()) != self.length:
            raise InvariantViolationError("actions do not cover the run")

        configs = sum(len(block) for block in self.blocks)
        if self.blocks and counts[SWITCH] != self.delta * configs:
            raise InvariantViolationError(
                f"{counts[SWITCH]} switch steps for {configs} configurations at delta={self.delta}"
            )
        if self.blocks:
            expected_sends = sum((block.data_time for block in self.blocks), Fraction(0))
            if counts[SEND] != expected_sends:
                raise InvariantViolationError(
                    f"{counts[SEND]} send steps, block schedules hold {expected_sends}"
                )
