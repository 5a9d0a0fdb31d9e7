"""
Circuit Core - Problem Model
Demand matrices, matchings, configurations, schedules and instances

All values are immutable after construction. Demands, durations, the
switching delay and the window are exact rationals (fractions.Fraction);
floats are accepted on input and converted exactly, and float views exist
for reporting only.
"""

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import DimensionMismatchError, InvariantViolationError

Edge = Tuple[int, int]


def to_rational(value, name: str = 'value') -> Fraction:
    """
    Convert a user-supplied number to an exact rational

    Args:
        value: int, Fraction, numbers.Rational, finite float or a "p/q" string
        name: Field name used in error messages

    Returns:
        Fraction equal to the input
    """
    if isinstance(value, bool):
        raise InvariantViolationError(f"{name} must be a number, got a boolean")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InvariantViolationError(f"{name} must be finite, got {value}")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InvariantViolationError(f"{name} is not a rational number: '{value}'") from None
    raise InvariantViolationError(f"{name} must be a number, got {type(value).__name__}")


def to_nonnegative(value, name: str = 'value') -> Fraction:
    """Convert to an exact rational and reject negatives"""
    rational = to_rational(value, name)
    if rational < 0:
        raise InvariantViolationError(f"{name} must be nonnegative, got {rational}")
    return rational


def format_rational(value: Fraction):
    """Encode a rational the way the file formats do: int when integral, else 'p/q'"""
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


# ============================================================================
# MATRICES
# ============================================================================

@dataclass(frozen=True)
class RationalMatrix:
    """
    Dense nonnegative rational matrix indexed (sender, receiver)

    Attributes:
        values: Row-major entries; normalized to a tuple of tuples of Fraction
    """
    values: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.values)
        if not rows or not rows[0]:
            raise InvariantViolationError(f"{type(self).__name__} needs at least one row and one column")

        width = len(rows[0])
        normalized = []
        for i, row in enumerate(rows):
            if len(row) != width:
                raise DimensionMismatchError(
                    f"row {i} has {len(row)} entries, expected {width}"
                )
            normalized.append(tuple(
                to_nonnegative(value, f"entry ({i}, {j})") for j, value in enumerate(row)
            ))
        object.__setattr__(self, 'values', tuple(normalized))

    @classmethod
    def zeros(cls, senders: int, receivers: int):
        """All-zero matrix of the given shape"""
        return cls(tuple((0,) * receivers for _ in range(senders)))

    @classmethod
    def from_edges(cls, senders: int, receivers: int, entries: Mapping[Edge, object]):
        """Build a matrix from a sparse {(sender, receiver): value} mapping"""
        rows = [[Fraction(0)] * receivers for _ in range(senders)]
        for (i, j), value in entries.items():
            if not (0 <= i < senders and 0 <= j < receivers):
                raise DimensionMismatchError(f"edge ({i}, {j}) outside {senders}x{receivers}")
            rows[i][j] = to_nonnegative(value, f"entry ({i}, {j})")
        return cls(tuple(tuple(row) for row in rows))

    @property
    def senders(self) -> int:
        return len(self.values)

    @property
    def receivers(self) -> int:
        return len(self.values[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.senders, self.receivers

    def __getitem__(self, edge: Edge) -> Fraction:
        i, j = edge
        return self.values[i][j]

    def entries(self) -> Iterator[Tuple[Edge, Fraction]]:
        """Iterate ((sender, receiver), value) in row-major order"""
        for i, row in enumerate(self.values):
            for j, value in enumerate(row):
                yield (i, j), value

    def support(self) -> List[Edge]:
        """Edges with a strictly positive entry, row-major order"""
        return [edge for edge, value in self.entries() if value > 0]

    def total(self) -> Fraction:
        """The 1-norm (sum of all entries)"""
        return sum((value for _, value in self.entries()), Fraction(0))

    def is_zero(self) -> bool:
        return all(value == 0 for _, value in self.entries())

    def is_integral(self) -> bool:
        return all(value.denominator == 1 for _, value in self.entries())

    def distinct_positive_values(self) -> List[Fraction]:
        """Sorted distinct positive entries"""
        return sorted({value for _, value in self.entries() if value > 0})

    def check_shape(self, other: 'RationalMatrix'):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape {self.shape} does not match {other.shape}")

    def __add__(self, other: 'RationalMatrix'):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        self.check_shape(other)
        return type(self)(tuple(
            tuple(a + b for a, b in zip(row_a, row_b))
            for row_a, row_b in zip(self.values, other.values)
        ))

    def capped_subtract(self, load: 'RationalMatrix'):
        """Entrywise self - min(self, load); never negative"""
        self.check_shape(load)
        return type(self)(tuple(
            tuple(a - min(a, b) for a, b in zip(row_a, row_b))
            for row_a, row_b in zip(self.values, load.values)
        ))

    def capped_minimum(self, cap: Fraction):
        """Entrywise min(self, cap)"""
        return type(self)(tuple(tuple(min(value, cap) for value in row) for row in self.values))

    def to_rows(self) -> List[List[Fraction]]:
        return [list(row) for row in self.values]

    def to_float_rows(self) -> List[List[float]]:
        """Float view for reporting"""
        return [[float(value) for value in row] for row in self.values]


class DemandMatrix(RationalMatrix):
    """
    Traffic demand matrix D (and residual matrix R): data units per (sender, receiver)
    """


# ============================================================================
# MATCHINGS, CONFIGURATIONS, SCHEDULES
# ============================================================================

@dataclass(frozen=True)
class Matching:
    """
    Set of sender-receiver pairs sharing no endpoint

    Attributes:
        edges: Sorted tuple of (sender, receiver) pairs
    """
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        edges = tuple(sorted({(int(i), int(j)) for i, j in self.edges}))
        senders = set()
        receivers = set()
        for i, j in edges:
            if i < 0 or j < 0:
                raise InvariantViolationError(f"edge ({i}, {j}) has a negative index")
            if i in senders:
                raise InvariantViolationError(f"sender {i} appears twice in matching")
            if j in receivers:
                raise InvariantViolationError(f"receiver {j} appears twice in matching")
            senders.add(i)
            receivers.add(j)
        object.__setattr__(self, 'edges', edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, edge) -> bool:
        return tuple(edge) in self.edges

    def check_within(self, senders: int, receivers: int):
        """Raise DimensionMismatchError when an edge falls outside the instance"""
        for i, j in self.edges:
            if i >= senders or j >= receivers:
                raise DimensionMismatchError(
                    f"matching edge ({i}, {j}) outside {senders}x{receivers} instance"
                )

    def to_matrix(self, senders: int, receivers: int) -> RationalMatrix:
        """0/1 matrix interpretation"""
        self.check_within(senders, receivers)
        return RationalMatrix.from_edges(senders, receivers, {edge: 1 for edge in self.edges})

    def __repr__(self):
        return f"<Matching({list(self.edges)})>"


@dataclass(frozen=True)
class Configuration:
    """
    A matching held for `duration` time units

    Attributes:
        matching: The circuit set
        duration: alpha >= 0 (exact rational)
    """
    matching: Matching
    duration: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'duration', to_nonnegative(self.duration, 'duration'))

    def __repr__(self):
        return f"<Configuration({list(self.matching.edges)}, alpha={self.duration})>"


@dataclass(frozen=True)
class Schedule:
    """
    Ordered multiset of configurations with its switching delay and window

    Each configuration costs duration + delta time units. Order matters
    only for truncation; the throughput objective ignores it.

    Attributes:
        configs: Configurations in execution order
        delta: Switching delay
        window: Time budget W
    """
    configs: Tuple[Configuration, ...] = ()
    delta: Fraction = Fraction(0)
    window: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'configs', tuple(self.configs))
        object.__setattr__(self, 'delta', to_nonnegative(self.delta, 'delta'))
        object.__setattr__(self, 'window', to_nonnegative(self.window, 'window'))

    def __len__(self) -> int:
        return len(self.configs)

    def __iter__(self) -> Iterator[Configuration]:
        return iter(self.configs)

    @property
    def data_time(self) -> Fraction:
        """Total time spent sending (sum of durations)"""
        return sum((config.duration for config in self.configs), Fraction(0))

    @property
    def switch_time(self) -> Fraction:
        """Total time spent switching (one delay per configuration)"""
        return self.delta * len(self.configs)

    @property
    def time_used(self) -> Fraction:
        return self.data_time + self.switch_time

    def with_configs(self, configs: Iterable[Configuration], window: Optional[Fraction] = None) -> 'Schedule':
        """Copy with a different configuration list (and optionally window)"""
        return Schedule(tuple(configs), self.delta, self.window if window is None else window)

    def __repr__(self):
        return (f"<Schedule(configs={len(self.configs)}, time={self.time_used}, "
                f"delta={self.delta}, window={self.window})>")


@dataclass(frozen=True)
class Instance:
    """
    Offline problem instance

    Attributes:
        demand: Demand matrix D
        delta: Switching delay (same units as durations)
        window: Time window W
    """
    demand: DemandMatrix
    delta: Fraction
    window: Fraction

    def __post_init__(self):
        if not isinstance(self.demand, DemandMatrix):
            object.__setattr__(self, 'demand', DemandMatrix(self.demand.values))
        object.__setattr__(self, 'delta', to_nonnegative(self.delta, 'delta'))
        object.__setattr__(self, 'window', to_nonnegative(self.window, 'window'))

    @property
    def senders(self) -> int:
        return self.demand.senders

    @property
    def receivers(self) -> int:
        return self.demand.receivers

    def empty_schedule(self) -> Schedule:
        return Schedule((), self.delta, self.window)

    def schedule(self, configs: Sequence[Configuration]) -> Schedule:
        """Wrap configurations into a schedule carrying this instance's delta and window"""
        return Schedule(tuple(configs), self.delta, self.window)
