"""
Circuit Core - Configuration LP
Duration profiles, the configuration LP solved by column generation,
and randomized rounding of its fractional solutions

For a duration profile (alpha_1..alpha_k) the LP is

    max   sum_e z_e
    s.t.  sum_M x[M,i] <= 1                              for every slot i
          z_e <= D_e                                      for every edge e
          z_e <= sum_i sum_{M contains e} c_ie x[M,i]   for every edge e
          x, z >= 0

with c_ie = min(alpha_i, D_e) and one variable per (matching, slot). Capping
the coefficients at the demand changes no integral schedule's value but
keeps each slot's contribution to an edge within that edge's demand.

Columns are generated on demand: the dual of the restricted problem prices
matchings through a maximum weight matching under the duals of the last
row family.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_solver_config
from ..core.errors import InvariantViolationError
from ..core.objective import evaluate_throughput
from ..core.streams import make_rng
from ..core.types import (
    Configuration,
    DemandMatrix,
    Edge,
    Instance,
    Matching,
    RationalMatrix,
    Schedule,
    format_rational,
    to_nonnegative,
    to_rational,
)
from ..matching import WeightMatrix, enumerate_matchings, max_weight_matching
from .greedy import greedy_schedule
from .simplex import SimplexTableau

logger = logging.getLogger(__name__)

WEIGHT_TOLERANCE = Fraction(1, 10 ** 12)


# ============================================================================
# DURATION PROFILES
# ============================================================================

@dataclass(frozen=True)
class DurationProfile:
    """
    Durations of the k configuration slots, canonically sorted descending

    Attributes:
        durations: alpha_1 >= ... >= alpha_k >= 0
        delta: Switching delay
        window: Time window W
    """
    durations: Tuple[Fraction, ...]
    delta: Fraction
    window: Fraction

    def __post_init__(self):
        durations = tuple(to_nonnegative(value, 'duration') for value in self.durations)
        object.__setattr__(self, 'durations', durations)
        object.__setattr__(self, 'delta', to_nonnegative(self.delta, 'delta'))
        object.__setattr__(self, 'window', to_nonnegative(self.window, 'window'))
        if not durations:
            raise InvariantViolationError("a duration profile needs at least one slot")
        if self.time_used > self.window:
            raise InvariantViolationError(
                f"profile {self.labels()} needs {self.time_used} time, window is {self.window}"
            )

    @property
    def k(self) -> int:
        return len(self.durations)

    @property
    def data_time(self) -> Fraction:
        return sum(self.durations, Fraction(0))

    @property
    def time_used(self) -> Fraction:
        return self.data_time + self.delta * len(self.durations)

    def labels(self) -> List:
        return [format_rational(value) for value in self.durations]


def _grid_step(window: Fraction, delta: Fraction, k: int, epsilon: Fraction) -> Fraction:
    return epsilon * (window - k * delta) / k


def _check_epsilon(epsilon) -> Fraction:
    epsilon = to_rational(epsilon, 'epsilon')
    if not 0 < epsilon <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {epsilon}")
    return epsilon


def _descending_tuples(slots: int, largest: int, budget: int):
    """Non-increasing tuples of `slots` nonnegative ints, each <= largest, summing to <= budget"""
    if slots == 0:
        yield ()
        return
    for first in range(min(largest, budget), -1, -1):
        for rest in _descending_tuples(slots - 1, first, budget - first):
            yield (first,) + rest


def enumerate_duration_profiles(window, delta, k: int, epsilon) -> List[DurationProfile]:
    """
    All grid profiles for k slots

    The grid step is g = epsilon (W - k delta) / k; every alpha_i is a
    multiple of g and the profile fits the window.

    Args:
        window: Time window W
        delta: Switching delay
        k: Number of slots (>= 1)
        epsilon: Accuracy parameter in (0, 1]

    Returns:
        Profiles sorted by their duration tuples; [] when k delta > W
    """
    window = to_nonnegative(window, 'window')
    delta = to_nonnegative(delta, 'delta')
    epsilon = _check_epsilon(epsilon)
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if k * delta > window:
        return []

    step = _grid_step(window, delta, k, epsilon)
    if step == 0:
        return [DurationProfile((Fraction(0),) * k, delta, window)]

    units = math.floor((window - k * delta) / step)
    tuples = sorted(_descending_tuples(k, units, units))
    return [DurationProfile(tuple(step * unit for unit in units_tuple), delta, window)
            for units_tuple in tuples]


def maximal_profiles(profiles: Sequence[DurationProfile], epsilon) -> List[DurationProfile]:
    """
    Profiles where no slot can grow by one grid step

    Every other profile is dominated slot by slot by a maximal one, and the
    LP value is monotone in each duration.
    """
    epsilon = _check_epsilon(epsilon)
    kept = []
    for profile in profiles:
        step = _grid_step(profile.window, profile.delta, profile.k, epsilon)
        if step == 0 or profile.time_used + step > profile.window:
            kept.append(profile)
    return kept


# ============================================================================
# LP SOLUTION TYPES
# ============================================================================

@dataclass(frozen=True)
class DualPrices:
    """
    Dual values of the restricted LP

    Attributes:
        y: One price per slot (convexity rows)
        a: Per-edge prices of the demand caps
        b: Per-edge prices of the coverage rows
    """
    y: Tuple[Fraction, ...]
    a: RationalMatrix
    b: RationalMatrix

    def __post_init__(self):
        object.__setattr__(self, 'y', tuple(to_nonnegative(value, 'y') for value in self.y))

    def is_edge_feasible(self) -> bool:
        """a_e + b_e >= 1 on every edge"""
        return all(value + self.b[edge] >= 1 for edge, value in self.a.entries())


@dataclass(frozen=True)
class FractionalColumn:
    slot: int
    matching: Matching
    weight: Fraction


@dataclass(frozen=True)
class FractionalSolution:
    """
    Optimal solution of the configuration LP

    Attributes:
        columns: Columns with positive weight
        edge_flow: z_e per edge
        objective: Z_LP = sum of z
        column_count: Number of columns in the final pool
        pricing_rounds: Column generation rounds performed
        duals: Final dual prices (None when built by hand)
    """
    columns: Tuple[FractionalColumn, ...]
    edge_flow: RationalMatrix
    objective: Fraction
    column_count: int = 0
    pricing_rounds: int = 0
    duals: Optional[DualPrices] = field(default=None, compare=False)

    def slot_columns(self, slot: int) -> List[Tuple[Matching, Fraction]]:
        return [(column.matching, column.weight) for column in self.columns if column.slot == slot]

    def check(self, demand: DemandMatrix, profile: DurationProfile):
        """
        Validate the LP constraints exactly

        Raises:
            InvariantViolationError: any constraint fails
        """
        demand.check_shape(self.edge_flow)
        coverage: Dict[Edge, Fraction] = {}
        for slot in range(profile.k):
            total = Fraction(0)
            for matching, weight in self.slot_columns(slot):
                if not 0 <= weight <= 1:
                    raise InvariantViolationError(f"slot {slot} weight {weight} outside [0, 1]")
                total += weight
                for edge in matching:
                    coverage[edge] = coverage.get(edge, Fraction(0)) + profile.durations[slot] * weight
            if total > 1:
                raise InvariantViolationError(f"slot {slot} weights sum to {total}")

        for edge, flow in self.edge_flow.entries():
            if flow > demand[edge]:
                raise InvariantViolationError(f"edge {edge} flow {flow} exceeds demand {demand[edge]}")
            if flow > coverage.get(edge, Fraction(0)):
                raise InvariantViolationError(f"edge {edge} flow {flow} exceeds coverage")

        if self.objective != self.edge_flow.total():
            raise InvariantViolationError("objective differs from total edge flow")


# ============================================================================
# PRICING AND COLUMN GENERATION
# ============================================================================

def price_matching(duals: DualPrices, slot: int, alpha,
                   demand: Optional[DemandMatrix] = None) -> Optional[Tuple[Matching, Fraction]]:
    """
    Most violated column of one slot

    Args:
        duals: Current dual prices
        slot: Slot index i
        alpha: Duration of the slot
        demand: When given, edge e is worth b_e * min(alpha, D_e) instead of
            alpha * b_e (the capped coefficients the LP uses)

    Returns:
        (matching, column value - y_i) when that is positive, else None
    """
    alpha = to_nonnegative(alpha, 'alpha')
    if alpha == 0:
        return None

    if demand is None:
        matching, weight = max_weight_matching(WeightMatrix(duals.b.values))
        value = alpha * weight
    else:
        duals.b.check_shape(demand)
        weights = WeightMatrix(tuple(
            tuple(price * min(alpha, cap) for price, cap in zip(prices, caps))
            for prices, caps in zip(duals.b.values, demand.values)
        ))
        matching, value = max_weight_matching(weights)

    violation = value - duals.y[slot]
    if violation > 0:
        return matching, violation
    return None


class _RestrictedProblem:
    """The configuration LP over a growing column pool"""

    def __init__(self, demand: DemandMatrix, profile: DurationProfile):
        self.demand = demand
        self.profile = profile
        self.edges: List[Edge] = demand.support()
        self.slots: List[int] = [i for i, alpha in enumerate(profile.durations) if alpha > 0]

        self.slot_row = {slot: row for row, slot in enumerate(self.slots)}
        base = len(self.slots)
        self.cap_row = {edge: base + index for index, edge in enumerate(self.edges)}
        base += len(self.edges)
        self.cover_row = {edge: base + index for index, edge in enumerate(self.edges)}
        rows = base + len(self.edges)

        rhs = [Fraction(1)] * len(self.slots)
        rhs += [demand[edge] for edge in self.edges]
        rhs += [Fraction(0)] * len(self.edges)
        self.rows = rows
        self.tableau = SimplexTableau(rhs)

        self.columns: List[Tuple[int, Matching]] = []
        self.pool = {slot: set() for slot in self.slots}
        self.flow_columns: List[int] = []
        for edge in self.edges:
            coefficients = [Fraction(0)] * rows
            coefficients[self.cap_row[edge]] = Fraction(1)
            coefficients[self.cover_row[edge]] = Fraction(1)
            self.flow_columns.append(self.tableau.add_column(coefficients, Fraction(1)))

    def add(self, slot: int, matching: Matching) -> bool:
        """Add a column; False when it is already in the pool or useless"""
        if slot not in self.pool or not len(matching) or matching in self.pool[slot]:
            return False
        alpha = self.profile.durations[slot]
        coefficients = [Fraction(0)] * self.rows
        coefficients[self.slot_row[slot]] = Fraction(1)
        for edge in matching:
            coefficients[self.cover_row[edge]] = -min(alpha, self.demand[edge])
        self.tableau.add_column(coefficients, Fraction(0))
        self.columns.append((slot, matching))
        self.pool[slot].add(matching)
        return True

    def duals(self) -> DualPrices:
        senders, receivers = self.demand.shape
        prices = self.tableau.duals()
        y = [Fraction(0)] * self.profile.k
        for slot, row in self.slot_row.items():
            y[slot] = prices[row]
        a = {edge: Fraction(1) for edge, _ in self.demand.entries()}
        b = {edge: Fraction(0) for edge, _ in self.demand.entries()}
        for edge in self.edges:
            a[edge] = prices[self.cap_row[edge]]
            b[edge] = prices[self.cover_row[edge]]
        return DualPrices(
            tuple(y),
            RationalMatrix.from_edges(senders, receivers, a),
            RationalMatrix.from_edges(senders, receivers, b),
        )

    def solution(self, rounds: int) -> FractionalSolution:
        senders, receivers = self.demand.shape
        values = self.tableau.primal()
        flows = {edge: values[index] for edge, index in zip(self.edges, self.flow_columns)}
        offset = len(self.flow_columns)
        columns = tuple(
            FractionalColumn(slot, matching, values[offset + position])
            for position, (slot, matching) in enumerate(self.columns)
            if values[offset + position] > 0
        )
        return FractionalSolution(
            columns=columns,
            edge_flow=RationalMatrix.from_edges(senders, receivers, flows),
            objective=self.tableau.value,
            column_count=len(self.columns),
            pricing_rounds=rounds,
            duals=self.duals(),
        )


def solve_configuration_lp(demand: DemandMatrix, profile: DurationProfile,
                           seed_matchings: Optional[Sequence[Matching]] = None,
                           exhaustive: bool = False) -> FractionalSolution:
    """
    Optimal fractional solution of the configuration LP

    Args:
        demand: Demand matrix D
        profile: Slot durations
        seed_matchings: Initial columns, offered to every slot
        exhaustive: Put every matching of the support in the pool up front
            instead of generating columns

    Returns:
        FractionalSolution with exact weights
    """
    problem = _RestrictedProblem(demand, profile)
    senders, receivers = demand.shape
    support = set(problem.edges)

    if exhaustive:
        max_side = get_solver_config('lp')['exhaustive_max_side']
        if max(senders, receivers) > max_side:
            raise InvariantViolationError(
                f"exhaustive LP is limited to sides <= {max_side}, got {senders}x{receivers}"
            )
        for matching in enumerate_matchings(senders, receivers, problem.edges, include_empty=False):
            for slot in problem.slots:
                problem.add(slot, matching)
    else:
        for slot in problem.slots:
            for matching in seed_matchings or ():
                problem.add(slot, Matching(tuple(edge for edge in matching if edge in support)))
            capped = WeightMatrix(demand.capped_minimum(profile.durations[slot]).values)
            problem.add(slot, max_weight_matching(capped)[0])

    max_rounds = get_solver_config('lp')['max_pricing_rounds']
    rounds = 0
    while True:
        problem.tableau.solve()
        if exhaustive:
            break

        duals = problem.duals()
        added = False
        for slot in problem.slots:
            priced = price_matching(duals, slot, profile.durations[slot], demand)
            if priced is None:
                continue
            matching, violation = priced
            if matching in problem.pool[slot]:
                raise InvariantViolationError(
                    f"pricing returned pooled column {matching} for slot {slot} (violation {violation})"
                )
            problem.add(slot, matching)
            added = True

        rounds += 1
        logger.debug(f"pricing round {rounds}: Z={problem.tableau.value} columns={len(problem.columns)}")
        if not added:
            break
        if rounds >= max_rounds:
            raise InvariantViolationError(f"column generation did not converge in {max_rounds} rounds")

    return problem.solution(rounds)


# ============================================================================
# RANDOMIZED ROUNDING
# ============================================================================

def _generator(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return make_rng(int(seed), 'rounding')


def round_solution(sol: FractionalSolution, profile: DurationProfile, seed) -> Schedule:
    """
    Pick one matching per slot independently with probability x[M, i]

    A slot stays empty with probability 1 - sum_M x[M, i]. One uniform draw
    is consumed per slot, so equal seeds give equal schedules.

    Args:
        sol: Fractional solution
        profile: Its duration profile
        seed: Integer seed (rounding stream) or a numpy Generator

    Returns:
        Schedule with the profile's delta and window
    """
    rng = _generator(seed)
    configs = []
    for slot, alpha in enumerate(profile.durations):
        options = sol.slot_columns(slot)
        total = sum((weight for _, weight in options), Fraction(0))
        if total > 1 + WEIGHT_TOLERANCE:
            raise InvariantViolationError(f"slot {slot} weights sum to {total} > 1")

        draw = Fraction(rng.random())
        cumulative = Fraction(0)
        for matching, weight in options:
            cumulative += weight
            if draw < cumulative:
                if alpha > 0 and len(matching):
                    configs.append(Configuration(matching, alpha))
                break

    return Schedule(tuple(configs), profile.delta, profile.window)


def expected_capped_sum(cap, coefficients: Sequence, probabilities: Sequence) -> Fraction:
    """
    E[min(B, sum_i b_i Y_i)] for independent Bernoulli Y_i, by outcome enumeration

    Args:
        cap: B
        coefficients: b_i
        probabilities: P(Y_i = 1)
    """
    cap = to_rational(cap, 'cap')
    weights = [to_rational(value, 'coefficient') for value in coefficients]
    chances = [to_rational(value, 'probability') for value in probabilities]
    if len(weights) != len(chances):
        raise ValueError("coefficients and probabilities differ in length")

    expectation = Fraction(0)
    for outcome in itertools.product((0, 1), repeat=len(weights)):
        chance = Fraction(1)
        total = Fraction(0)
        for hit, weight, p in zip(outcome, weights, chances):
            chance *= p if hit else 1 - p
            total += weight * hit
        expectation += chance * min(cap, total)
    return expectation


def expected_rounded_throughput(sol: FractionalSolution, profile: DurationProfile,
                                demand: DemandMatrix) -> Fraction:
    """Exact expected f of round_solution, enumerating every joint slot outcome"""
    per_slot = []
    for slot, alpha in enumerate(profile.durations):
        options = sol.slot_columns(slot)
        rest = 1 - sum((weight for _, weight in options), Fraction(0))
        choices = [(Configuration(matching, alpha), weight) for matching, weight in options]
        if rest > 0:
            choices.append((None, rest))
        per_slot.append(choices)

    expectation = Fraction(0)
    for outcome in itertools.product(*per_slot):
        chance = Fraction(1)
        configs = []
        for config, weight in outcome:
            chance *= weight
            if config is not None:
                configs.append(config)
        expectation += chance * evaluate_throughput(configs, demand)
    return expectation


# ============================================================================
# END-TO-END
# ============================================================================

@dataclass(frozen=True)
class LpReport:
    """
    Outcome of an LP-based solve

    Attributes:
        schedule: Realized-best rounded schedule
        lp_objective: Z_LP of the chosen profile
        profile: The chosen profile (None when nothing was solved)
        throughputs: f of each rounding, in repetition order
        diagnostics: Per-profile dictionaries (Z_LP, columns, pricing rounds)
    """
    schedule: Schedule
    lp_objective: Fraction = Fraction(0)
    profile: Optional[DurationProfile] = None
    throughputs: Tuple[Fraction, ...] = ()
    diagnostics: Tuple[dict, ...] = ()

    @property
    def best_throughput(self) -> Fraction:
        return max(self.throughputs, default=Fraction(0))

    @property
    def mean_throughput(self) -> Fraction:
        if not self.throughputs:
            return Fraction(0)
        return sum(self.throughputs, Fraction(0)) / len(self.throughputs)


def default_slot_count(inst: Instance) -> int:
    """floor(W / delta) configurations fit the window; at least one is always tried"""
    if inst.delta == 0:
        return 1
    return max(1, math.floor(inst.window / inst.delta))


def lp_schedule_report(inst: Instance, k: int, epsilon, seed: int = 0,
                       repetitions: Optional[int] = None,
                       exhaustive: bool = False) -> LpReport:
    """
    Solve the LP for every maximal profile with up to k slots, round the best

    Args:
        inst: Problem instance
        k: Largest number of configurations
        epsilon: Grid accuracy in (0, 1]
        seed: Root seed; rounding r of profile p uses stream (rounding, p, r)
        repetitions: Number of roundings (default from SOLVER['lp'])
        exhaustive: Use the enumerate-all-matchings LP

    Returns:
        LpReport
    """
    epsilon = _check_epsilon(epsilon)
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if repetitions is None:
        repetitions = get_solver_config('lp')['repetitions']

    if k * inst.delta > inst.window or inst.demand.is_zero():
        return LpReport(inst.empty_schedule())

    seeds = [config.matching for config in greedy_schedule(inst).configs]
    best: Optional[Tuple[int, DurationProfile, FractionalSolution]] = None
    diagnostics = []
    index = 0
    for slots in range(1, k + 1):
        profiles = maximal_profiles(
            enumerate_duration_profiles(inst.window, inst.delta, slots, epsilon), epsilon
        )
        for profile in profiles:
            sol = solve_configuration_lp(inst.demand, profile, seeds, exhaustive=exhaustive)
            diagnostics.append({
                'profile_index': index,
                'durations': profile.labels(),
                'lp_objective': format_rational(sol.objective),
                'columns': sol.column_count,
                'pricing_rounds': sol.pricing_rounds,
            })
            if best is None or sol.objective > best[2].objective:
                best = (index, profile, sol)
            index += 1

    if best is None:
        return LpReport(inst.empty_schedule(), diagnostics=tuple(diagnostics))

    profile_index, profile, sol = best
    chosen: Optional[Schedule] = None
    chosen_value = None
    values = []
    for repetition in range(repetitions):
        rounded = round_solution(sol, profile, make_rng(seed, 'rounding', profile_index, repetition))
        value = evaluate_throughput(rounded, inst.demand)
        values.append(value)
        if chosen_value is None or value > chosen_value:
            chosen, chosen_value = rounded, value

    if chosen is None:
        chosen = inst.empty_schedule()
    logger.debug(
        f"lp: {index} profiles, best {profile.labels()} Z={sol.objective}, "
        f"realized best {chosen_value}"
    )
    return LpReport(
        schedule=inst.schedule(chosen.configs),
        lp_objective=sol.objective,
        profile=profile,
        throughputs=tuple(values),
        diagnostics=tuple(diagnostics),
    )


def lp_schedule(inst: Instance, k: int, epsilon, seed: int = 0,
                repetitions: Optional[int] = None) -> Schedule:
    """Realized-best rounded schedule of the best profile (see lp_schedule_report)"""
    return lp_schedule_report(inst, k, epsilon, seed, repetitions).schedule
