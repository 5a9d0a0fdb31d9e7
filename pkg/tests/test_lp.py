"""
Tests for the exact simplex, duration profiles, the configuration LP and rounding
"""

import itertools
from fractions import Fraction

import numpy as np
import pytest

from circuit_core.core import (
    CERTIFICATE_ONE_MINUS_INV_E,
    Configuration,
    DemandMatrix,
    Instance,
    InvariantViolationError,
    Matching,
    RationalMatrix,
    evaluate_throughput,
    is_feasible,
    make_rng,
    schedule_load,
)
from circuit_core.matching import enumerate_matchings
from circuit_core.offline import (
    DualPrices,
    DurationProfile,
    FractionalColumn,
    FractionalSolution,
    SimplexTableau,
    UnboundedProgramError,
    default_slot_count,
    enumerate_duration_profiles,
    expected_capped_sum,
    expected_rounded_throughput,
    lp_schedule,
    lp_schedule_report,
    maximal_profiles,
    price_matching,
    round_solution,
    solve_configuration_lp,
    solve_lp,
)
from circuit_core.oracle import optimal_schedule_integer

DIAGONAL = Matching(((0, 0), (1, 1)))


def _durations(profiles):
    return [tuple(profile.durations) for profile in profiles]


class TestSimplex:

    def test_degenerate_vertex(self):
        a = [[1, 1], [1, 3], [1, 0]]
        objective, primal, duals = solve_lp(a, [4, 6, 3], [3, 2])
        assert objective == 11
        assert primal == [3, 1]
        assert all(value >= 0 for value in duals)
        assert 4 * duals[0] + 6 * duals[1] + 3 * duals[2] == 11

    def test_unbounded(self):
        with pytest.raises(UnboundedProgramError):
            solve_lp([[-1]], [1], [1])

    def test_negative_rhs(self):
        with pytest.raises(InvariantViolationError):
            SimplexTableau([Fraction(-1)])

    def test_warm_start_after_adding_a_column(self):
        tableau = SimplexTableau([Fraction(2), Fraction(3)])
        tableau.add_column([1, 0], 1)
        assert tableau.solve() == 2

        tableau.add_column([0, 1], 1)
        assert tableau.solve() == 5
        assert tableau.primal() == [2, 3]


class TestProfiles:

    def test_single_slot_grid(self):
        profiles = enumerate_duration_profiles(3, 1, 1, Fraction(1, 2))
        assert _durations(profiles) == [(0,), (1,), (2,)]

    def test_too_many_slots(self):
        assert enumerate_duration_profiles(3, 1, 4, Fraction(1, 2)) == []

    def test_two_slot_grid(self):
        profiles = enumerate_duration_profiles(4, 1, 2, 1)
        assert _durations(profiles) == [(0, 0), (1, 0), (1, 1), (2, 0)]
        assert all(list(profile.durations) == sorted(profile.durations, reverse=True) for profile in profiles)

    def test_zero_step(self):
        profiles = enumerate_duration_profiles(2, 1, 2, Fraction(1, 2))
        assert _durations(profiles) == [(0, 0)]

    def test_maximal_profiles(self):
        profiles = enumerate_duration_profiles(3, 1, 1, Fraction(1, 2))
        assert _durations(maximal_profiles(profiles, Fraction(1, 2))) == [(2,)]

    @pytest.mark.parametrize('epsilon', [0, Fraction(-1, 2), Fraction(3, 2)])
    def test_epsilon_range(self, epsilon):
        with pytest.raises(ValueError):
            enumerate_duration_profiles(3, 1, 1, epsilon)

    def test_profile_must_fit(self):
        with pytest.raises(InvariantViolationError):
            DurationProfile((3,), 1, 3)


class TestConfigurationLp:

    def test_single_edge(self):
        profile = DurationProfile((2,), 1, 3)
        sol = solve_configuration_lp(DemandMatrix([[2]]), profile)
        assert sol.objective == 2
        assert sol.slot_columns(0) == [(Matching(((0, 0),)), 1)]
        sol.check(DemandMatrix([[2]]), profile)

    def test_zero_demand(self):
        sol = solve_configuration_lp(DemandMatrix([[0, 0], [0, 0]]), DurationProfile((1,), 1, 2))
        assert sol.objective == 0

    def test_all_ones(self):
        demand = DemandMatrix([[1, 1], [1, 1]])
        profile = DurationProfile((1,), 1, 2)
        sol = solve_configuration_lp(demand, profile)
        assert sol.objective == 2
        sol.check(demand, profile)

    def test_final_duals_are_feasible(self):
        demand = DemandMatrix([[3, 1], [2, 2]])
        sol = solve_configuration_lp(demand, DurationProfile((2, 1), 1, 5))
        assert sol.duals.is_edge_feasible()

    def test_column_generation_matches_full_enumeration(self):
        profile = DurationProfile((2, 1), 1, 5)
        for index in range(25):
            rng = make_rng(41, 'instance', index)
            demand = DemandMatrix(rng.integers(0, 4, size=(3, 3)).tolist())

            generated = solve_configuration_lp(demand, profile)
            full = solve_configuration_lp(demand, profile, exhaustive=True)
            assert generated.objective == full.objective
            generated.check(demand, profile)

    def test_bounds_every_integral_schedule(self):
        profile = DurationProfile((2, 1), 1, 5)
        matchings = enumerate_matchings(2, 2)
        for index in range(25):
            rng = make_rng(42, 'instance', index)
            demand = DemandMatrix(rng.integers(0, 4, size=(2, 2)).tolist())

            sol = solve_configuration_lp(demand, profile)
            best = max(
                evaluate_throughput([Configuration(first, 2), Configuration(second, 1)], demand)
                for first, second in itertools.product(matchings, repeat=2)
            )
            assert sol.objective >= best

    def test_exhaustive_size_guard(self):
        profile = DurationProfile((1,), 0, 1)
        with pytest.raises(InvariantViolationError):
            solve_configuration_lp(DemandMatrix([[1] * 6]), profile, exhaustive=True)


class TestPricing:

    def _duals(self, y):
        return DualPrices((y,), RationalMatrix([[0, 1], [1, 0]]), RationalMatrix([[1, 0], [0, 1]]))

    def test_violated_column(self):
        assert price_matching(self._duals(1), 0, 2) == (DIAGONAL, 3)

    def test_no_violation(self):
        assert price_matching(self._duals(5), 0, 2) is None

    def test_capped_coefficients(self):
        # Edge (1, 1) carries only 1 unit of demand, so it is worth 1 * b_e
        demand = DemandMatrix([[5, 0], [0, 1]])
        assert price_matching(self._duals(1), 0, 2, demand) == (DIAGONAL, 2)
        assert price_matching(self._duals(3), 0, 2, demand) is None

    def test_zero_duration_slot(self):
        assert price_matching(self._duals(0), 0, 0) is None

    def test_edge_feasibility(self):
        assert self._duals(0).is_edge_feasible()
        weak = DualPrices((0,), RationalMatrix([[0, 0], [0, 0]]), RationalMatrix([[1, 0], [0, 1]]))
        assert not weak.is_edge_feasible()


def _assert_capped_sum_bound(sizes):
    """Every system with b_i <= B, b_i in {1, 2}, B in {1, 2, 3} and p_i in {1/4, 1/2, 3/4}"""
    chances = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    for size in sizes:
        for cap in (1, 2, 3):
            for weights in itertools.product((1, 2), repeat=size):
                if max(weights) > cap:
                    continue
                for probabilities in itertools.product(chances, repeat=size):
                    mean = sum((b * p for b, p in zip(weights, probabilities)), Fraction(0))
                    value = expected_capped_sum(cap, weights, probabilities)
                    assert value >= CERTIFICATE_ONE_MINUS_INV_E * min(cap, mean), (cap, weights, probabilities)


def _assert_empirical_edge_flow(count, samples, seed):
    """Sample mean of min(D_e, load_e) stays above (1 - 1/e) z_e, within three standard errors"""
    profile = DurationProfile((2, 1), 1, 5)
    for index in range(count):
        rng = make_rng(seed, 'instance', index)
        demand = DemandMatrix(rng.integers(0, 4, size=(2, 2)).tolist())
        sol = solve_configuration_lp(demand, profile)

        draws = make_rng(seed, 'rounding', index)
        sent = {edge: [] for edge, _ in demand.entries()}
        for _ in range(samples):
            load = schedule_load(round_solution(sol, profile, draws).configs, 2, 2)
            for edge, value in demand.entries():
                sent[edge].append(float(min(value, load[edge])))

        for edge, flow in sol.edge_flow.entries():
            values = np.array(sent[edge])
            spread = 3 * values.std(ddof=1) / np.sqrt(samples)
            assert values.mean() >= float(CERTIFICATE_ONE_MINUS_INV_E * flow) - spread


class _TopDraw(np.random.Generator):
    """Every uniform draw is the largest float below 1"""

    def random(self, *args, **kwargs):
        return 1 - 2.0 ** -53


class TestRounding:

    def _half_and_half(self):
        profile = DurationProfile((2, 1), 1, 5)
        columns = (
            FractionalColumn(0, DIAGONAL, Fraction(1, 2)),
            FractionalColumn(0, Matching(((0, 1), (1, 0))), Fraction(1, 2)),
            FractionalColumn(1, DIAGONAL, Fraction(1, 3)),
        )
        sol = FractionalSolution(columns, RationalMatrix.zeros(2, 2), Fraction(0))
        return sol, profile

    def test_same_seed_same_schedule(self):
        sol, profile = self._half_and_half()
        assert round_solution(sol, profile, 7) == round_solution(sol, profile, 7)

    def test_output_fits_the_profile(self):
        sol, profile = self._half_and_half()
        for seed in range(30):
            schedule = round_solution(sol, profile, seed)
            assert is_feasible(schedule)
            assert len(schedule) <= profile.k

    def test_certain_column_is_always_picked(self):
        profile = DurationProfile((2,), 1, 3)
        sol = FractionalSolution((FractionalColumn(0, DIAGONAL, Fraction(1)),), RationalMatrix.zeros(2, 2), Fraction(0))
        for seed in range(10):
            assert list(round_solution(sol, profile, seed).configs) == [Configuration(DIAGONAL, 2)]

    def test_overfull_slot(self):
        profile = DurationProfile((2,), 1, 3)
        columns = (FractionalColumn(0, DIAGONAL, Fraction(2, 3)),
                   FractionalColumn(0, Matching(((0, 1),)), Fraction(2, 3)))
        sol = FractionalSolution(columns, RationalMatrix.zeros(2, 2), Fraction(0))
        with pytest.raises(InvariantViolationError):
            round_solution(sol, profile, 0)

    def test_expected_capped_sum(self):
        value = expected_capped_sum(1, [1, 1], [Fraction(1, 2), Fraction(1, 2)])
        assert value == Fraction(3, 4)
        assert value >= CERTIFICATE_ONE_MINUS_INV_E * min(1, Fraction(1, 2) + Fraction(1, 2))

    def test_capped_sum_bound_on_small_systems(self):
        _assert_capped_sum_bound(range(1, 4))

    @pytest.mark.slow
    def test_capped_sum_bound_on_larger_systems(self):
        _assert_capped_sum_bound(range(4, 6))

    def test_empirical_edge_flow(self):
        _assert_empirical_edge_flow(count=5, samples=1000, seed=44)

    @pytest.mark.slow
    def test_empirical_edge_flow_at_scale(self):
        _assert_empirical_edge_flow(count=50, samples=10000, seed=45)

    def test_full_slot_always_picks_a_column(self):
        # Ten weights of 1/10 add up to just under 1 in floating point
        matchings = enumerate_matchings(3, 3, include_empty=False)[:10]
        columns = tuple(FractionalColumn(0, matching, Fraction(1, 10)) for matching in matchings)
        sol = FractionalSolution(columns, RationalMatrix.zeros(3, 3), Fraction(0))
        profile = DurationProfile((1,), 1, 2)

        schedule = round_solution(sol, profile, _TopDraw(np.random.PCG64(0)))
        assert list(schedule.configs) == [Configuration(matchings[-1], 1)]

    def test_expected_rounding_keeps_the_lp_fraction(self):
        profile = DurationProfile((2, 1), 1, 5)
        for index in range(15):
            rng = make_rng(43, 'instance', index)
            demand = DemandMatrix(rng.integers(0, 4, size=(2, 2)).tolist())

            sol = solve_configuration_lp(demand, profile)
            expected = expected_rounded_throughput(sol, profile, demand)
            assert expected >= CERTIFICATE_ONE_MINUS_INV_E * sol.objective
            assert expected <= sol.objective


class TestLpSchedule:

    def test_report(self, diagonal_instance):
        report = lp_schedule_report(diagonal_instance, 2, Fraction(1, 2), seed=3)
        assert is_feasible(report.schedule)
        assert len(report.schedule) <= 2
        assert len(report.throughputs) == 8
        assert report.best_throughput == evaluate_throughput(report.schedule, diagonal_instance.demand)
        assert report.best_throughput <= report.lp_objective
        assert report.mean_throughput <= report.best_throughput
        assert [entry['profile_index'] for entry in report.diagnostics] == list(range(len(report.diagnostics)))

    def test_same_seed_same_schedule(self, diagonal_instance):
        first = lp_schedule(diagonal_instance, 2, Fraction(1, 2), seed=9)
        second = lp_schedule(diagonal_instance, 2, Fraction(1, 2), seed=9)
        assert first == second

    def test_too_many_slots_gives_empty(self, diagonal_instance):
        assert len(lp_schedule(diagonal_instance, 6, Fraction(1, 2))) == 0

    def test_zero_demand(self, make_instance):
        report = lp_schedule_report(make_instance([[0, 0], [0, 0]], 1, 5), 2, Fraction(1, 2))
        assert len(report.schedule) == 0
        assert report.diagnostics == ()

    def test_single_edge_is_sent_in_full(self, make_instance):
        inst = make_instance([[2]], 1, 3)
        report = lp_schedule_report(inst, 1, Fraction(1, 2))
        assert report.lp_objective == 2
        assert report.best_throughput == 2


def _certificate_instances(count, seed):
    for delta, window in ((1, 4), (2, 6), (2, 5)):
        for index in range(count):
            rng = make_rng(seed, 'instance', delta, window, index)
            demand = DemandMatrix(rng.integers(0, 4, size=(2, 2)).tolist())
            yield Instance(demand, delta, window)


def _assert_lp_certificate(count, seed, epsilon=Fraction(1, 5)):
    """Realized LP throughput reaches (1 - 1/e - epsilon) of the k-configuration optimum on 95% of instances"""
    checked = misses = 0
    for index, inst in enumerate(_certificate_instances(count, seed)):
        k = default_slot_count(inst)
        _, optimum = optimal_schedule_integer(inst, max_configs=k)
        value = evaluate_throughput(lp_schedule(inst, k, epsilon, seed=index), inst.demand)
        checked += 1
        if value < (CERTIFICATE_ONE_MINUS_INV_E - epsilon) * optimum:
            misses += 1
    assert misses * 20 <= checked, f"{misses} of {checked} below the bound"


class TestLpCertificate:

    def test_small_sample(self):
        _assert_lp_certificate(count=5, seed=46)

    @pytest.mark.slow
    def test_desk_sample(self):
        _assert_lp_certificate(count=40, seed=47)
