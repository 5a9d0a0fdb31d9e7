"""
Tests for the problem model, the throughput objective and the window shrink
"""

import math
from fractions import Fraction

import pytest

from circuit_core.core import (
    CERTIFICATE_ONE_MINUS_INV_E,
    GREEDY_THRESHOLD,
    ONE_MINUS_INV_E_LOWER,
    ONE_MINUS_INV_E_UPPER,
    Configuration,
    DemandMatrix,
    DimensionMismatchError,
    GuaranteeNotApplicableError,
    InfeasibleScheduleError,
    InvariantViolationError,
    Matching,
    Schedule,
    derive_seed,
    evaluate_throughput,
    integral_schedule,
    is_feasible,
    make_rng,
    residual,
    shrink_schedule,
    to_rational,
)

DIAGONAL = Matching(((0, 0), (1, 1)))


class TestTypes:

    def test_rational_inputs_are_exact(self):
        assert to_rational(0.1) == Fraction(1, 10)
        assert to_rational('3/4') == Fraction(3, 4)
        assert to_rational(7) == Fraction(7)

    @pytest.mark.parametrize('bad', [True, float('inf'), 'abc', None])
    def test_rejects_non_numbers(self, bad):
        with pytest.raises(InvariantViolationError):
            to_rational(bad)

    def test_demand_rejects_negative_entries(self):
        with pytest.raises(InvariantViolationError):
            DemandMatrix([[1, -1]])

    def test_demand_rejects_ragged_rows(self):
        with pytest.raises(DimensionMismatchError):
            DemandMatrix([[1, 2], [3]])

    def test_matching_rejects_shared_endpoints(self):
        with pytest.raises(InvariantViolationError):
            Matching(((0, 0), (0, 1)))
        with pytest.raises(InvariantViolationError):
            Matching(((0, 1), (1, 1)))

    def test_matching_edges_are_sorted(self):
        assert Matching(((1, 1), (0, 0))).edges == ((0, 0), (1, 1))

    def test_matching_outside_instance(self):
        with pytest.raises(DimensionMismatchError):
            Matching(((2, 0),)).check_within(2, 2)

    def test_negative_duration_rejected(self):
        with pytest.raises(InvariantViolationError):
            Configuration(DIAGONAL, -1)

    def test_schedule_time_accounting(self):
        schedule = Schedule((Configuration(DIAGONAL, 2), Configuration(DIAGONAL, '1/2')), 1, 10)
        assert schedule.data_time == Fraction(5, 2)
        assert schedule.switch_time == 2
        assert schedule.time_used == Fraction(9, 2)


class TestThroughput:

    def test_empty_schedule_sends_nothing(self):
        assert evaluate_throughput(Schedule(), DemandMatrix([[3, 1]])) == 0

    def test_direct_definition(self):
        demand = DemandMatrix([[3, 0], [0, 2]])
        assert evaluate_throughput([Configuration(DIAGONAL, 2)], demand) == 4

    def test_demand_caps_repeated_edges(self):
        edge = Matching(((0, 0),))
        demand = DemandMatrix([[5]])
        assert evaluate_throughput([Configuration(edge, 3), Configuration(edge, 4)], demand) == 5

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            evaluate_throughput([Configuration(Matching(((2, 2),)), 1)], DemandMatrix([[1, 1], [1, 1]]))

    def test_residual_examples(self):
        demand = DemandMatrix([[3, 0], [0, 2]])
        assert residual(demand, [Configuration(DIAGONAL, 2)]) == DemandMatrix([[1, 0], [0, 0]])
        assert residual(demand, []) == demand
        assert residual(demand, [Configuration(DIAGONAL, 3)]).is_zero()

    def test_conservation_and_order(self, random_schedule):
        for index in range(50):
            rng = make_rng(11, 'instance', index)
            demand = DemandMatrix(rng.integers(0, 5, size=(3, 3)).tolist())
            configs = random_schedule(11, index, 3, 3, 4)

            sent = evaluate_throughput(configs, demand)
            assert sent + residual(demand, configs).total() == demand.total()
            assert 0 <= sent <= demand.total()
            assert evaluate_throughput(list(reversed(configs)), demand) == sent

    def test_monotone_and_submodular(self, random_schedule):
        # A and B are independent random subsets of one pool of configurations
        for index in range(1000):
            rng = make_rng(12, 'instance', index)
            demand = DemandMatrix(rng.integers(0, 5, size=(2, 3)).tolist())
            pool = random_schedule(12, index, 2, 3, 6)
            in_a = rng.random(len(pool)) < 0.5
            in_b = rng.random(len(pool)) < 0.5

            a = [config for config, keep in zip(pool, in_a) if keep]
            b = [config for config, keep in zip(pool, in_b) if keep]
            union = [config for config, x, y in zip(pool, in_a, in_b) if x or y]
            intersection = [config for config, x, y in zip(pool, in_a, in_b) if x and y]

            assert evaluate_throughput(a, demand) <= evaluate_throughput(union, demand)
            assert evaluate_throughput(intersection, demand) <= evaluate_throughput(b, demand)
            assert (evaluate_throughput(a, demand) + evaluate_throughput(b, demand)
                    >= evaluate_throughput(union, demand) + evaluate_throughput(intersection, demand))


class TestFeasibility:

    def test_empty_schedule_fits_zero_window(self):
        assert is_feasible(Schedule((), 0, 0))

    def test_exact_fit(self):
        assert is_feasible(Schedule((Configuration(DIAGONAL, 2),), 1, 3))

    def test_overrun(self):
        configs = (Configuration(DIAGONAL, 2), Configuration(DIAGONAL, 2))
        assert not is_feasible(Schedule(configs, 1, 5))

    def test_integral_schedule_floors_and_drops(self):
        schedule = Schedule((Configuration(DIAGONAL, '5/2'), Configuration(DIAGONAL, '1/2')), 1, 6)
        floored = integral_schedule(schedule)
        assert [config.duration for config in floored] == [2]
        assert floored.time_used <= schedule.time_used


class TestShrink:

    def test_trims_long_configuration(self):
        edge = Matching(((0, 0),))
        demand = DemandMatrix([[8]])
        schedule = Schedule((Configuration(edge, 8),), 1, 10)

        shrunk = shrink_schedule(schedule, demand)
        assert shrunk.window == 9
        assert [config.duration for config in shrunk] == [7]
        assert evaluate_throughput(shrunk, demand) == 7

    def test_zero_delay_is_identity(self):
        schedule = Schedule((Configuration(DIAGONAL, 2),), 0, 4)
        assert shrink_schedule(schedule, DemandMatrix([[2, 0], [0, 2]])) is schedule

    def test_unit_configurations_lose_one(self):
        edge = Matching(((0, 0),))
        demand = DemandMatrix([[4]])
        schedule = Schedule(tuple(Configuration(edge, 1) for _ in range(4)), 1, 8)

        shrunk = shrink_schedule(schedule, demand)
        assert len(shrunk) == 3
        assert evaluate_throughput(shrunk, demand) == 3
        assert 3 == (1 - Fraction(2, 8)) * 4

    def test_guarantee_not_applicable(self):
        schedule = Schedule((Configuration(DIAGONAL, 1),), 1, 2)
        with pytest.raises(GuaranteeNotApplicableError):
            shrink_schedule(schedule, DemandMatrix([[1, 0], [0, 1]]))

    def test_infeasible_input(self):
        schedule = Schedule((Configuration(DIAGONAL, 5),), 1, 4)
        with pytest.raises(InfeasibleScheduleError):
            shrink_schedule(schedule, DemandMatrix([[1, 0], [0, 1]]))

    def test_time_and_ratio_bounds(self, random_schedule):
        for index in range(1000):
            rng = make_rng(5, 'instance', index)
            demand = DemandMatrix(rng.integers(0, 4, size=(2, 2)).tolist())
            delta = int(rng.integers(1, 3))
            configs = random_schedule(5, index, 2, 2, int(rng.integers(1, 5)))
            used = sum(config.duration for config in configs) + delta * len(configs)
            window = max(used, 2 * delta + 1) + int(rng.integers(0, 3))
            schedule = Schedule(tuple(configs), delta, window)

            shrunk = shrink_schedule(schedule, demand)
            assert shrunk.time_used <= window - delta
            assert evaluate_throughput(shrunk, demand) >= (
                (1 - Fraction(2 * delta, window)) * evaluate_throughput(schedule, demand)
            )


class TestConstants:

    def test_threshold_is_a_lower_bound_within_tolerance(self):
        exact = math.e / (2 * (math.e - 1))
        assert abs(float(GREEDY_THRESHOLD) - exact) < 1e-11
        assert GREEDY_THRESHOLD < Fraction(791, 1000)

    def test_one_minus_inv_e_bracket(self):
        exact = 1 - 1 / math.e
        assert abs(float(ONE_MINUS_INV_E_LOWER) - exact) < 1e-11
        assert abs(float(ONE_MINUS_INV_E_UPPER) - exact) < 1e-11
        assert ONE_MINUS_INV_E_UPPER - ONE_MINUS_INV_E_LOWER == Fraction(1, 10 ** 12)
        assert CERTIFICATE_ONE_MINUS_INV_E < ONE_MINUS_INV_E_LOWER


class TestStreams:

    def test_same_arguments_same_draws(self):
        assert make_rng(3, 'rounding', 1, 2).random() == make_rng(3, 'rounding', 1, 2).random()

    def test_streams_are_independent(self):
        assert make_rng(3, 'rounding').random() != make_rng(3, 'instance').random()

    def test_unknown_stream(self):
        with pytest.raises(ValueError):
            make_rng(0, 'weather')

    def test_negative_seed(self):
        with pytest.raises(ValueError):
            make_rng(-1, 'rounding')

    def test_derived_seed_is_stable(self):
        assert derive_seed(9, 'rounding', 4) == derive_seed(9, 'rounding', 4)
        assert 0 <= derive_seed(9, 'rounding', 4) < 2 ** 31
