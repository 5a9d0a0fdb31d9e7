"""
Shared fixtures: small instances and brute-force reference solvers
"""

import itertools
from fractions import Fraction

import pytest

from circuit_core.core import Configuration, DemandMatrix, Instance, evaluate_throughput, make_rng
from circuit_core.matching import enumerate_matchings


@pytest.fixture
def diagonal_instance():
    """D = [[3, 0], [0, 2]], delta = 1, W = 5 (greedy and oracle both reach 5)"""
    return Instance(DemandMatrix([[3, 0], [0, 2]]), 1, 5)


@pytest.fixture
def make_instance():
    def build(rows, delta, window):
        return Instance(DemandMatrix(rows), delta, window)
    return build


@pytest.fixture
def brute_max_weight():
    """Best total weight over every matching of the complete bipartite graph"""
    def solve(rows):
        senders, receivers = len(rows), len(rows[0])
        return max(
            sum((Fraction(rows[i][j]) for i, j in matching), Fraction(0))
            for matching in enumerate_matchings(senders, receivers)
        )
    return solve


@pytest.fixture
def random_schedule():
    """
    Random configurations with integer durations in 1..max_duration

    Returns a function (seed, index, senders, receivers, count, max_duration) -> list
    """
    def build(seed, index, senders, receivers, count, max_duration=3):
        rng = make_rng(seed, 'generator', index)
        matchings = enumerate_matchings(senders, receivers, include_empty=False)
        configs = []
        for _ in range(count):
            matching = matchings[int(rng.integers(0, len(matchings)))]
            configs.append(Configuration(matching, int(rng.integers(1, max_duration + 1))))
        return configs
    return build


@pytest.fixture
def brute_schedule_value():
    """
    Unmemoized search over ordered sequences of (nonempty matching, integer
    duration); an independent check of the oracle
    """
    def solve(inst: Instance, max_configs=None):
        senders, receivers = inst.demand.shape
        matchings = enumerate_matchings(senders, receivers, include_empty=False)
        delta = int(inst.delta)
        limit = max_configs if max_configs is not None else int(inst.window) + 1

        def search(configs, time):
            best = evaluate_throughput(configs, inst.demand)
            if len(configs) == limit:
                return best
            for matching, alpha in itertools.product(matchings, range(1, time - delta + 1)):
                value = search(configs + [Configuration(matching, alpha)], time - alpha - delta)
                best = max(best, value)
            return best

        return search([], int(inst.window))
    return solve

