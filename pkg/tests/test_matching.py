"""
Tests for the exact matching kernels
"""

from fractions import Fraction

import pytest

from circuit_core.core import InvariantViolationError, Matching, make_rng
from circuit_core.matching import (
    HopcroftKarp,
    MultiEdgeSet,
    WeightMatrix,
    enumerate_matchings,
    max_cardinality_matching,
    max_weight_matching,
)


class TestMaxWeight:

    def test_disjoint_positive_edges(self):
        matching, weight = max_weight_matching(WeightMatrix([[3, 0], [0, 2]]))
        assert matching == Matching(((0, 0), (1, 1)))
        assert weight == 5

    def test_anti_diagonal_wins(self):
        matching, weight = max_weight_matching(WeightMatrix([[1, 2], [2, 1]]))
        assert matching == Matching(((0, 1), (1, 0)))
        assert weight == 4

    def test_all_zero(self):
        matching, weight = max_weight_matching(WeightMatrix([[0, 0], [0, 0]]))
        assert len(matching) == 0
        assert weight == 0

    def test_zero_weight_edges_excluded(self):
        matching, weight = max_weight_matching(WeightMatrix([[4, 0], [0, 0]]))
        assert matching == Matching(((0, 0),))
        assert weight == 4

    def test_ties_go_to_the_smallest_edge_set(self):
        matching, _ = max_weight_matching(WeightMatrix([[1, 1], [1, 1]]))
        assert matching == Matching(((0, 0), (1, 1)))

    def test_rectangular_and_fractional(self):
        matching, weight = max_weight_matching(WeightMatrix([['1/2', '1/3', 0]]))
        assert matching == Matching(((0, 0),))
        assert weight == Fraction(1, 2)

    def test_matches_enumeration(self, brute_max_weight):
        for index in range(60):
            rng = make_rng(21, 'instance', index)
            senders = int(rng.integers(1, 5))
            receivers = int(rng.integers(1, 5))
            rows = rng.integers(0, 6, size=(senders, receivers)).tolist()

            matching, weight = max_weight_matching(WeightMatrix(rows))
            assert weight == brute_max_weight(rows)
            assert weight == sum((Fraction(rows[i][j]) for i, j in matching), Fraction(0))


class TestMaxCardinality:

    def test_two_disjoint_edges(self):
        edges = MultiEdgeSet.from_edges(2, 2, [(0, 0), (1, 1)])
        assert len(max_cardinality_matching(edges)) == 2

    def test_path_of_three_edges(self):
        edges = MultiEdgeSet.from_edges(2, 2, [(0, 0), (0, 1), (1, 1)])
        assert max_cardinality_matching(edges) == Matching(((0, 0), (1, 1)))

    def test_ties_go_to_the_smallest_receiver(self):
        edges = MultiEdgeSet.from_edges(2, 2, [(0, 0), (0, 1)])
        assert max_cardinality_matching(edges) == Matching(((0, 0),))

    def test_empty(self):
        assert len(max_cardinality_matching(MultiEdgeSet.empty(3, 2))) == 0

    def test_matches_enumeration(self):
        for index in range(60):
            rng = make_rng(22, 'instance', index)
            senders = int(rng.integers(1, 5))
            receivers = int(rng.integers(1, 5))
            counts = rng.integers(0, 3, size=(senders, receivers)).tolist()
            edges = MultiEdgeSet(counts)

            best = max(
                len(matching)
                for matching in enumerate_matchings(senders, receivers, edges.support())
            )
            matching = max_cardinality_matching(edges)
            assert len(matching) == best
            assert all(edges[edge] > 0 for edge in matching)

    def test_hopcroft_karp_direct(self):
        pairs = HopcroftKarp({0: [0, 1], 1: [0]}).maximum_matching()
        assert pairs == {0: 1, 1: 0}


class TestMultiEdgeSet:

    def test_repeats_add_multiplicity(self):
        edges = MultiEdgeSet.from_edges(2, 2, [(0, 1), (0, 1), (1, 0)])
        assert edges[(0, 1)] == 2
        assert edges.total() == 3

    def test_union_and_removal(self):
        first = MultiEdgeSet.from_edges(2, 2, [(0, 0)])
        second = MultiEdgeSet.from_edges(2, 2, [(0, 0), (1, 1)])
        union = first.union(second)
        assert union[(0, 0)] == 2

        left = union.remove_matching(Matching(((0, 0), (1, 1))))
        assert left == MultiEdgeSet.from_edges(2, 2, [(0, 0)])

    def test_removing_a_missing_edge(self):
        with pytest.raises(InvariantViolationError):
            MultiEdgeSet.empty(2, 2).remove_matching(Matching(((0, 0),)))

    @pytest.mark.parametrize('bad', [-1, 0.5, True])
    def test_multiplicities_are_nonnegative_integers(self, bad):
        with pytest.raises(InvariantViolationError):
            MultiEdgeSet([[bad]])


class TestEnumeration:

    def test_counts(self):
        # 2x2: empty, four single edges, two perfect matchings
        assert len(enumerate_matchings(2, 2)) == 7
        assert len(enumerate_matchings(2, 2, include_empty=False)) == 6
        assert len(enumerate_matchings(3, 3)) == 34

    def test_support_restriction(self):
        found = enumerate_matchings(2, 2, support=[(0, 0), (1, 0)], include_empty=False)
        assert found == [Matching(((0, 0),)), Matching(((1, 0),))]
