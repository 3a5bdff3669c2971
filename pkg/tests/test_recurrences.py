"""Inductive derivations of the hook weight sum and the series oracle."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

import hooklab.recurrences as rc
from hooklab.hookformula import hook_weight_closed_form, hook_weight_sum, tree_weight
from hooklab.multipoly import MultiPoly, falling_factorial
from hooklab.trees import IncreasingTree, enumerate_increasing


def K(r):
    return MultiPoly.sum(r, (MultiPoly.variable(r, i) for i in range(r)))


def k(r, label):
    return MultiPoly.variable(r, label - 1)


class TestSetPartitions:
    def test_small_cases(self):
        assert list(rc.set_partitions(())) == [()]
        assert list(rc.set_partitions((5,))) == [((5,),)]
        assert list(rc.set_partitions((2, 3))) == [((2,), (3,)), ((2, 3),)]

    def test_bell_numbers(self):
        bell = [1, 1, 2, 5, 15, 52, 203]
        for n, b in enumerate(bell):
            parts = list(rc.set_partitions(tuple(range(n))))
            assert len(parts) == b
            for part in parts:
                merged = sorted(x for block in part for x in block)
                assert merged == list(range(n))


class TestSplitVersusClosed:
    def test_base_cases(self):
        one = MultiPoly.const(2, 1)
        assert rc.split_polynomial(2) == one
        assert rc.closed_polynomial(2) == one
        assert rc.split_polynomial(3) == K(3) - 1 == rc.closed_polynomial(3)

    def test_sweep(self):
        for r in range(2, 7):
            assert rc.split_polynomial(r) == rc.closed_polynomial(r)

    def test_summands_cover_each_subset_once(self):
        seen = set()
        for x1, x2, _ in rc.split_summands(5):
            assert set(x1) | set(x2) == {3, 4, 5}
            assert not set(x1) & set(x2)
            seen.add(x1)
        assert len(seen) == 8


class TestConstantTerm:
    def test_three_vertices_by_hand(self):
        lhs, rhs = rc.constant_term_sides(3)
        assert lhs == rhs == k(3, 2) + k(3, 3) - 1

    def test_sweep_both_families(self):
        for r in range(2, 7):
            assert rc.constant_term_check(r)
            for family in (rc.split_polynomial, rc.closed_polynomial):
                lhs, rhs = rc.constant_term_sides(r, family)
                assert lhs == rhs


class TestFiniteDifference:
    def test_two_vertices_is_the_empty_sum(self):
        lhs, rhs = rc.finite_difference_sides(2)
        assert lhs == rhs == MultiPoly.zero(2)

    def test_three_vertices_by_hand(self):
        lhs, rhs = rc.finite_difference_sides(3)
        assert lhs == rhs == MultiPoly.const(3, 1)

    def test_sweep_both_families(self):
        for r in range(2, 7):
            assert rc.finite_difference_check(r)
            for family in (rc.split_polynomial, rc.closed_polynomial):
                lhs, rhs = rc.finite_difference_sides(r, family)
                assert lhs == rhs


class TestGrafting:
    def test_edge_by_hand(self):
        t = IncreasingTree([1, 2], {2: 1})
        lhs, rhs = rc.grafting_law_sides(t)
        assert lhs == rhs == k(2, 1) * k(2, 2)

    def test_law_holds_for_every_tree(self):
        for r in range(2, 7):
            for t in enumerate_increasing(range(1, r + 1)):
                lhs, rhs = rc.grafting_law_sides(t)
                assert lhs == rhs

    def test_single_vertex_cannot_split(self):
        with pytest.raises(ValueError):
            rc.grafting_law_sides(IncreasingTree([1], {}))

    def test_split_three_by_hand(self):
        lhs, rhs = rc.grafting_split_sides(3)
        assert lhs == rhs == hook_weight_sum(3)

    def test_check_runs_both_parts(self):
        for r in range(2, 7):
            assert rc.grafting_recurrence_check(r)


class TestSubsetClosedForm:
    def test_singleton_is_one(self):
        assert rc.subset_closed_form([4], 5) == MultiPoly.const(5, 1)

    def test_pair(self):
        assert rc.subset_closed_form([2, 3], 3) == k(3, 2) * k(3, 3)

    def test_full_set_matches_the_main_closed_form(self):
        for r in range(1, 6):
            assert rc.subset_closed_form(range(1, r + 1), r) == hook_weight_closed_form(r)

    def test_matches_the_tree_sum_on_sublabels(self):
        for labels in combinations(range(1, 6), 3):
            total = MultiPoly.sum(
                5, (tree_weight(t, 5) for t in enumerate_increasing(labels))
            )
            assert rc.subset_closed_form(labels, 5) == total


class TestRootDegree:
    def test_two_and_three_by_hand(self):
        lhs, rhs = rc.root_degree_sides(2)
        assert lhs == rhs == k(2, 1) * k(2, 2)
        lhs, rhs = rc.root_degree_sides(3)
        v1, v2, v3 = (k(3, i) for i in (1, 2, 3))
        assert lhs == rhs == v1 * v2 * v3 * (v2 + v3 - 1) + v1**2 * v2 * v3

    def test_sweep(self):
        for r in range(2, 7):
            assert rc.root_degree_recurrence_check(r)

    def test_one_summand_per_partition(self):
        parts = list(rc.root_degree_summands(5))
        assert len(parts) == 15  # Bell number of {2,3,4,5}


class TestBlockBridge:
    def test_falling_factorial_absorption(self):
        # (K_B - |B| + 1) * closed(B) = (prod k_B) * (K_B - 1)_(|B|-1)
        for size in range(1, 5):
            for block in combinations(range(2, 6), size):
                kb = MultiPoly.sum(5, (k(5, b) for b in block))
                prod = MultiPoly.const(5, 1)
                for b in block:
                    prod = prod * k(5, b)
                lhs = (kb - (size - 1)) * rc.subset_closed_form(block, 5)
                rhs = prod * falling_factorial(kb - 1, size - 1)
                assert lhs == rhs

    def test_summands_agree_partition_by_partition(self):
        for r in range(2, 6):
            for (p1, a), (p2, b) in zip(
                rc.root_degree_summands(r), rc.lagrange_summands(r)
            ):
                assert p1 == p2
                assert a == b


class TestLagrangeIdentity:
    def test_two_by_hand(self):
        lhs, rhs = rc.lagrange_identity_sides(2)
        assert lhs == rhs == k(2, 1) * k(2, 2)

    def test_sweep(self):
        for r in range(2, 7):
            assert rc.lagrange_identity_check(r)


class TestTruncatedSeries:
    def test_square_free_window(self):
        t1 = rc.TruncatedSeries.variable(2, 0)
        one = rc.TruncatedSeries.const(2, 1)
        assert t1 * t1 == rc.TruncatedSeries(2)
        assert (one + t1) * (one - t1) == one

    def test_inverse(self):
        s = rc.TruncatedSeries.const(3, 1)
        for i in range(3):
            s = s + rc.TruncatedSeries.variable(3, i)
        assert s * s**-1 == rc.TruncatedSeries.const(3, 1)

    def test_negative_power_by_hand(self):
        t1 = rc.TruncatedSeries.variable(2, 0)
        s = (rc.TruncatedSeries.const(2, 1) + t1) ** -2
        assert s.coefficient(0) == 1
        assert s.coefficient(1) == -2
        assert s.coefficient(2) == 0

    def test_fractional_constant_term(self):
        s = rc.TruncatedSeries.const(1, 2) + rc.TruncatedSeries.variable(1, 0)
        inv = s**-1
        assert inv.coefficient(0) == Fraction(1, 2)
        assert inv.coefficient(1) == Fraction(-1, 4)

    def test_validation(self):
        with pytest.raises(ValueError):
            rc.TruncatedSeries(2, [1, 2, 3])
        with pytest.raises(ValueError):
            rc.TruncatedSeries.variable(2, 5)
        with pytest.raises(ValueError):
            rc.TruncatedSeries.const(2, 1) * rc.TruncatedSeries.const(3, 1)
        with pytest.raises(ZeroDivisionError):
            rc.TruncatedSeries.variable(2, 0) ** -1


class TestSeriesOracle:
    def test_worked_examples(self):
        assert rc.lagrange_series_oracle(2, [1, 1]) == 1
        assert rc.lagrange_series_oracle(3, [2, 1, 1]) == 6
        assert rc.lagrange_series_oracle(4, [1, 2, 3, 4]) == 72

    def test_matches_closed_form_on_random_inputs(self):
        rng = random.Random(424242)
        for _ in range(30):
            r = rng.randint(2, 5)
            kvals = [rng.randint(1, 10) for _ in range(r)]
            assert rc.lagrange_series_oracle(r, kvals) == rc.oracle_closed_form(r, kvals)

    def test_closed_form_examples(self):
        assert rc.oracle_closed_form(1, [5]) == 1
        assert rc.oracle_closed_form(2, [3, 4]) == 3
        assert rc.oracle_closed_form(4, [1, 2, 3, 4]) == 72

    def test_non_positive_exponents_warn_but_compute(self):
        with pytest.warns(UserWarning):
            assert rc.lagrange_series_oracle(2, [0, 1]) == 0

    def test_validation(self):
        with pytest.raises(ValueError):
            rc.lagrange_series_oracle(3, [1, 2])
        with pytest.raises(TypeError):
            rc.lagrange_series_oracle(2, [1, "2"])
