"""Partition enumeration, index sets, binomial convention, lattice counts."""

from itertools import product
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bivar.partitions import (
    alpha_indices,
    beta_indices,
    binom,
    count_one_norm_sphere,
    part_counts,
    partitions_le_length,
)


def naive_partition_count(total, max_parts, largest=None):
    # independent recursive counter
    if total == 0:
        return 1
    if max_parts == 0:
        return 0
    if largest is None:
        largest = total
    return sum(
        naive_partition_count(total - p, max_parts - 1, p)
        for p in range(1, min(largest, total) + 1)
    )


class TestPartitionsStream:
    def test_examples(self):
        assert list(partitions_le_length(3, 2)) == [(3, 0), (2, 1)]
        assert list(partitions_le_length(0, 5)) == [(0, 0, 0, 0, 0)]
        assert list(partitions_le_length(4, 3)) == [
            (4, 0, 0), (3, 1, 0), (2, 2, 0), (2, 1, 1)]

    def test_negative_total_yields_nothing(self):
        assert list(partitions_le_length(-1, 4)) == []
        assert list(partitions_le_length(-2, 1)) == []

    @pytest.mark.parametrize("total", range(13))
    @pytest.mark.parametrize("max_parts", range(1, 9))
    def test_count_matches_naive_counter(self, total, max_parts):
        got = list(partitions_le_length(total, max_parts))
        assert len(got) == naive_partition_count(total, max_parts)
        assert len(set(got)) == len(got)

    def test_each_is_weakly_decreasing_with_right_sum(self):
        for q in partitions_le_length(9, 5):
            assert sum(q) == 9
            assert all(q[i] >= q[i + 1] for i in range(len(q) - 1))
            assert q[-1] >= 0

    def test_reverse_lex_order(self):
        got = list(partitions_le_length(7, 4))
        assert got == sorted(got, reverse=True)


class TestPartCounts:
    def test_examples(self):
        assert part_counts((2, 1, 1, 0)) == (2, 1, 0, 0)
        assert part_counts((0, 0, 0)) == ()
        s = part_counts((3, 3, 1))
        assert (s[0], s[1], s[2]) == (1, 0, 2)
        assert sum((j + 1) * c for j, c in enumerate(s)) == 7

    @given(st.lists(st.integers(0, 6), min_size=0, max_size=7))
    def test_weighted_sum_recovers_total(self, parts):
        q = tuple(sorted(parts, reverse=True))
        s = part_counts(q)
        assert sum((j + 1) * c for j, c in enumerate(s)) == sum(q)
        assert sum(s) <= len(q)


class TestBetaAlpha:
    def test_beta_examples(self):
        assert len(list(beta_indices((1, 0)))) == 2
        assert len(list(beta_indices((2, 0)))) == 3
        assert len(list(beta_indices((1, 1)))) == 3

    def test_beta_count_formula(self):
        # rows are independent; row j has C(s_j + j, j) choices
        from math import comb

        for total in range(6):
            for q in partitions_le_length(total, 4):
                s = part_counts(q)
                expected = 1
                for j in range(1, total + 1):
                    expected *= comb(s[j - 1] + j, j)
                assert len(list(beta_indices(q))) == expected

    def test_beta_invariants(self):
        for q in partitions_le_length(5, 3):
            s = part_counts(q)
            seen = set()
            for beta in beta_indices(q):
                assert beta not in seen
                seen.add(beta)
                assert len(beta) == sum(q)
                for j, row in enumerate(beta, start=1):
                    assert len(row) == j
                    assert all(b >= 0 for b in row)
                    assert sum(row) <= s[j - 1]
                    if s[j - 1] == 0:
                        assert all(b == 0 for b in row)

    def test_alpha_examples(self):
        zero_beta = ((0,), (0, 0))
        assert list(alpha_indices(zero_beta)) == [zero_beta]
        assert len(list(alpha_indices(((2,),)))) == 3
        assert len(list(alpha_indices(((0,), (1, 1))))) == 4

    def test_alpha_box_product(self):
        for q in partitions_le_length(4, 3):
            for beta in beta_indices(q):
                expected = 1
                for row in beta:
                    for b in row:
                        expected *= b + 1
                alphas = list(alpha_indices(beta))
                assert len(alphas) == expected
                for alpha in alphas:
                    for arow, brow in zip(alpha, beta):
                        assert all(0 <= a <= b for a, b in zip(arow, brow))


class TestBinom:
    def test_examples(self):
        assert binom(5, 2) == 10
        assert binom(-1, 0) == 0
        assert binom(3, -1) == 0

    def test_zero_convention_region(self):
        for b in range(-4, 5):
            for a in range(-4, 5):
                if a < 0 or b < a:
                    assert binom(b, a) == 0

    @given(st.integers(0, 40), st.integers(0, 40))
    @settings(max_examples=200)
    def test_matches_factorials(self, b, a):
        if a <= b:
            assert binom(b, a) == factorial(b) // (factorial(a) * factorial(b - a))
        else:
            assert binom(b, a) == 0


class TestOneNormSphere:
    def test_examples(self):
        assert count_one_norm_sphere(2, 1) == 4
        assert count_one_norm_sphere(2, 2) == 8
        for n in range(1, 6):
            assert count_one_norm_sphere(n, 0) == 1

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_brute_force(self, n):
        for total in range(9):
            brute = sum(
                1
                for v in product(range(-total, total + 1), repeat=n)
                if sum(abs(a) for a in v) == total
            )
            assert count_one_norm_sphere(n, total) == brute
