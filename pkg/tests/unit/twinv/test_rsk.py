# -*- coding: utf-8 -*-
"""Unit tests for partitions, standard tableaux and row insertion."""
from unittest.mock import patch

import pytest

from twinv.core.errors import InvalidInputError
from twinv.services.rsk import (
    Partition, StandardTableau, conjugate, hook_length_count, involution_count_identity,
    partitions, render_tableau, rsk_insert, standard_tableaux, std_count,
)
from twinv.services.symgroup import Permutation, all_permutations, inverse, is_involution


class TestPartitions:
    """Partitions and their conjugates."""

    def test_reverse_lexicographic_order(self):
        assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    @pytest.mark.parametrize("n,count", [(1, 1), (5, 7), (8, 22)])
    def test_partition_numbers(self, n, count):
        assert len(list(partitions(n))) == count

    def test_conjugate(self):
        assert conjugate(Partition((3, 1))) == Partition((2, 1, 1))
        for p in partitions(6):
            assert conjugate(conjugate(p)) == p

    def test_rejects_increasing_parts(self):
        with pytest.raises(InvalidInputError):
            Partition((1, 2))


class TestTableaux:
    """Standard Young tableaux."""

    def test_shape_two_one(self):
        assert [t.rows for t in standard_tableaux(Partition((2, 1)))] == [
            ((1, 2), (3,)),
            ((1, 3), (2,)),
        ]

    @pytest.mark.parametrize("n", [*range(1, 9), *(pytest.param(n, marks=pytest.mark.slow) for n in (9, 10))])
    def test_hook_length_formula(self, n):
        for p in partitions(n):
            assert std_count(p) == hook_length_count(p)

    def test_hook_length_count(self):
        assert hook_length_count(Partition((3, 2))) == 5

    def test_rejects_bad_columns(self):
        with pytest.raises(InvalidInputError):
            StandardTableau(((2, 3), (1,)))

    def test_render(self):
        assert render_tableau(StandardTableau(((1, 3), (2,)))) == "1 3\n2"
        wide = StandardTableau(tuple((i,) for i in range(1, 11)))
        assert render_tableau(wide).splitlines()[0] == " 1"


class TestRowInsertion:
    """Robinson-Schensted."""

    def test_involution_example(self):
        p, q = rsk_insert(Permutation((2, 1, 3)))
        assert p.rows == q.rows == ((1, 3), (2,))

    def test_non_involution_example(self):
        p, q = rsk_insert(Permutation((2, 3, 1)))
        assert p.rows == ((1, 3), (2,))
        assert q.rows == ((1, 2), (3,))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_inverse_swaps_tableaux(self, n):
        pairs = set()
        for w in all_permutations(n):
            p, q = rsk_insert(w)
            assert p.shape == q.shape
            assert rsk_insert(inverse(w))[0] == q
            assert (p == q) == is_involution(w)
            pairs.add((p, q))
        assert len(pairs) == len(all_permutations(n))


class TestCountIdentity:
    """Sum of #Std(λ) equals the number of involutions."""

    @pytest.mark.parametrize("n,count", [(1, 1), (3, 4), (6, 76), (8, 764)])
    def test_identity(self, n, count):
        result = involution_count_identity(n)
        assert result.equal
        assert result.lhs == result.rhs == count

    def test_rank_cap(self):
        with patch("twinv.services.rsk.config") as mock_config:
            mock_config.rsk_rank_cap = 3
            with pytest.raises(InvalidInputError):
                involution_count_identity(4)
