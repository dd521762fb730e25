# -*- coding: utf-8 -*-
"""Unit tests for permutations, reduced words and Bruhat order."""
from itertools import combinations

import pytest

from twinv.core.errors import InvalidInputError, RankMismatchError
from twinv.services.symgroup import (
    Permutation, Word, all_permutations, bruhat_leq, compose, generator, identity,
    inverse, is_involution, left_descents, left_mul_gen, length, longest_element,
    parse_permutation, parse_word, reduced_word, right_descents, right_mul_gen,
    word_product,
)


def subword_products(q: Permutation) -> set:
    """Every product of a subword of a reduced word of q: the lower Bruhat interval."""
    letters = reduced_word(q).letters
    found = set()
    for k in range(len(letters) + 1):
        for positions in combinations(range(len(letters)), k):
            found.add(word_product([letters[i] for i in positions], q.n))
    return found


class TestPermutation:
    """Construction and arithmetic."""

    def test_rejects_non_permutation(self):
        with pytest.raises(InvalidInputError):
            Permutation((1, 1, 2))

    def test_compose_right_factor_acts_first(self):
        assert compose(Permutation((1, 3, 2)), Permutation((2, 1, 3))) == Permutation((3, 1, 2))

    def test_mul_operator_matches_compose(self):
        p, q = Permutation((2, 3, 1)), Permutation((3, 1, 2))
        assert p * q == compose(p, q)

    def test_compose_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            compose(identity(2), identity(3))

    def test_inverse(self):
        for p in all_permutations(4):
            assert compose(p, inverse(p)) == identity(4)

    def test_length_and_longest_element(self):
        assert length(identity(3)) == 0
        assert length(longest_element(3)) == 3
        assert longest_element(4) == Permutation((4, 3, 2, 1))

    def test_generator_multiplication_conventions(self):
        assert left_mul_gen(1, identity(3)) == generator(1, 3) == Permutation((2, 1, 3))
        assert left_mul_gen(1, Permutation((2, 3, 1))) == Permutation((1, 3, 2))
        assert right_mul_gen(Permutation((2, 3, 1)), 1) == Permutation((3, 2, 1))

    def test_generator_out_of_range(self):
        with pytest.raises(InvalidInputError):
            generator(3, 3)
        with pytest.raises(InvalidInputError):
            generator(0, 3)

    def test_descents(self):
        assert left_descents(Permutation((3, 2, 1))) == [1, 2]
        assert right_descents(Permutation((2, 3, 1))) == [2]
        assert left_descents(Permutation((2, 3, 1))) == [1]

    def test_is_involution(self):
        assert is_involution(Permutation((2, 1, 4, 3)))
        assert not is_involution(Permutation((2, 3, 1)))

    def test_sort_key_orders_by_length_then_lex(self):
        perms = all_permutations(3)
        assert perms[0] == identity(3)
        assert perms[-1] == Permutation((3, 2, 1))
        assert [p.images for p in perms[1:3]] == [(1, 3, 2), (2, 1, 3)]


class TestReducedWords:
    """Reduced words and words as products."""

    def test_reduced_word_is_reduced_and_correct(self):
        for p in all_permutations(4):
            word = reduced_word(p)
            assert len(word) == length(p)
            assert word_product(word, 4) == p

    def test_word_product_order(self):
        assert word_product((1, 2), 3) == Permutation((2, 3, 1))
        assert word_product((2, 1), 3) == Permutation((3, 1, 2))

    def test_word_rejects_bad_letter(self):
        with pytest.raises(InvalidInputError):
            Word((1, 3), 3)


class TestBruhatOrder:
    """Rank-matrix comparison against the subword property."""

    def test_small_cases(self):
        s1, s2 = generator(1, 3), generator(2, 3)
        assert bruhat_leq(s1, longest_element(3))
        assert bruhat_leq(s2, Permutation((2, 3, 1)))
        assert not bruhat_leq(Permutation((3, 1, 2)), Permutation((2, 3, 1)))
        assert not bruhat_leq(Permutation((2, 3, 1)), Permutation((3, 1, 2)))

    def test_matches_subword_property_in_s4(self):
        perms = all_permutations(4)
        for q in perms:
            below = subword_products(q)
            for p in perms:
                assert bruhat_leq(p, q) == (p in below), (p, q)


class TestParsing:
    """Text input."""

    def test_parse_permutation(self):
        assert parse_permutation("3, 1,2") == Permutation((3, 1, 2))

    def test_parse_permutation_wrong_rank(self):
        with pytest.raises(InvalidInputError):
            parse_permutation("2,1", 3)

    def test_parse_permutation_garbage(self):
        with pytest.raises(InvalidInputError):
            parse_permutation("a,b")

    def test_parse_word(self):
        assert parse_word("1,2,1", 3).letters == (1, 2, 1)
        assert parse_word("", 3).letters == ()

    def test_format_round_trip(self):
        p = Permutation((4, 2, 3, 1))
        assert parse_permutation(str(p)) == p
