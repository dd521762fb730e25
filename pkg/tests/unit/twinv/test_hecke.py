# -*- coding: utf-8 -*-
"""Unit tests for the Hecke algebra in the T-basis."""
from unittest.mock import patch

import numpy as np
import pytest

from twinv.core.errors import RankMismatchError
from twinv.services.hecke import (
    HeckeElement, HeckeProductCache, Q, Q_INV, Q_INV_MINUS_ONE, Q_MINUS_ONE,
    bar_hecke, from_word, hecke_one, mul, t_basis, t_inverse, x_empty,
)
from twinv.services.laurent import LaurentPoly
from twinv.services.symgroup import all_permutations, generator, identity, longest_element


class TestRelations:
    """Quadratic and braid relations."""

    def test_quadratic_relation(self):
        s = generator(1, 2)
        expected = t_basis(s, Q_MINUS_ONE) + t_basis(identity(2), Q)
        assert from_word((1, 1), 2) == expected

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_braid_relations(self, n):
        for i in range(1, n - 1):
            assert from_word((i, i + 1, i), n) == from_word((i + 1, i, i + 1), n)
        for i in range(1, n):
            for j in range(i + 2, n):
                assert from_word((i, j), n) == from_word((j, i), n)

    def test_reduced_word_gives_basis_element(self):
        assert from_word((1, 2, 1), 3) == t_basis(longest_element(3))

    def test_operator_multiplication(self):
        s1, s2 = t_basis(generator(1, 3)), t_basis(generator(2, 3))
        assert s1 * s2 == from_word((1, 2), 3)
        assert (s1 * 2) == s1 + s1

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_quadratic_relation_through_mul(self, n):
        e = identity(n)
        for i in range(1, n):
            s = generator(i, n)
            left = t_basis(s) - t_basis(e, Q)
            right = t_basis(s) + hecke_one(n)
            assert mul(left, right).is_zero()
            assert mul(right, left).is_zero()

    def test_mul_is_associative(self):
        rng = np.random.default_rng(4711)
        perms = all_permutations(4)
        cache = HeckeProductCache()

        def sparse_element():
            terms = {}
            for _ in range(int(rng.integers(1, 4))):
                w = perms[int(rng.integers(0, len(perms)))]
                terms[w] = LaurentPoly.monomial(int(rng.integers(-3, 4)), int(rng.integers(-4, 5)))
            return HeckeElement(4, terms)

        for _ in range(1_000):
            a, b, c = sparse_element(), sparse_element(), sparse_element()
            assert mul(mul(a, b, cache), c, cache) == mul(a, mul(b, c, cache), cache)

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            mul(hecke_one(2), hecke_one(3))


class TestInverseAndBar:
    """T_w^-1 and the bar involution."""

    def test_t_inverse_of_generator(self):
        s = generator(1, 2)
        assert t_inverse(s) == t_basis(s, Q_INV) + t_basis(identity(2), Q_INV_MINUS_ONE)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_t_inverse(self, n):
        for w in all_permutations(n):
            assert mul(t_inverse(w), t_basis(w)) == hecke_one(n)

    def test_bar_of_u_times_generator(self):
        s = generator(1, 3)
        u_inv = LaurentPoly.u_power(-1)
        expected = (t_basis(s, Q_INV) + t_basis(identity(3), Q_INV_MINUS_ONE)).scale(u_inv)
        assert bar_hecke(t_basis(s, LaurentPoly.U)) == expected

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_bar_is_an_involution(self, n):
        for w in all_permutations(n):
            h = t_basis(w, LaurentPoly({1: 2, -3: 1}))
            assert bar_hecke(bar_hecke(h)) == h

    def test_bar_is_multiplicative(self):
        perms = all_permutations(3)
        for x in perms:
            for y in perms:
                hx, hy = t_basis(x), t_basis(y, LaurentPoly.V)
                assert bar_hecke(mul(hx, hy)) == mul(bar_hecke(hx), bar_hecke(hy))


class TestXEmpty:
    """The sum of u^-l(x) T_x over involutions."""

    def test_rank_two(self):
        s = generator(1, 2)
        assert x_empty(2) == HeckeElement(2, {identity(2): 1, s: LaurentPoly.u_power(-1)})

    def test_rank_three(self):
        x = x_empty(3)
        assert len(x) == 4
        assert x.coefficient(longest_element(3)) == LaurentPoly.u_power(-3)
        assert x.coefficient(generator(2, 3)) == LaurentPoly.u_power(-1)

    def test_to_json(self):
        data = x_empty(2).to_json()
        assert data["n"] == 2
        assert [term["perm"] for term in data["terms"]] == ["1,2", "2,1"]
        assert HeckeElement.from_json(data) == x_empty(2)


class TestProductCache:
    """Memoized products agree with direct multiplication."""

    def test_cache_matches_direct(self):
        cache = HeckeProductCache()
        x = x_empty(3)
        for w in all_permutations(3):
            assert mul(t_basis(w), x, cache=cache) == mul(t_basis(w), x)
        assert len(cache) > 0
        cache.clear()
        assert len(cache) == 0

    def test_config_switches_cache_on(self):
        with patch("twinv.services.hecke.config") as mock_config:
            mock_config.hecke_cache = True
            with patch("twinv.services.hecke._product_cache", HeckeProductCache()) as cache:
                mul(x_empty(3), x_empty(3))
                assert len(cache) == 16
