# -*- coding: utf-8 -*-
"""Unit tests for the module M, its bar involution and the basis A_w."""
from unittest.mock import patch

import pytest

from twinv.core.errors import InvalidInputError, RankMismatchError
from twinv.services.hecke import Q, Q_MINUS_ONE, bar_hecke, hecke_one, t_basis
from twinv.services.istar import Involution, enumerate_involutions
from twinv.services.laurent import LaurentPoly
from twinv.services.lvmodule import (
    MElement, a_basis, act, act_gen, bar_m, lv_basis, lv_table, psigma,
)
from twinv.services.symgroup import (
    Permutation, all_permutations, bruhat_leq, generator, identity, length,
)

U = LaurentPoly.U
V = LaurentPoly.V


@pytest.fixture
def s3_basis():
    """a_w for the four involutions of S_3."""
    return [a_basis(w) for w in enumerate_involutions(3)]


class TestAction:
    """The four cases of T_s a_w and the defining relations."""

    def test_commuting_up(self):
        one, s = Involution(identity(2)), Involution(generator(1, 2))
        assert act_gen(1, a_basis(one)) == MElement(2, {one: U, s: U + 1})

    def test_commuting_down(self):
        one, s = Involution(identity(2)), Involution(generator(1, 2))
        assert act_gen(1, a_basis(s)) == MElement(2, {s: Q - U - 1, one: Q - U})

    def test_conjugating_up(self):
        s2 = Involution(generator(2, 3))
        assert act_gen(1, a_basis(s2)) == a_basis(Involution(Permutation((3, 2, 1))))

    def test_conjugating_down(self):
        w0 = Involution(Permutation((3, 2, 1)))
        s2 = Involution(generator(2, 3))
        assert act_gen(1, a_basis(w0)) == MElement(3, {w0: Q_MINUS_ONE, s2: Q})

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_quadratic_relation(self, n):
        for w in enumerate_involutions(n):
            m = a_basis(w)
            for s in range(1, n):
                once = act_gen(s, m)
                assert act_gen(s, once) == once.scale(Q_MINUS_ONE) + m.scale(Q)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_braid_relations(self, n):
        for w in enumerate_involutions(n):
            m = a_basis(w)
            for i in range(1, n - 1):
                left = act_gen(i, act_gen(i + 1, act_gen(i, m)))
                right = act_gen(i + 1, act_gen(i, act_gen(i + 1, m)))
                assert left == right
            for i in range(1, n):
                for j in range(i + 2, n):
                    assert act_gen(i, act_gen(j, m)) == act_gen(j, act_gen(i, m))

    def test_act_with_identity_is_trivial(self, s3_basis):
        for m in s3_basis:
            assert act(hecke_one(3), m) == m

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            act(hecke_one(2), a_basis(Involution(identity(3))))


class TestBar:
    """The bar involution of M."""

    def test_bar_of_identity(self):
        one = Involution(identity(3))
        assert bar_m(a_basis(one)) == a_basis(one)

    def test_bar_of_generator(self):
        one, s = Involution(identity(2)), Involution(generator(1, 2))
        u_inv = LaurentPoly.u_power(-1)
        assert bar_m(a_basis(s)) == MElement(2, {s: u_inv, one: u_inv - 1})

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_bar_is_an_involution(self, n):
        for w in enumerate_involutions(n):
            m = a_basis(w, V + 3)
            assert bar_m(bar_m(m)) == m

    def test_compatible_with_hecke_bar(self, s3_basis):
        for x in all_permutations(3):
            h = t_basis(x, V)
            for m in s3_basis:
                assert bar_m(act(h, m)) == act(bar_hecke(h), bar_m(m))


class TestLVBasis:
    """A_w and the polynomials P^σ_{y,w}."""

    def test_a_s(self):
        one, s = Involution(identity(2)), Involution(generator(1, 2))
        v_inv = LaurentPoly.monomial(1, -1)
        assert lv_basis(s).expansion == MElement(2, {s: v_inv, one: v_inv})

    def test_rank_two_polynomials(self):
        table = lv_table(2)
        assert len(table) == 2
        for w in table:
            for y in table:
                if bruhat_leq(y, w):
                    assert psigma(y, w) == LaurentPoly.ONE

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_basis_is_bar_invariant(self, n):
        for w in enumerate_involutions(n):
            expansion = lv_basis(w).expansion
            assert bar_m(expansion) == expansion

    @pytest.mark.parametrize("n", [3, 4])
    def test_polynomial_shape(self, n):
        for w in enumerate_involutions(n):
            assert psigma(w, w) == LaurentPoly.ONE
            for y in enumerate_involutions(n):
                p = psigma(y, w)
                if not bruhat_leq(y, w):
                    assert p.is_zero()
                elif y != w and p:
                    assert p.is_even()
                    assert p.min_exponent() >= 0
                    assert p.max_exponent() < length(w) - length(y)

    def test_expansion_matches_polynomials(self):
        for w in enumerate_involutions(4):
            basis = lv_basis(w)
            for y, c in basis.expansion.items():
                assert c.shift(length(y) + length(w)) == basis.poly(y).shift(length(y))

    def test_rank_cap(self):
        with patch("twinv.services.lvmodule.config") as mock_config:
            mock_config.psigma_rank_cap = 2
            with pytest.raises(InvalidInputError):
                lv_table(3)
