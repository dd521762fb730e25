# -*- coding: utf-8 -*-
"""
The module M with basis {a_w : w an involution} over the Hecke algebra.

T_s acts on a_w by one of four rules, depending on whether s commutes with w
and whether sw is longer than w:

    sw == ws, sw > w:   T_s a_w = u a_w + (u+1) a_sw
    sw == ws, sw < w:   T_s a_w = (u^2-u-1) a_w + (u^2-u) a_sw
    sw != ws, sw > w:   T_s a_w = a_sws
    sw != ws, sw < w:   T_s a_w = (u^2-1) a_w + u^2 a_sws

The bar involution of M and the bar-invariant basis A_w, together with its
polynomials P^σ_{y,w}, are computed here as well.
"""
from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from twinv.core.config import config
from twinv.core.errors import (
    InvalidInputError, InvariantViolation, RankMismatchError, UniquenessViolation,
)
from twinv.services.combination import FreeModuleElement
from twinv.services.hecke import HeckeElement, Q, Q_MINUS_ONE, t_inverse, _reduced_letters
from twinv.services.istar import Involution, enumerate_involutions
from twinv.services.laurent import LaurentPoly, bar
from twinv.services.symgroup import bruhat_leq, check_letters, left_mul_gen, length, right_mul_gen

logger = logging.getLogger(__name__)

__all__ = [
    "MElement", "LVBasisElement", "LVTable",
    "a_basis", "act_gen", "act", "bar_m",
    "bar_matrix", "lv_table", "lv_basis", "psigma",
]

U = LaurentPoly.U
U_PLUS_ONE = LaurentPoly.U_PLUS_ONE
Q_MINUS_U_MINUS_ONE = Q - U - 1     # u^2 - u - 1
Q_MINUS_U = Q - U                   # u^2 - u


class MElement(FreeModuleElement):
    """A finite sum of c_w a_w over involutions w."""
    __slots__ = ()
    symbol = "a"


def a_basis(w: Involution, c=1) -> MElement:
    """c * a_w"""
    return MElement(w.n, {w: c})


def act_gen(s: int, m: MElement) -> MElement:
    """T_s * m."""
    check_letters((s,), m.n)
    terms = []
    for w, c in m.items():
        sw = left_mul_gen(s, w)
        up = w.images.index(s) < w.images.index(s + 1)
        if sw == right_mul_gen(w, s):
            if up:
                terms += [(w, c * U), (sw, c * U_PLUS_ONE)]
            else:
                terms += [(w, c * Q_MINUS_U_MINUS_ONE), (sw, c * Q_MINUS_U)]
        else:
            sws = right_mul_gen(sw, s)
            if up:
                terms.append((sws, c))
            else:
                terms += [(w, c * Q_MINUS_ONE), (sws, c * Q)]
    return MElement(m.n, terms)


def act(h: HeckeElement, m: MElement) -> MElement:
    """h * m, acting by T_w along a reduced word of w, rightmost letter first."""
    if h.n != m.n:
        raise RankMismatchError(h.n, m.n)
    terms = []
    for w, c in h.items():
        image = m
        for s in reversed(_reduced_letters(w)):
            image = act_gen(s, image)
        terms.extend(image.scale(c).items())
    return MElement(m.n, terms)


def bar_m(m: MElement) -> MElement:
    """sum c_w a_w -> sum bar(c_w) (-1)^l(w) T_w^-1 a_w."""
    terms = []
    for w, c in m.items():
        sign = -1 if length(w) % 2 else 1
        image = act(t_inverse(w), a_basis(w))
        terms.extend(image.scale(bar(c) * sign).items())
    return MElement(m.n, terms)


@dataclass(frozen=True)
class LVBasisElement:
    """A_w together with its polynomials P^σ_{y,w} (stored as even polynomials in v)."""
    w: Involution
    expansion: MElement
    polys: Mapping[Involution, LaurentPoly]

    def poly(self, y: Involution) -> LaurentPoly:
        """P^σ_{y,w}, zero when absent."""
        return self.polys.get(y, LaurentPoly.ZERO)


LVTable = Mapping[Involution, LVBasisElement]


def bar_matrix(n: int) -> dict[tuple[Involution, Involution], LaurentPoly]:
    """R[z, y] with bar(b_y) = sum_z R[z, y] b_z, where b_y = v^-l(y) a_y."""
    entries: dict[tuple[Involution, Involution], LaurentPoly] = {}
    for y in enumerate_involutions(n):
        ly = length(y)
        for z, c in bar_m(a_basis(y)).items():
            if z != y and not bruhat_leq(z, y):
                raise UniquenessViolation(f"bar(b_{y}) involves b_{z} outside the Bruhat interval")
            entries[(z, y)] = c.shift(ly + length(z))
        if entries.get((y, y)) != LaurentPoly.ONE:
            raise UniquenessViolation(f"bar(b_{y}) has diagonal coefficient {entries.get((y, y))}")
    return entries


def _solve(w: Involution, invs, entries) -> LVBasisElement:
    """A_w from the bar matrix, one Bruhat-lower z at a time in decreasing length."""
    lw = length(w)
    pis: dict[Involution, LaurentPoly] = {w: LaurentPoly.ONE}
    below = [z for z in invs if z != w and bruhat_leq(z, w)]
    below.sort(key=lambda z: (length(z), z.images), reverse=True)
    for z in below:
        rhs = LaurentPoly.ZERO
        for y, p in pis.items():
            r = entries.get((z, y))
            if r is not None:
                rhs = rhs + r * bar(p)
        pi = rhs.negative_part()
        if rhs != pi - bar(pi):
            raise UniquenessViolation(f"no bar-invariant correction for A_{w} at a_{z}: {rhs}")
        if pi:
            pis[z] = pi
    polys = {}
    terms = []
    for z, pi in pis.items():
        p = pi.shift(lw - length(z))
        if not p.is_even() or (p and p.min_exponent() < 0):
            raise InvariantViolation(f"P^σ_{{{z},{w}}} = {p} is not a polynomial in u")
        polys[z] = p
        terms.append((z, pi.shift(-length(z))))
    return LVBasisElement(w, MElement(w.n, terms), MappingProxyType(polys))


_tables: dict[int, LVTable] = {}
_tables_lock = threading.Lock()


def lv_table(n: int) -> LVTable:
    """Every A_w of rank n; built once per rank and shared read-only."""
    if n > config.psigma_rank_cap:
        raise InvalidInputError(f"rank {n} exceeds the configured cap {config.psigma_rank_cap}")
    table = _tables.get(n)
    if table is not None:
        return table
    with _tables_lock:
        table = _tables.get(n)
        if table is None:
            logger.info(f"Building the A_w table for S_{n}...")
            invs = enumerate_involutions(n)
            entries = bar_matrix(n)
            table = MappingProxyType({w: _solve(w, invs, entries) for w in invs})
            _tables[n] = table
            logger.info(f"A_w table for S_{n} ready: {len(table)} basis elements")
    return table


def lv_basis(w: Involution) -> LVBasisElement:
    """A_w from the shared table."""
    return lv_table(w.n)[w]


def psigma(y: Involution, w: Involution) -> LaurentPoly:
    """P^σ_{y,w}; zero unless y <= w."""
    return lv_basis(w).poly(y)
