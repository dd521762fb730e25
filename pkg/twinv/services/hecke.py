# -*- coding: utf-8 -*-
"""
The Iwahori-Hecke algebra of S_n with Hecke parameter u^2, in the T-basis.

The ground ring is Z[v, v^-1] with u = v^2, and the quadratic relation is
(T_s + 1)(T_s - u^2) = 0, i.e. T_s^2 = (u^2 - 1) T_s + u^2.
"""
from __future__ import annotations

import threading
from functools import lru_cache
from typing import Iterable, Optional

from twinv.core.config import config
from twinv.core.errors import RankMismatchError
from twinv.services.combination import Coefficient, FreeModuleElement
from twinv.services.istar import enumerate_involutions
from twinv.services.laurent import LaurentPoly, bar
from twinv.services.symgroup import (
    Permutation, check_letters, identity, inverse, left_mul_gen, length,
    reduced_word,
)

__all__ = [
    "HeckeElement", "HeckeProductCache",
    "t_basis", "hecke_one", "from_word",
    "mul_gen_left", "apply_t", "mul", "t_inverse", "bar_hecke", "x_empty",
]

Q = LaurentPoly.u_power(2)                 # u^2
Q_MINUS_ONE = Q - 1                        # u^2 - 1
Q_INV = LaurentPoly.u_power(-2)            # u^-2
Q_INV_MINUS_ONE = Q_INV - 1                # u^-2 - 1


class HeckeElement(FreeModuleElement):
    """A finite sum of c_w T_w with Laurent polynomial coefficients."""
    __slots__ = ()
    symbol = "T"

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mul(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented


def t_basis(w: Permutation, c: Coefficient = 1) -> HeckeElement:
    """c * T_w"""
    return HeckeElement(w.n, {w: c})


def hecke_one(n: int) -> HeckeElement:
    return t_basis(identity(n))


@lru_cache(maxsize=None)
def _reduced_letters(w: Permutation) -> tuple[int, ...]:
    return reduced_word(w).letters


def _is_left_ascent(s: int, w: Permutation) -> bool:
    # l(sw) > l(w) iff s occurs before s+1 in one-line notation
    images = w.images
    return images.index(s) < images.index(s + 1)


def mul_gen_left(s: int, h: HeckeElement) -> HeckeElement:
    """T_s * h."""
    check_letters((s,), h.n)
    out: dict[Permutation, LaurentPoly] = {}
    for w, c in h.items():
        sw = left_mul_gen(s, w)
        if _is_left_ascent(s, w):
            out[sw] = out.get(sw, LaurentPoly.ZERO) + c
        else:
            out[w] = out.get(w, LaurentPoly.ZERO) + c * Q_MINUS_ONE
            out[sw] = out.get(sw, LaurentPoly.ZERO) + c * Q
    return HeckeElement(h.n, out)


def apply_t(w: Permutation, h: HeckeElement) -> HeckeElement:
    # T_w * h along a reduced word, rightmost letter first
    for s in reversed(_reduced_letters(w)):
        h = mul_gen_left(s, h)
    return h


def from_word(letters: Iterable[int], n: int) -> HeckeElement:
    """T_{i_1} T_{i_2} ... T_{i_k}; the word need not be reduced."""
    h = hecke_one(n)
    for s in reversed(tuple(letters)):
        h = mul_gen_left(s, h)
    return h


class HeckeProductCache(object):
    """
    Memoized T_x * T_y keyed by (x, y). Reads are lock-free, insertions are
    serialized so concurrent readers never see a half-built entry.
    """

    def __init__(self):
        self._products: dict[tuple[Permutation, Permutation], HeckeElement] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._products)

    def product(self, x: Permutation, y: Permutation) -> HeckeElement:
        key = (x, y)
        cached = self._products.get(key)
        if cached is not None:
            return cached
        value = apply_t(x, t_basis(y))
        with self._lock:
            self._products.setdefault(key, value)
        return value

    def clear(self) -> None:
        with self._lock:
            self._products.clear()


_product_cache = HeckeProductCache()


def mul(h1: HeckeElement, h2: HeckeElement, cache: Optional[HeckeProductCache] = None) -> HeckeElement:
    """
    Product in the Hecke algebra. Without a cache each T_w * h2 is computed by
    left multiplication along a reduced word of w.
    """
    if h1.n != h2.n:
        raise RankMismatchError(h1.n, h2.n)
    if cache is None and config.hecke_cache:
        cache = _product_cache
    terms = []
    if cache is None:
        for w, c in h1.items():
            terms.extend(apply_t(w, h2).scale(c).items())
        return HeckeElement(h1.n, terms)
    for x, c1 in h1.items():
        for y, c2 in h2.items():
            coefficient = c1 * c2
            terms.extend((z, coefficient * c) for z, c in cache.product(x, y).items())
    return HeckeElement(h1.n, terms)


@lru_cache(maxsize=None)
def t_inverse(w: Permutation) -> HeckeElement:
    """
    T_w^-1 = T_{i_k}^-1 ... T_{i_1}^-1 for a reduced word (i_1, ..., i_k) of w,
    with T_s^-1 = u^-2 T_s + (u^-2 - 1).
    """
    h = hecke_one(w.n)
    for s in _reduced_letters(w):
        h = mul_gen_left(s, h).scale(Q_INV) + h.scale(Q_INV_MINUS_ONE)
    return h


def bar_hecke(h: HeckeElement) -> HeckeElement:
    """The ring involution sum c_x T_x -> sum bar(c_x) T_{x^-1}^-1."""
    terms = []
    for x, c in h.items():
        terms.extend(t_inverse(inverse(x)).scale(bar(c)).items())
    return HeckeElement(h.n, terms)


@lru_cache(maxsize=None)
def x_empty(n: int) -> HeckeElement:
    """X_∅ = sum over involutions x of u^-l(x) T_x."""
    return HeckeElement(n, {x: LaurentPoly.u_power(-length(x)) for x in enumerate_involutions(n)})
