# -*- coding: utf-8 -*-
"""Finite linear combinations of permutations with Laurent polynomial coefficients."""
from __future__ import annotations

from typing import Iterable, Mapping, TypeVar, Union

from twinv.core.errors import RankMismatchError
from twinv.services.laurent import LaurentPoly
from twinv.services.symgroup import Permutation, parse_permutation

__all__ = ["Coefficient", "FreeModuleElement", "as_poly"]

Coefficient = Union[int, LaurentPoly]
E = TypeVar("E", bound="FreeModuleElement")


def as_poly(c: Coefficient) -> LaurentPoly:
    return LaurentPoly.constant(c) if isinstance(c, int) else c


class FreeModuleElement(object):
    """
    Sum of c_x e_x over basis elements indexed by permutations of one rank.
    Zero coefficients are never stored.
    """
    __slots__ = ("n", "_coeffs")

    # basis symbol used by __str__
    symbol = "e"

    def __init__(self, n: int, coeffs: Mapping[Permutation, Coefficient] | Iterable = ()):
        self.n = n
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[Permutation, LaurentPoly] = {}
        for x, c in items:
            if x.n != n:
                raise RankMismatchError(x.n, n)
            total = clean.get(x, LaurentPoly.ZERO) + as_poly(c)
            if total:
                clean[x] = total
            else:
                clean.pop(x, None)
        self._coeffs = clean

    def _new(self: E, coeffs) -> E:
        return type(self)(self.n, coeffs)

    def items(self):
        return self._coeffs.items()

    def sorted_items(self) -> list[tuple[Permutation, LaurentPoly]]:
        """Terms ordered by (length, one-line notation)."""
        return sorted(self._coeffs.items(), key=lambda item: item[0].sort_key())

    def coefficient(self, x: Permutation) -> LaurentPoly:
        return self._coeffs.get(x, LaurentPoly.ZERO)

    def support(self) -> set[Permutation]:
        return set(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self._coeffs.items())))

    def _check(self, other: "FreeModuleElement") -> None:
        if self.n != other.n:
            raise RankMismatchError(self.n, other.n)

    def __add__(self: E, other: E) -> E:
        self._check(other)
        return self._new(list(self._coeffs.items()) + list(other._coeffs.items()))

    def __neg__(self: E) -> E:
        return self._new({x: -c for x, c in self._coeffs.items()})

    def __sub__(self: E, other: E) -> E:
        return self + (-other)

    def scale(self: E, c: Coefficient) -> E:
        c = as_poly(c)
        if not c:
            return self._new(())
        return self._new({x: c * y for x, y in self._coeffs.items()})

    def map_coefficients(self: E, fn) -> E:
        return self._new({x: fn(c) for x, c in self._coeffs.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(f"({c})*{self.symbol}[{x}]" for x, c in self.sorted_items())

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, {self})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"perm": str(x), "coeff": c.to_json()} for x, c in self.sorted_items()],
        }

    @classmethod
    def from_json(cls: type[E], data: dict) -> E:
        n = data["n"]
        return cls(n, {
            parse_permutation(term["perm"], n): LaurentPoly.from_json(term["coeff"])
            for term in data["terms"]
        })
