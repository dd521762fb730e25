# -*- coding: utf-8 -*-
"""
Sparse Laurent polynomials in v with integer coefficients.

The Hecke parameter lives in the same ring: u = v^2, so elements of
Z[u, u^-1] are exactly the polynomials supported on even exponents.
Coefficients are Python ints and never overflow.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Union

from twinv.core.errors import NotDivisibleError, PreconditionError

__all__ = ["LaurentPoly", "exact_div", "bar", "specialize"]

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly(object):
    """An immutable element of Z[v, v^-1], stored as {exponent: coefficient}."""
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for exponent, coefficient in items:
            total = clean.get(exponent, 0) + coefficient
            if total:
                clean[exponent] = total
            else:
                clean.pop(exponent, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, exponent: int) -> "LaurentPoly":
        """c * v^exponent"""
        return cls({exponent: c})

    @classmethod
    def u_power(cls, k: int, c: int = 1) -> "LaurentPoly":
        """c * u^k, i.e. c * v^(2k)"""
        return cls({2 * k: c})

    @classmethod
    def from_u(cls, terms: Mapping[int, int]) -> "LaurentPoly":
        """Builds an element of Z[u, u^-1] from {power of u: coefficient}."""
        return cls({2 * k: c for k, c in terms.items()})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_exponent(self) -> int:
        return min(self._terms)

    def max_exponent(self) -> int:
        return max(self._terms)

    def is_even(self) -> bool:
        """True when the element lies in Z[u, u^-1]."""
        return all(k % 2 == 0 for k in self._terms)

    def u_degree(self) -> int:
        """Degree in u of an element of Z[u]; the zero polynomial has degree -1."""
        if not self._terms:
            return -1
        return self.max_exponent() // 2

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __add__(self, other: Scalar):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = dict(self._terms)
        for k, c in other._terms.items():
            total = terms.get(k, 0) + c
            if total:
                terms[k] = total
            else:
                del terms[k]
        return LaurentPoly(terms)

    __radd__ = __add__

    def __sub__(self, other: Scalar):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar):
        return (-self) + other

    def __mul__(self, other: Scalar):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                terms[k1 + k2] = terms.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(terms.items())

    __rmul__ = __mul__

    def shift(self, exponent: int) -> "LaurentPoly":
        """Multiplication by v^exponent."""
        return LaurentPoly({k + exponent: c for k, c in self._terms.items()})

    def negative_part(self) -> "LaurentPoly":
        """The terms with strictly negative exponent."""
        return LaurentPoly({k: c for k, c in self._terms.items() if k < 0})

    def to_string(self, var: str = "v") -> str:
        """
        Renders the sorted sum of terms, highest exponent first. With var="u"
        the polynomial must be even and exponents are halved.
        """
        if not self._terms:
            return "0"
        if var == "u" and not self.is_even():
            raise PreconditionError(f"{self} is not a polynomial in u")
        parts = []
        for k in sorted(self._terms, reverse=True):
            c = self._terms[k]
            e = k // 2 if var == "u" else k
            if e == 0:
                body = str(abs(c))
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.to_string("v")

    def __repr__(self):
        return "LaurentPoly({!r})".format(dict(sorted(self._terms.items())))

    def to_json(self) -> list[list]:
        """[[exponent, "coefficient"], ...] in increasing exponent order."""
        return [[k, str(self._terms[k])] for k in sorted(self._terms)]

    @classmethod
    def from_json(cls, pairs: Iterable[Iterable]) -> "LaurentPoly":
        return cls((int(k), int(c)) for k, c in pairs)


LaurentPoly.ZERO = LaurentPoly()
LaurentPoly.ONE = LaurentPoly.constant(1)
LaurentPoly.V = LaurentPoly.monomial(1, 1)
LaurentPoly.U = LaurentPoly.u_power(1)
LaurentPoly.U_PLUS_ONE = LaurentPoly({2: 1, 0: 1})


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """
    Returns q with f == g*q, by long division from the lowest exponent.

    Raises:
        ZeroDivisionError: If g is zero.
        NotDivisibleError: If g does not divide f in Z[v, v^-1].
    """
    if g.is_zero():
        raise ZeroDivisionError("exact_div by the zero polynomial")
    if f.is_zero():
        return LaurentPoly()
    g_low = g.min_exponent()
    g_lead = g.coefficient(g_low)
    top = f.max_exponent() - g.max_exponent()
    quotient: dict[int, int] = {}
    remainder = f
    while remainder:
        low = remainder.min_exponent()
        c = remainder.coefficient(low)
        if c % g_lead:
            raise NotDivisibleError(f"{g} does not divide {f}")
        e = low - g_low
        if e > top:
            raise NotDivisibleError(f"{g} does not divide {f}")
        q = c // g_lead
        quotient[e] = q
        remainder = remainder - g.shift(e) * q
    return LaurentPoly(quotient)


def bar(f: LaurentPoly) -> LaurentPoly:
    """The ring involution v -> v^-1."""
    return LaurentPoly({-k: c for k, c in f.items()})


def specialize(f: LaurentPoly, a: int, p: int) -> int:
    """
    Evaluates f at v = a in the field with p elements.

    Raises:
        ZeroDivisionError: If a is 0 mod p, where v^-1 does not exist.
    """
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"cannot specialize v at 0 modulo {p}")
    return sum(c * pow(a, k, p) for k, c in f.items()) % p
