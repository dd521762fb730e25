# -*- coding: utf-8 -*-
"""
Partitions, standard Young tableaux and the Robinson-Schensted correspondence.

Row insertion bumps the smallest entry larger than the inserted value. With
this convention Q(w) == P(w^-1), so w is an involution exactly when P == Q,
and the number of involutions of S_n is the sum of #Std(λ) over λ ⊢ n.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator

from twinv.core.config import config
from twinv.core.errors import InvalidInputError
from twinv.services.istar import enumerate_involutions
from twinv.services.reports import CountIdentity
from twinv.services.symgroup import Permutation

__all__ = [
    "Partition", "StandardTableau",
    "partitions", "conjugate", "standard_tableaux", "std_count",
    "hook_length_count", "rsk_insert", "involution_count_identity",
    "render_tableau",
]


@dataclass(frozen=True, slots=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise InvalidInputError(f"partition parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise InvalidInputError(f"partition {self.parts} is not in decreasing order")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True, slots=True)
class StandardTableau:
    """Rows of a tableau filled with 1..n, increasing along rows and down columns."""
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = sorted(x for row in self.rows for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise InvalidInputError(f"tableau entries must be 1..{len(entries)}")
        Partition(tuple(len(row) for row in self.rows))
        for r, row in enumerate(self.rows):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise InvalidInputError(f"row {r + 1} of {self.rows} is not increasing")
            if r and any(row[c] <= self.rows[r - 1][c] for c in range(len(row))):
                raise InvalidInputError(f"columns of {self.rows} are not increasing")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def partitions(n: int) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order, (n) first."""
    def generate(remaining: int, largest: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield Partition(prefix)
            return
        for part in range(min(remaining, largest), 0, -1):
            yield from generate(remaining - part, part, prefix + (part,))

    if n < 0:
        raise InvalidInputError(f"cannot partition {n}")
    yield from generate(n, n, ())


def conjugate(shape: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not shape.parts:
        return shape
    return Partition(tuple(
        sum(1 for p in shape.parts if p > c) for c in range(shape.parts[0])
    ))


@lru_cache(maxsize=None)
def standard_tableaux(shape: Partition) -> tuple[StandardTableau, ...]:
    """
    Every standard tableau of the shape, generated by removing the largest
    entry from each outer corner in turn.
    """
    n = shape.size
    if n == 0:
        return (StandardTableau(()),)
    found = []
    parts = shape.parts
    for r, length in enumerate(parts):
        # (r, length-1) is a corner when the next row is strictly shorter
        if r + 1 < len(parts) and parts[r + 1] == length:
            continue
        smaller = parts[:r] + (length - 1,) + parts[r + 1:]
        smaller = tuple(p for p in smaller if p)
        for t in standard_tableaux(Partition(smaller)):
            rows = [list(row) for row in t.rows]
            if r == len(rows):
                rows.append([])
            rows[r].append(n)
            found.append(StandardTableau(tuple(tuple(row) for row in rows)))
    return tuple(sorted(found, key=lambda t: t.rows))


def std_count(shape: Partition) -> int:
    return len(standard_tableaux(shape))


def hook_length_count(shape: Partition) -> int:
    """#Std(λ) = n! / product of hook lengths."""
    columns = conjugate(shape).parts
    product = 1
    for r, length in enumerate(shape.parts):
        for c in range(length):
            product *= (length - c - 1) + (columns[c] - r - 1) + 1
    return factorial(shape.size) // product


def rsk_insert(w: Permutation) -> tuple[StandardTableau, StandardTableau]:
    """(P(w), Q(w)) by row insertion of w(1), ..., w(n)."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, value in enumerate(w.images, start=1):
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([value])
                q_rows.append([step])
                break
            row = p_rows[r]
            c = bisect_right(row, value)
            if c == len(row):
                row.append(value)
                q_rows[r].append(step)
                break
            row[c], value = value, row[c]
            r += 1
    return (
        StandardTableau(tuple(tuple(row) for row in p_rows)),
        StandardTableau(tuple(tuple(row) for row in q_rows)),
    )


def involution_count_identity(n: int) -> CountIdentity:
    """Compares the sum of #Std(λ) over λ ⊢ n with the number of involutions of S_n."""
    if n > config.rsk_rank_cap:
        raise InvalidInputError(f"rank {n} exceeds the configured cap {config.rsk_rank_cap}")
    lhs = sum(std_count(shape) for shape in partitions(n))
    rhs = len(enumerate_involutions(n))
    return CountIdentity(lhs=lhs, rhs=rhs, equal=lhs == rhs)


def render_tableau(t: StandardTableau) -> str:
    """Aligned text grid, one line per row."""
    if not t.rows:
        return ""
    width = len(str(max(max(row) for row in t.rows)))
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in t.rows)
