# -*- coding: utf-8 -*-
"""
Exact arithmetic in the symmetric group S_n.

Permutations are stored in one-line notation with 1-based values, so that
``Permutation((3, 1, 2))`` sends 1 to 3, 2 to 1 and 3 to 2. Products follow a
single convention everywhere in the package: ``compose(p, q)(i) == p(q(i))``,
the right factor acts first. The simple reflection ``s_i`` swaps ``i`` and
``i+1``; multiplying by it on the left swaps the values ``i`` and ``i+1`` in the
one-line notation, on the right it swaps the positions.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from twinv.core.errors import InvalidInputError, RankMismatchError

__all__ = [
    "Permutation", "Word",
    "identity", "generator", "longest_element",
    "compose", "inverse", "length", "is_involution",
    "left_descents", "right_descents", "bruhat_leq",
    "left_mul_gen", "right_mul_gen", "check_letters",
    "reduced_word", "word_product", "all_permutations",
    "parse_permutation", "format_permutation", "parse_word",
]


@dataclass(frozen=True, slots=True)
class Permutation:
    """An element of S_n in one-line notation."""
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n < 1:
            raise InvalidInputError("a permutation needs at least one letter")
        if sorted(self.images) != list(range(1, n + 1)):
            raise InvalidInputError(f"{list(self.images)} is not a permutation of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return format_permutation(self)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical order: by length, then lexicographically by one-line notation."""
        return length(self), self.images


@dataclass(frozen=True, slots=True)
class Word:
    """A sequence of generator indices for S_n; each letter lies in 1..n-1."""
    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        check_letters(self.letters, self.n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.letters)


def check_letters(letters: Sequence[int], n: int) -> None:
    if n < 1:
        raise InvalidInputError(f"rank must be at least 1, got {n}")
    for i in letters:
        if not 1 <= i < n:
            raise InvalidInputError(f"generator index {i} is out of range 1..{n - 1}")


def _check_rank(p: Permutation, q: Permutation) -> None:
    if p.n != q.n:
        raise RankMismatchError(p.n, q.n)


@lru_cache(maxsize=None)
def identity(n: int) -> Permutation:
    """The identity of S_n."""
    if n < 1:
        raise InvalidInputError(f"rank must be at least 1, got {n}")
    return Permutation(tuple(range(1, n + 1)))


@lru_cache(maxsize=None)
def generator(i: int, n: int) -> Permutation:
    """The simple reflection s_i = (i, i+1) in S_n."""
    check_letters((i,), n)
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def longest_element(n: int) -> Permutation:
    """The permutation [n, n-1, ..., 1]."""
    return Permutation(tuple(range(n, 0, -1)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """
    Returns p*q, the permutation i -> p(q(i)).

    >>> compose(Permutation((1, 3, 2)), Permutation((2, 1, 3)))
    Permutation(images=(3, 1, 2))
    """
    _check_rank(p, q)
    return Permutation(tuple(p.images[j - 1] for j in q.images))


def inverse(p: Permutation) -> Permutation:
    images = [0] * p.n
    for i, j in enumerate(p.images, start=1):
        images[j - 1] = i
    return Permutation(tuple(images))


def length(p: Permutation) -> int:
    """Number of inversions, which equals the length of a reduced word."""
    images = p.images
    return sum(
        1
        for i in range(len(images))
        for j in range(i + 1, len(images))
        if images[i] > images[j]
    )


def is_involution(p: Permutation) -> bool:
    return all(p.images[j - 1] == i for i, j in enumerate(p.images, start=1))


def left_mul_gen(i: int, p: Permutation) -> Permutation:
    """s_i * p: swap the values i and i+1."""
    swap = {i: i + 1, i + 1: i}
    return Permutation(tuple(swap.get(j, j) for j in p.images))


def right_mul_gen(p: Permutation, i: int) -> Permutation:
    """p * s_i: swap the positions i and i+1."""
    images = list(p.images)
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def left_descents(p: Permutation) -> list[int]:
    """Generators s with l(sp) < l(p): i+1 occurs before i in one-line notation."""
    where = inverse(p).images
    return [i for i in range(1, p.n) if where[i - 1] > where[i]]


def right_descents(p: Permutation) -> list[int]:
    """Generators s with l(ps) < l(p): p(i) > p(i+1)."""
    return [i for i in range(1, p.n) if p.images[i - 1] > p.images[i]]


def _rank_matrix(p: Permutation) -> list[list[int]]:
    # r[i][j] = #{a <= i : p(a) >= j}, built by 2-d prefix sums
    n = p.n
    r = [[0] * (n + 2) for _ in range(n + 1)]
    for i in range(1, n + 1):
        v = p.images[i - 1]
        row, prev = r[i], r[i - 1]
        for j in range(n, 0, -1):
            row[j] = prev[j] + (1 if v >= j else 0)
    return r


def bruhat_leq(p: Permutation, q: Permutation) -> bool:
    """
    Bruhat order on S_n by comparing rank matrices: p <= q iff
    #{a <= i : p(a) >= j} <= #{a <= i : q(a) >= j} for every i, j.
    """
    _check_rank(p, q)
    if p == q:
        return True
    if length(p) >= length(q):
        return False
    rp, rq = _rank_matrix(p), _rank_matrix(q)
    n = p.n
    return all(rp[i][j] <= rq[i][j] for i in range(1, n + 1) for j in range(1, n + 1))


def reduced_word(p: Permutation) -> Word:
    """
    A reduced word for p, obtained by repeatedly stripping the smallest right
    descent; the letters are collected from the right end.
    """
    letters: list[int] = []
    current = p
    while True:
        descents = right_descents(current)
        if not descents:
            break
        i = descents[0]
        letters.append(i)
        current = right_mul_gen(current, i)
    return Word(tuple(reversed(letters)), p.n)


def word_product(word: Iterable[int], n: int) -> Permutation:
    """s_{i_1} s_{i_2} ... s_{i_k} for the given letters."""
    result = identity(n)
    for i in word:
        check_letters((i,), n)
        result = right_mul_gen(result, i)
    return result


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    """Every element of S_n, sorted by (length, one-line notation)."""
    perms = (Permutation(images) for images in permutations(range(1, n + 1)))
    return tuple(sorted(perms, key=Permutation.sort_key))


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """
    Parses comma-separated one-line notation such as "3,1,2".

    Raises:
        InvalidInputError: If the text is not a permutation, or has the wrong rank.
    """
    try:
        images = tuple(int(part) for part in text.replace(" ", "").split(",") if part)
    except ValueError:
        raise InvalidInputError(f"cannot parse permutation {text!r}")
    perm = Permutation(images)
    if n is not None and perm.n != n:
        raise InvalidInputError(f"permutation {text!r} has rank {perm.n}, expected {n}")
    return perm


def format_permutation(p: Permutation) -> str:
    return ",".join(str(i) for i in p.images)


def parse_word(text: str, n: int) -> Word:
    """Parses comma-separated generator indices such as "1,2,1"; the empty string is the empty word."""
    try:
        letters = tuple(int(part) for part in text.replace(" ", "").split(",") if part)
    except ValueError:
        raise InvalidInputError(f"cannot parse word {text!r}")
    return Word(letters, n)
