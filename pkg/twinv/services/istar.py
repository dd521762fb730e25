# -*- coding: utf-8 -*-
"""
Involutions of S_n, the twisted conjugation s ⋉ w, the rank function rho and
reduced I*-expressions.

With the trivial twist, ``s ⋉ w`` is ``sw`` when s and w commute and ``sws``
otherwise. An I*-expression ``(i_1, ..., i_k)`` stands for
``s_{i_1} ⋉ (s_{i_2} ⋉ ( ... ⋉ (s_{i_k} ⋉ 1)))``, so the last letter acts first.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NewType, Sequence

from twinv.core.config import config
from twinv.core.errors import (
    InvalidInputError, InvariantViolation, PreconditionError, RankMismatchError,
)
from twinv.services.symgroup import (
    Permutation, check_letters, identity, is_involution, left_descents,
    left_mul_gen, length, right_mul_gen,
)

logger = logging.getLogger(__name__)

__all__ = [
    "Involution", "IStarWord",
    "to_involution", "twist", "twist_word", "evaluate", "rho",
    "enumerate_involutions", "involution_count", "reduced_istar_expressions",
    "canonical_expression", "is_reduced_sequence", "exchange_index",
    "reduced_expression_starting_with", "bfs_rho_table", "non_action_witness",
]

# a permutation w with w*w == 1
Involution = NewType("Involution", Permutation)


@dataclass(frozen=True, slots=True)
class IStarWord:
    """Generator indices read under ⋉, leftmost letter applied last; ``reduced`` is a hint only."""
    letters: tuple[int, ...]
    n: int
    reduced: bool = field(default=False, compare=False)

    def __post_init__(self):
        check_letters(self.letters, self.n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.letters)

    def key(self) -> bytes:
        """Canonical hash key: the letters as a byte string."""
        return bytes(self.letters)


def to_involution(p: Permutation) -> Involution:
    """Narrows p to an Involution; InvalidInputError otherwise."""
    if not is_involution(p):
        raise InvalidInputError(f"{p} is not an involution")
    return Involution(p)


def _check_cap(n: int, cap: int) -> None:
    """Rank must lie in 1..cap."""
    if n < 1:
        raise InvalidInputError(f"rank must be at least 1, got {n}")
    if n > cap:
        raise InvalidInputError(f"rank {n} exceeds the configured cap {cap}")


def twist(s: int, w: Involution) -> Involution:
    """s ⋉ w: sw if s and w commute, sws otherwise."""
    check_letters((s,), w.n)
    sw = left_mul_gen(s, w)
    if sw == right_mul_gen(w, s):
        return Involution(sw)
    return Involution(right_mul_gen(sw, s))


def twist_word(word: IStarWord | Sequence[int], w: Involution) -> Involution:
    """Right-to-left fold of twist over the letters of word."""
    if isinstance(word, IStarWord) and word.n != w.n:
        raise RankMismatchError(word.n, w.n)
    result = w
    for s in reversed(tuple(word)):
        result = twist(s, result)
    return result


def evaluate(word: IStarWord) -> Involution:
    """The involution an I*-expression stands for, i.e. its action on the identity."""
    return twist_word(word, Involution(identity(word.n)))


@lru_cache(maxsize=None)
def _descent_path(w: Involution) -> tuple[int, ...]:
    """Letters stripped by repeatedly taking the smallest left descent."""
    letters = []
    current = w
    while True:
        descents = left_descents(current)
        if not descents:
            break
        letters.append(descents[0])
        current = twist(descents[0], current)
    return tuple(letters)


def rho(w: Involution) -> int:
    """Common length of the reduced I*-expressions of w."""
    # any left descent lowers rho by exactly one
    return len(_descent_path(w))


def canonical_expression(w: Involution) -> IStarWord:
    """The lexicographically smallest reduced I*-expression of w."""
    return IStarWord(_descent_path(w), w.n, reduced=True)


def _involutions(n: int) -> list[Permutation]:
    """Partial matchings on 1..n, grown position by position."""
    found = []

    def extend(images: list[int], i: int) -> None:
        if i > n:
            found.append(Permutation(tuple(images)))
            return
        if images[i - 1]:
            extend(images, i + 1)
            return
        images[i - 1] = i
        extend(images, i + 1)
        for j in range(i + 1, n + 1):
            if not images[j - 1]:
                images[i - 1], images[j - 1] = j, i
                extend(images, i + 1)
                images[j - 1] = 0
        images[i - 1] = 0

    extend([0] * n, 1)
    return found


@lru_cache(maxsize=None)
def enumerate_involutions(n: int) -> tuple[Involution, ...]:
    """All involutions of S_n, sorted by (rho, one-line notation)."""
    _check_cap(n, config.istar_rank_cap)
    involutions = [Involution(p) for p in _involutions(n)]
    return tuple(sorted(involutions, key=lambda w: (rho(w), w.images)))


def involution_count(n: int) -> int:
    return len(enumerate_involutions(n))


@lru_cache(maxsize=None)
def _expressions(w: Involution) -> frozenset[tuple[int, ...]]:
    """Letter tuples of the reduced I*-expressions, one left descent at a time."""
    if not left_descents(w):
        return frozenset({()})
    words = set()
    for s in left_descents(w):
        for tail in _expressions(twist(s, w)):
            words.add((s,) + tail)
    return frozenset(words)


def reduced_istar_expressions(w: Involution) -> tuple[IStarWord, ...]:
    """Every reduced I*-expression of w, in lexicographic order."""
    _check_cap(w.n, config.istar_rank_cap)
    return tuple(IStarWord(letters, w.n, reduced=True) for letters in sorted(_expressions(w)))


def is_reduced_sequence(word: IStarWord, w: Involution) -> bool:
    """True iff rho(word ⋉ w) == rho(w) + len(word)."""
    return rho(twist_word(word, w)) == rho(w) + len(word)


def exchange_index(s: int, word: IStarWord) -> int:
    """Smallest 1-based position whose deletion from word gives s ⋉ evaluate(word)."""
    w = evaluate(word)
    k = len(word)
    if rho(w) != k:
        raise PreconditionError(f"({word}) is not a reduced I*-expression")
    target = twist(s, w)
    if rho(target) >= k:
        raise PreconditionError(f"s{s} does not lower the rank of ({word})")
    identity_w = Involution(identity(word.n))
    for a in range(1, k + 1):
        shorter = word.letters[:a - 1] + word.letters[a:]
        if twist_word(shorter, identity_w) == target:
            return a
    raise InvariantViolation(f"no exchange index for s{s} on ({word})")


def reduced_expression_starting_with(s: int, w: Involution) -> IStarWord:
    """A reduced I*-expression of w beginning with the left descent s."""
    if length(left_mul_gen(s, w)) >= length(w):
        raise PreconditionError(f"s{s} is not a left descent of {w}")
    rest = _descent_path(twist(s, w))
    return IStarWord((s,) + rest, w.n, reduced=True)


def bfs_rho_table(n: int) -> dict[Involution, int]:
    """First-reach depth of every involution under ⋉, starting from the identity."""
    start = Involution(identity(n))
    depth = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in range(1, n):
            nxt = twist(s, w)
            if nxt not in depth:
                depth[nxt] = depth[w] + 1
                queue.append(nxt)
    logger.debug(f"BFS reached {len(depth)} involutions of S_{n}")
    return depth


def non_action_witness(n: int = 4) -> tuple[Involution, Involution]:
    """(1, 2, 1) and (2, 1, 2) applied to s_2 under ⋉; the two results differ."""
    if n < 3:
        raise PreconditionError("the witness needs two adjacent generators, n >= 3")
    w = Involution(left_mul_gen(2, identity(n)))
    return twist_word((1, 2, 1), w), twist_word((2, 1, 2), w)
