# -*- coding: utf-8 -*-
"""
Rank of matrices over Z[v, v^-1].

Generic rank is bounded from below by specializing v at a random point of a
prime field and eliminating there; exact fraction-free elimination over the
Laurent ring is available for small matrices as a cross-check.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from twinv.core.errors import SpecializationDegenerate
from twinv.services.laurent import LaurentPoly, exact_div, specialize

logger = logging.getLogger(__name__)

__all__ = [
    "SpecializedRank", "is_degenerate_point", "specialize_matrix",
    "rank_modp", "specialized_rank", "exact_rank",
]

PolyMatrix = Sequence[Sequence[LaurentPoly]]


@dataclass(frozen=True)
class SpecializedRank:
    rank: int
    prime: int
    point: int
    attempts: int


def is_degenerate_point(a: int, p: int) -> bool:
    """v = a is unusable when v or u + 1 = v^2 + 1 vanishes modulo p."""
    a %= p
    return a == 0 or (a * a + 1) % p == 0


def specialize_matrix(rows: PolyMatrix, a: int, p: int) -> np.ndarray:
    """Entry-wise evaluation at v = a; Python ints in an object array, so nothing overflows."""
    out = np.zeros((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, f in enumerate(row):
            if f:
                out[i, j] = specialize(f, a, p)
    return out


def rank_modp(A: np.ndarray, p: int) -> int:
    """Rank over F_p by Gaussian elimination on a copy of A."""
    A = np.array(A, dtype=object, copy=True) % p
    m, n = A.shape
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if A[i, c] != 0), None)
        if pivot is None:
            continue
        if pivot != r:
            A[[r, pivot], :] = A[[pivot, r], :]
        inv = pow(int(A[r, c]), -1, p)
        A[r, :] = (A[r, :] * inv) % p
        for i in range(r + 1, m):
            f = A[i, c]
            if f != 0:
                A[i, :] = (A[i, :] - f * A[r, :]) % p
        r += 1
        if r == m:
            break
    return r


def specialized_rank(
    rows: PolyMatrix,
    seed: int,
    prime: int,
    retries: int,
    upper_bound: Optional[int] = None,
) -> SpecializedRank:
    """
    Lower bound for the rank over Q(v), from up to ``retries`` random points.
    Stops at the first point that reaches ``upper_bound`` (or full rank), and
    otherwise returns the best rank seen.

    Raises:
        SpecializationDegenerate: If every point tried was degenerate.
    """
    height = len(rows)
    width = len(rows[0]) if rows else 0
    ceiling = min(height, width) if upper_bound is None else min(height, width, upper_bound)
    rng = np.random.default_rng(seed)
    best: Optional[SpecializedRank] = None
    for attempt in range(1, retries + 1):
        a = int(rng.integers(2, prime - 1))
        if is_degenerate_point(a, prime):
            logger.warning(f"Skipping degenerate specialization point v={a} mod {prime}")
            continue
        r = rank_modp(specialize_matrix(rows, a, prime), prime)
        logger.debug(f"rank {r} of {height}x{width} at v={a} (attempt {attempt})")
        if best is None or r > best.rank:
            best = SpecializedRank(r, prime, a, attempt)
        if r >= ceiling:
            break
    if best is None:
        raise SpecializationDegenerate(retries, prime)
    return best


def exact_rank(rows: PolyMatrix) -> int:
    """
    Rank over Q(v) by fraction-free (Bareiss) elimination in Z[v, v^-1]; every
    division by the previous pivot is exact.
    """
    M = [list(row) for row in rows]
    m = len(M)
    n = len(M[0]) if M else 0
    previous = LaurentPoly.ONE
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if M[i][c]), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        lead = M[r][c]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                M[i][j] = exact_div(lead * M[i][j] - M[i][c] * M[r][j], previous)
            M[i][c] = LaurentPoly.ZERO
        previous = lead
        r += 1
        if r == m:
            break
    return r
