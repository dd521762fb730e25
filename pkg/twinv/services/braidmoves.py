# -*- coding: utf-8 -*-
"""
Braid moves on reduced I*-expressions and the graph they span.

Three kinds of move rewrite a reduced I*-expression of w into another one:

- commutation: swap adjacent letters b, c with |b - c| > 1, anywhere;
- long-braid: j, j+1, j <-> j+1, j, j+1, when at least one letter follows;
- tail-swap: the final two letters k, k+1 <-> k+1, k.

Every reduced I*-expression of an involution of S_n is reachable from every
other by these moves; ``verify_connectivity`` and ``verify_all`` check this
by breadth-first search.
"""
from __future__ import annotations

import logging
from collections import Counter, defaultdict, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from twinv.core.config import config
from twinv.core.errors import InvalidInputError, InvariantViolation, PreconditionError
from twinv.services.istar import (
    Involution, IStarWord, enumerate_involutions, evaluate, is_reduced_sequence,
    reduced_istar_expressions, rho, twist, twist_word,
)
from twinv.services.reports import BraidEdge, BraidReport, BraidSweepReport, TrichotomyCount
from twinv.services.symgroup import identity, left_mul_gen, right_mul_gen

logger = logging.getLogger(__name__)

__all__ = [
    "COMMUTATION", "LONG_BRAID", "TAIL_SWAP",
    "BraidGraph", "TrichotomyCase",
    "braid_moves", "braid_neighbors", "build_braid_graph", "verify_connectivity",
    "braid_graph_dot", "check_case_trichotomy", "trichotomy_census",
    "check_commuting_swap", "check_tail_exchange", "verify_all",
]

COMMUTATION = "commutation"
LONG_BRAID = "long-braid"
TAIL_SWAP = "tail-swap"


def _check_reduced(word: IStarWord) -> Involution:
    w = evaluate(word)
    if rho(w) != len(word):
        raise PreconditionError(f"({word}) is not a reduced I*-expression")
    return w


def _candidates(letters: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], str]]:
    k = len(letters)
    for p in range(k - 1):
        b, c = letters[p], letters[p + 1]
        if abs(b - c) > 1:
            yield letters[:p] + (c, b) + letters[p + 2:], COMMUTATION
    # a long-braid triple must be followed by at least one letter
    for p in range(k - 3):
        j, m, j2 = letters[p:p + 3]
        if j == j2 and abs(j - m) == 1:
            yield letters[:p] + (m, j, m) + letters[p + 3:], LONG_BRAID
    if k >= 2 and abs(letters[-2] - letters[-1]) == 1:
        yield letters[:-2] + (letters[-1], letters[-2]), TAIL_SWAP


def braid_moves(word: IStarWord) -> list[tuple[IStarWord, str]]:
    """
    Every word one braid move away from word, with the kind of move.

    Raises:
        PreconditionError: If word is not a reduced I*-expression.
        InvariantViolation: If a move breaks reducedness or changes the involution.
    """
    w = _check_reduced(word)
    moves = []
    for letters, kind in _candidates(word.letters):
        candidate = IStarWord(letters, word.n, reduced=True)
        # same length and same value means reduced
        if evaluate(candidate) != w:
            raise InvariantViolation(f"{kind} move ({word}) -> ({candidate}) leaves the reduced expressions of {w}")
        moves.append((candidate, kind))
    return moves


def braid_neighbors(word: IStarWord) -> set[IStarWord]:
    return {candidate for candidate, _ in braid_moves(word)}


@dataclass(frozen=True)
class BraidGraph:
    """Reduced I*-expressions of w joined by single braid moves."""
    w: Involution
    vertices: tuple[IStarWord, ...]
    edges: tuple[tuple[IStarWord, IStarWord, str], ...]

    def adjacency(self) -> dict[bytes, list[IStarWord]]:
        adj: dict[bytes, list[IStarWord]] = defaultdict(list)
        for a, b, _ in self.edges:
            adj[a.key()].append(b)
            adj[b.key()].append(a)
        return adj

    def distances(self, start: IStarWord) -> dict[bytes, int]:
        """Breadth-first distances from start, keyed by word."""
        adj = self.adjacency()
        dist = {start.key(): 0}
        queue = deque([start])
        while queue:
            word = queue.popleft()
            for nxt in adj[word.key()]:
                if nxt.key() not in dist:
                    dist[nxt.key()] = dist[word.key()] + 1
                    queue.append(nxt)
        return dist


def build_braid_graph(w: Involution) -> BraidGraph:
    """
    Raises:
        InvariantViolation: If a move leads outside the reduced I*-expressions of w.
    """
    vertices = reduced_istar_expressions(w)
    keys = {word.key() for word in vertices}
    edges = {}
    for word in vertices:
        for candidate, kind in braid_moves(word):
            if candidate.key() not in keys:
                raise InvariantViolation(f"({candidate}) is not among the reduced I*-expressions of {w}")
            a, b = sorted((word, candidate), key=lambda x: x.letters)
            edges[(a.key(), b.key())] = (a, b, kind)
    ordered = tuple(edges[key] for key in sorted(edges))
    return BraidGraph(w, vertices, ordered)


def verify_connectivity(w: Involution) -> BraidReport:
    """
    Runs BFS from the lexicographically smallest expression. The diameter is
    the double-sweep estimate: the eccentricity of a vertex farthest from the
    start, exact on trees and a lower bound otherwise.
    """
    graph = build_braid_graph(w)
    start = graph.vertices[0]
    dist = graph.distances(start)
    connected = len(dist) == len(graph.vertices)
    by_key = {word.key(): word for word in graph.vertices}
    far = by_key[max(dist, key=lambda key: (dist[key], key))]
    diameter = max(graph.distances(far).values())
    if not connected:
        logger.error(f"Braid graph of {w} is not connected: reached {len(dist)} of {len(graph.vertices)}")
    return BraidReport(
        n=w.n,
        involution=str(w),
        vertices=[str(word) for word in graph.vertices],
        edges=[BraidEdge(source=str(a), target=str(b), kind=kind) for a, b, kind in graph.edges],
        vertex_count=len(graph.vertices),
        edge_count=len(graph.edges),
        connected=connected,
        diameter=diameter,
    )


def braid_graph_dot(w: Involution) -> str:
    """The braid graph in DOT, with move kinds as edge labels."""
    graph = build_braid_graph(w)
    lines = [f'graph "{w}" {{']
    lines += [f'  "{word}";' for word in graph.vertices]
    lines += [f'  "{a}" -- "{b}" [label="{kind}"];' for a, b, kind in graph.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _commutes(s: int, w: Involution) -> bool:
    return left_mul_gen(s, w) == right_mul_gen(w, s)


def _bits(letters: Sequence[int], w: Involution) -> tuple[bool, ...]:
    # commutation of each letter with the involution it acts on, first letter acting first
    bits = []
    for s in letters:
        bits.append(_commutes(s, w))
        w = twist(s, w)
    return tuple(bits)


ADJACENT_TRIPLE = "adjacent-triple"
COMMUTING_PAIR = "commuting-pair"

# (bits acting x, y, x) , (bits acting y, x, y) for a word ending x=i_k preceded by y
_TRIPLE_CASES = {
    ((False, False, False), (False, False, False)): "a",
    ((False, False, True), (True, False, False)): "b",
    ((True, False, False), (False, False, True)): "c",
}

# (bits acting a then b) , (bits acting b then a) for a word ending a, b
_PAIR_CASES = {
    ((False, False), (False, False)): "a",
    ((True, False), (False, True)): "b",
    ((False, True), (True, False)): "c",
    ((True, True), (True, True)): "d",
}


@dataclass(frozen=True)
class TrichotomyCase:
    pattern: str
    case: str


def check_case_trichotomy(word: IStarWord, w: Optional[Involution] = None) -> TrichotomyCase:
    """
    Classifies how the final letters of word act on w (default: the identity).
    A word ending y, x, y with |x - y| = 1 falls into one of three cases, a word
    ending a, b with |a - b| > 1 into one of four; the cases are told apart by
    which letters commute with the involution they act on, in either order.

    Raises:
        PreconditionError: If (word, w) is not reduced or the ending has neither shape.
        InvariantViolation: If no case matches.
    """
    if w is None:
        w = Involution(identity(word.n))
    if not is_reduced_sequence(word, w):
        raise PreconditionError(f"({word}) is not reduced on {w}")
    letters = word.letters
    if len(letters) >= 3 and letters[-3] == letters[-1] and abs(letters[-1] - letters[-2]) == 1:
        x, y = letters[-1], letters[-2]
        key = (_bits((x, y, x), w), _bits((y, x, y), w))
        pattern, table = ADJACENT_TRIPLE, _TRIPLE_CASES
    elif len(letters) >= 2 and abs(letters[-2] - letters[-1]) > 1:
        a, b = letters[-2], letters[-1]
        key = (_bits((a, b), w), _bits((b, a), w))
        pattern, table = COMMUTING_PAIR, _PAIR_CASES
    else:
        raise PreconditionError(f"({word}) ends in neither j, j+-1, j nor a commuting pair")
    case = table.get(key)
    if case is None:
        raise InvariantViolation(f"({word}) on {w}: no case matches commutation pattern {key}")
    return TrichotomyCase(pattern, case)


def trichotomy_census(w: Involution) -> Counter:
    """
    Classifies every position of every reduced I*-expression of w whose
    letters match one of the two shapes, acting on the involution of the
    remaining suffix.
    """
    census: Counter = Counter()
    one = Involution(identity(w.n))
    for word in reduced_istar_expressions(w):
        letters = word.letters
        for end in range(2, len(letters) + 1):
            head, tail = letters[:end], letters[end:]
            triple = end >= 3 and head[-3] == head[-1] and abs(head[-1] - head[-2]) == 1
            pair = abs(head[-2] - head[-1]) > 1
            if triple or pair:
                base = twist_word(tail, one)
                result = check_case_trichotomy(IStarWord(head[-3:] if triple else head[-2:], w.n), base)
                census[(result.pattern, result.case)] += 1
    return census


def check_commuting_swap(a: int, b: int, w: Involution) -> bool:
    """
    For |a - b| > 1 and (a, b) reduced on w: (b, a) is reduced on w as well and
    gives the same involution.

    Raises:
        PreconditionError: If |a - b| <= 1 or (a, b) is not reduced on w.
    """
    if abs(a - b) <= 1:
        raise PreconditionError(f"s{a} and s{b} do not commute")
    forward = IStarWord((a, b), w.n)
    if not is_reduced_sequence(forward, w):
        raise PreconditionError(f"({forward}) is not reduced on {w}")
    swapped = IStarWord((b, a), w.n)
    return is_reduced_sequence(swapped, w) and twist_word(swapped, w) == twist_word(forward, w)


def check_tail_exchange(prefix: Sequence[int], k: int, j: int, n: int) -> bool:
    """
    With |j - k| = 1: (prefix, k) acting on s_j equals (prefix, j) acting on
    s_k, and one is reduced exactly when the other is.

    Raises:
        PreconditionError: If |j - k| != 1 or (prefix, k, j) is not reduced.
    """
    if abs(j - k) != 1:
        raise PreconditionError(f"s{k} and s{j} are not adjacent")
    word = IStarWord(tuple(prefix) + (k, j), n)
    if rho(evaluate(word)) != len(word):
        raise PreconditionError(f"({word}) is not a reduced I*-expression")
    other = IStarWord(tuple(prefix) + (j, k), n)
    return evaluate(other) == evaluate(word) and rho(evaluate(other)) == len(other)


def _sweep_one(w: Involution) -> tuple[BraidReport, Counter]:
    return verify_connectivity(w), trichotomy_census(w)


def verify_all(n: int, jobs: Optional[int] = None) -> BraidSweepReport:
    """Connectivity and case census for every involution of S_n, optionally in a process pool."""
    if n > config.slow_rank_cap:
        raise InvalidInputError(f"rank {n} exceeds the configured cap {config.slow_rank_cap}")
    jobs = config.jobs if jobs is None else jobs
    involutions = enumerate_involutions(n)
    logger.info(f"Checking braid connectivity for {len(involutions)} involutions of S_{n} (jobs={jobs})...")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_one, involutions))
    else:
        results = [_sweep_one(w) for w in involutions]
    census: Counter = Counter()
    for _, counts in results:
        census.update(counts)
    reports = [report for report, _ in results]
    disconnected = [r.involution for r in reports if not r.connected]
    logger.info(f"S_{n}: {len(reports) - len(disconnected)} of {len(reports)} braid graphs connected")
    return BraidSweepReport(
        n=n,
        involution_count=len(reports),
        all_connected=not disconnected,
        disconnected=disconnected,
        max_vertices=max(r.vertex_count for r in reports),
        max_diameter=max(r.diameter for r in reports),
        total_edges=sum(r.edge_count for r in reports),
        trichotomy=[
            TrichotomyCount(pattern=pattern, case=case, count=count)
            for (pattern, case), count in sorted(census.items())
        ],
    )
