# -*- coding: utf-8 -*-
"""
The map eta: M -> H X_∅ with a_1 -> X_∅, realized along a reduced
I*-expression (j_1, ..., j_k) of w as

    eta(a_w) = θ_1 ∘ θ_2 ∘ ... ∘ θ_k (X_∅)

where θ_t is (T_s - u)/(u+1) when s = s_{j_t} commutes with the involution
of the suffix (j_{t+1}, ..., j_k), and T_s otherwise.

From n = 3 on the division by u+1 is not exact in Z[v, v^-1], so images are
kept as ScaledHecke values numerator / (u+1)^d in lowest terms.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Optional, Sequence

from twinv.core.config import config
from twinv.core.errors import (
    InvalidInputError, NotDivisibleError, PreconditionError, RankMismatchError,
)
from twinv.services.combination import Coefficient, as_poly
from twinv.services.hecke import HeckeElement, apply_t, mul, mul_gen_left, x_empty
from twinv.services.istar import (
    Involution, IStarWord, canonical_expression, enumerate_involutions, evaluate,
    reduced_istar_expressions, rho, twist_word,
)
from twinv.services.laurent import LaurentPoly, exact_div
from twinv.services.linalg import exact_rank, specialized_rank
from twinv.services.lvmodule import MElement, a_basis, act_gen
from twinv.services.reports import VerifyReport
from twinv.services.symgroup import (
    Permutation, all_permutations, check_letters, identity, left_mul_gen, right_mul_gen,
)

logger = logging.getLogger(__name__)

__all__ = [
    "StepKind", "ThetaStep", "ThetaPlan", "ScaledHecke",
    "theta_plan", "apply_theta", "eta_basis", "eta",
    "span_matrix", "eta_matrix", "dim_image", "injectivity_rank",
    "case3_identity", "verify_conjecture",
]

U = LaurentPoly.U
U_PLUS_ONE = LaurentPoly.U_PLUS_ONE


class StepKind(str, Enum):
    MUL_T = "mul-t"
    MUL_T_MINUS_U_DIV_U_PLUS_1 = "mul-t-minus-u-div-u-plus-1"


@dataclass(frozen=True)
class ThetaStep:
    letter: int
    kind: StepKind


@dataclass(frozen=True)
class ThetaPlan:
    word: IStarWord
    steps: tuple[ThetaStep, ...]

    @property
    def n(self) -> int:
        return self.word.n


@lru_cache(maxsize=None)
def _u_plus_one_power(k: int) -> LaurentPoly:
    result = LaurentPoly.ONE
    for _ in range(k):
        result = result * U_PLUS_ONE
    return result


def _divide_by_u_plus_one(h: HeckeElement) -> Optional[HeckeElement]:
    try:
        return h.map_coefficients(lambda c: exact_div(c, U_PLUS_ONE))
    except NotDivisibleError:
        return None


class ScaledHecke(object):
    """
    numerator / (u+1)^power with numerator in the integral Hecke algebra.
    The constructor cancels common factors of u+1, so equal values have equal
    (numerator, power).
    """
    __slots__ = ("numerator", "power")

    def __init__(self, numerator: HeckeElement, power: int = 0):
        if power < 0:
            raise PreconditionError(f"denominator power must be nonnegative, got {power}")
        if not numerator:
            power = 0
        while power > 0:
            reduced = _divide_by_u_plus_one(numerator)
            if reduced is None:
                break
            numerator, power = reduced, power - 1
        self.numerator = numerator
        self.power = power

    @property
    def n(self) -> int:
        return self.numerator.n

    def is_integral(self) -> bool:
        return self.power == 0

    def _lift(self, power: int) -> HeckeElement:
        return self.numerator.scale(_u_plus_one_power(power - self.power))

    def __add__(self, other: "ScaledHecke") -> "ScaledHecke":
        if self.n != other.n:
            raise RankMismatchError(self.n, other.n)
        power = max(self.power, other.power)
        return ScaledHecke(self._lift(power) + other._lift(power), power)

    def __neg__(self) -> "ScaledHecke":
        return ScaledHecke(-self.numerator, self.power)

    def __sub__(self, other: "ScaledHecke") -> "ScaledHecke":
        return self + (-other)

    def scale(self, c: Coefficient) -> "ScaledHecke":
        return ScaledHecke(self.numerator.scale(as_poly(c)), self.power)

    def left_mul_gen(self, s: int) -> "ScaledHecke":
        """T_s * self"""
        return ScaledHecke(mul_gen_left(s, self.numerator), self.power)

    def left_mul(self, h: HeckeElement) -> "ScaledHecke":
        return ScaledHecke(mul(h, self.numerator), self.power)

    def theta_divide(self, s: int) -> "ScaledHecke":
        """(T_s - u)/(u+1) * self"""
        num = mul_gen_left(s, self.numerator) - self.numerator.scale(U)
        return ScaledHecke(num, self.power + 1)

    def __eq__(self, other):
        if not isinstance(other, ScaledHecke):
            return NotImplemented
        return self.power == other.power and self.numerator == other.numerator

    def __hash__(self):
        return hash((self.power, self.numerator))

    def __bool__(self) -> bool:
        return bool(self.numerator)

    def __str__(self) -> str:
        if self.power == 0:
            return str(self.numerator)
        return f"[{self.numerator}] / (u+1)^{self.power}"

    def __repr__(self):
        return f"ScaledHecke(power={self.power}, {self.numerator!r})"

    def to_json(self) -> dict:
        return {"denominator_power": self.power, "numerator": self.numerator.to_json()}

    @classmethod
    def zero(cls, n: int) -> "ScaledHecke":
        return cls(HeckeElement(n, ()))


def theta_plan(word: IStarWord) -> ThetaPlan:
    """
    Raises:
        PreconditionError: If word is not a reduced I*-expression.
    """
    n = word.n
    if rho(evaluate(word)) != len(word):
        raise PreconditionError(f"({word}) is not a reduced I*-expression")
    one = Involution(identity(n))
    steps = []
    for t, s in enumerate(word.letters):
        suffix = twist_word(word.letters[t + 1:], one)
        if left_mul_gen(s, suffix) == right_mul_gen(suffix, s):
            steps.append(ThetaStep(s, StepKind.MUL_T_MINUS_U_DIV_U_PLUS_1))
        else:
            steps.append(ThetaStep(s, StepKind.MUL_T))
    return ThetaPlan(word, tuple(steps))


def apply_theta(plan: ThetaPlan, n: int) -> ScaledHecke:
    """θ_1 ∘ ... ∘ θ_k applied to X_∅, last step first."""
    if plan.n != n:
        raise RankMismatchError(plan.n, n)
    current = ScaledHecke(x_empty(n))
    for step in reversed(plan.steps):
        if step.kind is StepKind.MUL_T:
            current = current.left_mul_gen(step.letter)
        else:
            current = current.theta_divide(step.letter)
    return current


@lru_cache(maxsize=None)
def eta_basis(w: Involution) -> ScaledHecke:
    """eta(a_w), computed along the canonical reduced I*-expression of w."""
    return apply_theta(theta_plan(canonical_expression(w)), w.n)


def eta(m: MElement) -> ScaledHecke:
    result = ScaledHecke.zero(m.n)
    for w, c in m.items():
        result = result + eta_basis(w).scale(c)
    return result


def _span_column(w: Permutation) -> HeckeElement:
    return apply_t(w, x_empty(w.n))


def _eta_column(w: Involution) -> HeckeElement:
    return eta_basis(w).numerator


def _columns(fn: Callable, items: Sequence, jobs: int) -> list[HeckeElement]:
    # columns are independent pure tasks
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _matrix(columns: Sequence[HeckeElement], n: int) -> list[list[LaurentPoly]]:
    # rows indexed by S_n in (length, one-line) order
    return [[col.coefficient(x) for col in columns] for x in all_permutations(n)]


def span_matrix(n: int, jobs: int = 1) -> list[list[LaurentPoly]]:
    """Coefficients of T_w X_∅ for every w in S_n, one column per w."""
    return _matrix(_columns(_span_column, all_permutations(n), jobs), n)


def eta_matrix(n: int, jobs: int = 1) -> list[list[LaurentPoly]]:
    """
    Numerators of eta(a_w), one column per involution. Clearing the (u+1)
    denominators scales columns by nonzero scalars, so the rank is unchanged.
    """
    return _matrix(_columns(_eta_column, enumerate_involutions(n), jobs), n)


def _check_rank_cap(n: int, cap: int) -> None:
    if n < 1:
        raise InvalidInputError(f"rank must be at least 1, got {n}")
    if n > cap:
        raise InvalidInputError(f"rank {n} exceeds the configured cap {cap}")


def dim_image(n: int, seed: Optional[int] = None, jobs: int = 1, slow: bool = False):
    """
    Lower bound for dim H X_∅ over Q(u): the rank of {T_w X_∅} at a random
    specialization. Returns the SpecializedRank with the point used.

    Raises:
        SpecializationDegenerate: If every point tried was degenerate.
    """
    _check_rank_cap(n, config.slow_rank_cap if slow else config.verify_rank_cap)
    return specialized_rank(
        span_matrix(n, jobs),
        seed=config.seed if seed is None else seed,
        prime=config.prime,
        retries=config.specialization_retries,
        upper_bound=len(enumerate_involutions(n)),
    )


def injectivity_rank(n: int, seed: Optional[int] = None, jobs: int = 1):
    """Specialized rank of the eta images; full column rank certifies that eta is injective."""
    return specialized_rank(
        eta_matrix(n, jobs),
        seed=config.seed if seed is None else seed,
        prime=config.prime,
        retries=config.specialization_retries,
    )


def case3_identity(a: int, n: int) -> bool:
    """T_{s_a} (T_{s_{a+1}} - u)/(u+1) X_∅ == T_{s_{a+1}} (T_{s_a} - u)/(u+1) X_∅."""
    check_letters((a, a + 1), n)
    x = ScaledHecke(x_empty(n))
    left = x.theta_divide(a + 1).left_mul_gen(a)
    right = x.theta_divide(a).left_mul_gen(a + 1)
    return left == right


def _theta_counterexample(n: int) -> Optional[str]:
    for w in enumerate_involutions(n):
        expressions = reduced_istar_expressions(w)
        reference = apply_theta(theta_plan(expressions[0]), n)
        for word in expressions[1:]:
            if apply_theta(theta_plan(word), n) != reference:
                return f"theta differs on ({expressions[0]}) and ({word}) for {w}"
    return None


def _homomorphism_counterexample(n: int) -> Optional[str]:
    for w in enumerate_involutions(n):
        image = eta_basis(w)
        for s in range(1, n):
            if eta(act_gen(s, a_basis(w))) != image.left_mul_gen(s):
                return f"eta(T_{s} a_{w}) != T_{s} eta(a_{w})"
    return None


def verify_conjecture(
    n: int,
    seed: Optional[int] = None,
    slow: bool = False,
    exact: bool = False,
    jobs: Optional[int] = None,
) -> VerifyReport:
    """
    Runs every check behind the statement that H X_∅ has dimension equal to
    the number of involutions and that eta is an isomorphism onto it.
    """
    _check_rank_cap(n, config.slow_rank_cap if slow else config.verify_rank_cap)
    if exact:
        _check_rank_cap(n, config.exact_rank_cap)
    jobs = config.jobs if jobs is None else jobs
    started = time.perf_counter()
    logger.info(f"Verifying S_{n} (seed={config.seed if seed is None else seed}, jobs={jobs})...")

    theta_failure = _theta_counterexample(n)
    homomorphism_failure = _homomorphism_counterexample(n)
    case3_failure = next(
        (f"case-3 identity fails at a={a}" for a in range(1, n - 1) if not case3_identity(a, n)),
        None,
    )
    count = len(enumerate_involutions(n))
    span = dim_image(n, seed=seed, jobs=jobs, slow=slow)
    injective = injectivity_rank(n, seed=seed, jobs=jobs)
    exact_dim = exact_rank(span_matrix(n)) if exact else None

    failures = [f for f in (theta_failure, homomorphism_failure, case3_failure) if f]
    if span.rank != count:
        failures.append(f"dim_image {span.rank} != {count} involutions")
    if injective.rank != count:
        failures.append(f"eta images have rank {injective.rank} < {count}")
    if exact_dim is not None and exact_dim != count:
        failures.append(f"exact dim_image {exact_dim} != {count} involutions")
    certified = not failures
    if certified:
        logger.info(f"S_{n}: conjecture certified, dim = {count}")
    else:
        logger.error(f"S_{n}: verification failed: {failures[0]}")

    return VerifyReport(
        n=n,
        theta_well_defined=theta_failure is None,
        homomorphism_ok=homomorphism_failure is None,
        case3_ok=case3_failure is None,
        dim_image=span.rank,
        involution_count=count,
        eta_rank=injective.rank,
        injective=injective.rank == count,
        conjecture_certified=certified,
        prime=span.prime,
        point=span.point,
        exact_dim_image=exact_dim,
        counterexample=failures[0] if failures else None,
        elapsed_ms=int((time.perf_counter() - started) * 1000),
    )
