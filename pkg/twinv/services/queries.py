# -*- coding: utf-8 -*-
"""
Text-in, report-out entry points shared by the CLI and the HTTP routes.
Each one checks the rank cap of its command before doing any work.
"""
from __future__ import annotations

from typing import Optional

from twinv.core.config import config
from twinv.core.errors import InvalidInputError
from twinv.services import braidmoves, etamap, istar, lvmodule, rsk
from twinv.services.reports import (
    BraidReport, BraidSweepReport, ExpressionsReport, InvolutionEntry, InvolutionList,
    LimitsReport, PsigmaRow, PsigmaTable, RhoReport, RskReport, TableauPair,
    ThetaReport, ThetaStepReport, VerifyReport,
)
from twinv.services.symgroup import length, parse_permutation, parse_word


def check_rank(command: str, n: int) -> None:
    """
    Raises:
        InvalidInputError: If n is below 1 or above the cap configured for command.
    """
    cap = config.rank_caps()[command]
    if n < 1:
        raise InvalidInputError(f"rank must be at least 1, got {n}")
    if n > cap:
        raise InvalidInputError(f"{command}: rank {n} exceeds the configured cap {cap}")


def parse_involution(text: str, n: int) -> istar.Involution:
    return istar.to_involution(parse_permutation(text, n))


def involution_list(n: int) -> InvolutionList:
    check_rank("involutions", n)
    entries = [
        InvolutionEntry(
            involution=str(w),
            rho=istar.rho(w),
            length=length(w),
            canonical=str(istar.canonical_expression(w)),
        )
        for w in istar.enumerate_involutions(n)
    ]
    return InvolutionList(n=n, count=len(entries), involutions=entries)


def rho_report(n: int, w_text: str) -> RhoReport:
    check_rank("rho", n)
    w = parse_involution(w_text, n)
    return RhoReport(n=n, involution=str(w), rho=istar.rho(w), canonical=str(istar.canonical_expression(w)))


def expressions_report(n: int, w_text: str) -> ExpressionsReport:
    check_rank("expressions", n)
    w = parse_involution(w_text, n)
    words = istar.reduced_istar_expressions(w)
    return ExpressionsReport(
        n=n, involution=str(w), rho=istar.rho(w), count=len(words),
        expressions=[str(word) for word in words],
    )


def braid_report(n: int, w_text: str) -> BraidReport:
    check_rank("braid-graph", n)
    return braidmoves.verify_connectivity(parse_involution(w_text, n))


def braid_dot(n: int, w_text: str) -> str:
    check_rank("braid-graph", n)
    return braidmoves.braid_graph_dot(parse_involution(w_text, n))


def braid_sweep(n: int, jobs: Optional[int] = None) -> BraidSweepReport:
    check_rank("verify-braid", n)
    return braidmoves.verify_all(n, jobs)


def psigma_table(n: int, w_text: Optional[str] = None) -> PsigmaTable:
    """Nonzero P^σ_{y,w}, for one w or for every involution of S_n."""
    check_rank("psigma", n)
    table = lvmodule.lv_table(n)
    targets = [parse_involution(w_text, n)] if w_text else list(istar.enumerate_involutions(n))
    rows = []
    for w in targets:
        element = table[w]
        for y in sorted(element.polys, key=lambda y: (istar.rho(y), y.images)):
            rows.append(PsigmaRow(y=str(y), w=str(w), poly_in_u=element.polys[y].to_string("u")))
    return PsigmaTable(n=n, rows=rows)


def theta_report(n: int, word_text: str) -> ThetaReport:
    check_rank("theta", n)
    word = istar.IStarWord(parse_word(word_text, n).letters, n)
    plan = etamap.theta_plan(word)
    image = etamap.apply_theta(plan, n)
    return ThetaReport(
        n=n,
        word=str(word),
        involution=str(istar.evaluate(word)),
        steps=[
            ThetaStepReport(position=t, letter=step.letter, kind=step.kind.value)
            for t, step in enumerate(plan.steps, start=1)
        ],
        denominator_power=image.power,
        numerator=image.numerator.to_json(),
        text=str(image),
    )


def verify_report(
    n: int,
    slow: bool = False,
    exact: bool = False,
    seed: Optional[int] = None,
    jobs: Optional[int] = None,
) -> VerifyReport:
    check_rank("verify --slow" if slow else "verify", n)
    if exact:
        check_rank("verify --exact", n)
    return etamap.verify_conjecture(n, seed=seed, slow=slow, exact=exact, jobs=jobs)


def rsk_report(n: int, w_text: Optional[str] = None) -> RskReport:
    check_rank("rsk", n)
    pairs = []
    if w_text:
        w = parse_permutation(w_text, n)
        p, q = rsk.rsk_insert(w)
        pairs.append(TableauPair(
            permutation=str(w), shape=list(p.shape.parts), p=p.to_json(), q=q.to_json(),
        ))
    return RskReport(
        n=n,
        identity=rsk.involution_count_identity(n),
        shapes={str(shape): rsk.std_count(shape) for shape in rsk.partitions(n)},
        pairs=pairs,
    )


def limits() -> LimitsReport:
    return LimitsReport(
        environment=config.environment,
        rank_caps=config.rank_caps(),
        prime=config.prime,
        seed=config.seed,
    )
