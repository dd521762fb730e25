# -*- coding: utf-8 -*-
import logging
from typing import Optional

from fastapi import APIRouter, Depends, Query
from fastapi.responses import PlainTextResponse

from twinv.api.utils import http_errors
from twinv.core.security import VerifyRequest, admit_verification
from twinv.services import queries
from twinv.services.reports import (
    BraidReport, ExpressionsReport, InvolutionList, PsigmaTable, RhoReport, RskReport,
    ThetaReport, VerifyReport,
)

logger = logging.getLogger(__name__)

router = APIRouter()

@router.get("/involutions", response_model=InvolutionList)
def involutions(n: int = Query(..., description="Rank of the symmetric group")):
    """Every involution of S_n with its rank and canonical reduced I*-expression."""
    with http_errors():
        return queries.involution_list(n)

@router.get("/rho", response_model=RhoReport)
def rho(n: int, w: str = Query(..., description="One-line notation, e.g. 3,2,1")):
    with http_errors():
        return queries.rho_report(n, w)

@router.get("/expressions", response_model=ExpressionsReport)
def expressions(n: int, w: str):
    with http_errors():
        return queries.expressions_report(n, w)

@router.get("/braid-graph", response_model=BraidReport)
def braid_graph(n: int, w: str, dot: bool = False):
    """
    The braid-move graph on the reduced I*-expressions of w.

    Args:
        n: Rank of the symmetric group.
        w: The involution in one-line notation.
        dot: Return the graph as DOT text instead of JSON.
    """
    with http_errors():
        if dot:
            return PlainTextResponse(queries.braid_dot(n, w), media_type="text/vnd.graphviz")
        return queries.braid_report(n, w)

@router.get("/psigma", response_model=PsigmaTable)
def psigma(n: int, w: Optional[str] = None):
    with http_errors():
        return queries.psigma_table(n, w)

@router.get("/theta", response_model=ThetaReport)
def theta(n: int, word: str = Query(..., description="Comma separated generator indices")):
    with http_errors():
        return queries.theta_report(n, word)

@router.get("/rsk", response_model=RskReport)
def rsk(n: int, w: Optional[str] = None):
    with http_errors():
        return queries.rsk_report(n, w)

@router.post("/verify", response_model=VerifyReport)
def verify(body: VerifyRequest = Depends(admit_verification)):
    """
    Runs the full certification for S_n. A failed check still answers 200;
    the report carries the failure and its counterexample.

    Raises:
        HTTPException:
            - 400: If n exceeds the configured cap
            - 401: If an API key is configured and missing or wrong
    """
    with http_errors():
        return queries.verify_report(body.n, slow=body.slow, exact=body.exact, seed=body.seed)
