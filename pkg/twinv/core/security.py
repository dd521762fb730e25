# -*- coding: utf-8 -*-
"""
Admission for POST /verify.

A verification request is checked against the rank cap of the tier it asks
for (plain, --slow, --exact) before any credentials are looked at, so an
out-of-range n is a 400 whether or not a key is configured. The bearer key,
when one is configured, is only demanded of requests that will actually run.
"""
import logging
import secrets
from typing import Optional

from fastapi import HTTPException, Security
from fastapi.security import HTTPBearer, HTTPAuthorizationCredentials
from pydantic import BaseModel, Field

from twinv.core.config import config
from twinv.core.errors import InvalidInputError

logger = logging.getLogger(__name__)

bearer = HTTPBearer(auto_error=False)


class VerifyRequest(BaseModel):
    n: int = Field(..., ge=1, description="Rank of the symmetric group")
    slow: bool = Field(default=False, description="Use the slow-tier rank cap")
    exact: bool = Field(default=False, description="Cross-check by exact elimination")
    seed: Optional[int] = Field(default=None, description="Specialization seed; config default when unset")

    @property
    def tiers(self) -> list[str]:
        """Rank-cap keys this request must fit under."""
        tiers = ["verify --slow" if self.slow else "verify"]
        if self.exact:
            tiers.append("verify --exact")
        return tiers


def check_tiers(request: VerifyRequest) -> None:
    """Raises InvalidInputError naming the first tier whose cap n exceeds."""
    caps = config.rank_caps()
    for tier in request.tiers:
        if request.n > caps[tier]:
            raise InvalidInputError(f"{tier}: rank {request.n} exceeds the configured cap {caps[tier]}")


def key_matches(presented: Optional[str]) -> bool:
    if config.api_key is None:
        return True
    return presented is not None and secrets.compare_digest(presented, config.api_key)


def admit_verification(
    body: VerifyRequest,
    credentials: Optional[HTTPAuthorizationCredentials] = Security(bearer),
) -> VerifyRequest:
    """
    Route dependency returning the admitted request.

    Raises:
        HTTPException:
            - 400: n above the cap of a requested tier
            - 401: a key is configured and the bearer token is missing or wrong
    """
    try:
        check_tiers(body)
    except InvalidInputError as e:
        raise HTTPException(status_code=400, detail=str(e))

    if not key_matches(credentials.credentials if credentials else None):
        logger.warning(f"Rejected verification of S_{body.n}: bad or missing key")
        raise HTTPException(
            status_code=401,
            detail="Invalid or missing API key",
            headers={"WWW-Authenticate": "Bearer"},
        )

    logger.info(f"Admitted verification of S_{body.n} under {', '.join(body.tiers)}")
    return body
