# -*- coding: utf-8 -*-
from fastapi import APIRouter

from twinv import __version__
from twinv.api.dependencies import warm_ranks
from twinv.services import queries
from twinv.services.reports import LimitsReport

router = APIRouter()

@router.get("/health")
def health_check():
    """
    Simple endpoint to verify that the API is running and responsive.

    Returns:
        dict: A dictionary containing:
            - status: Always "healthy"
            - message: Always "API is running"
            - version: package version
            - warm_ranks: ranks whose A_w tables are already built
    """
    return {
        "status": "healthy",
        "message": "API is running",
        "version": __version__,
        "warm_ranks": warm_ranks(),
    }

@router.get("/limits", response_model=LimitsReport)
def limits():
    """Configured rank caps per command, with the specialization prime and seed."""
    return queries.limits()
