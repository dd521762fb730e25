# -*- coding: utf-8 -*-
import logging

from twinv.core.config import config
from twinv.services import lvmodule

logger = logging.getLogger(__name__)

# Ranks whose A_w tables were built at startup
_warm_ranks: list[int] = []

def initialize_lv_tables(max_rank: int = 4) -> None:
    """
    Build the A_w tables for the small ranks at application startup.
    Called from the lifespan context manager in main.py

    Tables are immutable once built, so every request shares them. Larger
    ranks up to psigma_rank_cap are built on first use.

    Raises:
        Exception: If a table cannot be built (the algebra is inconsistent).
    """
    top = min(max_rank, config.psigma_rank_cap)
    try:
        for n in range(1, top + 1):
            lvmodule.lv_table(n)
            if n not in _warm_ranks:
                _warm_ranks.append(n)
        logger.info(f"A_w tables ready for ranks 1..{top}")
    except Exception as e:
        logger.error(f"Failed to build A_w tables: {e}")
        raise

def warm_ranks() -> list[int]:
    """Ranks whose tables were built at startup."""
    return list(_warm_ranks)
