# -*- coding: utf-8 -*-
import logging
from contextlib import contextmanager

from fastapi import HTTPException

from twinv.core.errors import (
    InvalidInputError, InvariantViolation, PreconditionError, RankMismatchError,
    SpecializationDegenerate, TwinvError,
)

logger = logging.getLogger(__name__)

@contextmanager
def http_errors():
    """
    Translates service exceptions into HTTP errors.

    - 400: malformed input or rank above the configured cap
    - 422: an operation called outside its domain, or operands of different rank
    - 500: a runtime check of the algebra failed, or exact arithmetic broke down
    - 503: every specialization point was degenerate
    """
    try:
        yield
    except InvalidInputError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except (PreconditionError, RankMismatchError) as e:
        raise HTTPException(status_code=422, detail=str(e))
    except InvariantViolation as e:
        logger.error(f"Invariant violated while serving a request: {e}")
        raise HTTPException(status_code=500, detail=f"invariant violated: {e}")
    except SpecializationDegenerate as e:
        logger.error(f"Specialization failed: {e}")
        raise HTTPException(status_code=503, detail=str(e))
    except (TwinvError, ZeroDivisionError) as e:
        logger.error(f"Arithmetic failure while serving a request: {e!r}")
        raise HTTPException(status_code=500, detail=f"{type(e).__name__}: {e}")
