# -*- coding: utf-8 -*-
from fastapi import FastAPI
from contextlib import asynccontextmanager

from twinv import __version__
from twinv.core.config import config
from twinv.core.logging import setup_logging
logger = setup_logging()

from twinv.api.routes import health, compute

@asynccontextmanager
async def lifespan(_: FastAPI):
    """
    Handles the application lifecycle:
    - Startup: logs the configuration and builds the A_w tables of the small ranks
    - Shutdown: logs and exits

    The application refuses to start if a table cannot be built, since every
    P^σ answer would then be wrong.

    Yields:
        None: Control to the running application.

    Raises:
        Exception: If the A_w tables cannot be built.
    """
    logger.info("Starting application...")
    logger.info(f"Environment: {config.environment}")
    logger.info(f"Debug mode: {config.debug}")
    logger.info(f"Log level: {config.log_level}")
    logger.info(f"Rank caps: {config.rank_caps()}")
    logger.info(f"API key required for /verify: {config.api_key is not None}")

    try:
        from twinv.api.dependencies import initialize_lv_tables
        logger.info("Building A_w tables...")
        initialize_lv_tables()
    except Exception as e:
        logger.error(f"Failed to build A_w tables: {e}")
        logger.error("Application startup failed")
        raise e

    yield

    # Shutdown
    logger.info("Shutting down application...")

def create_app() -> FastAPI:
    """
    Initializes a FastAPI instance with environment-specific configuration
    and registers the routers under the environment's API prefix.

    API URL Structure:
    - Production: /api/v1/*
    - Development: /api/dev/v1/*
    - Staging: /api/staging/v1/*

    Returns:
        FastAPI: Configured FastAPI application instance with all routes registered.
    """
    app = FastAPI(
        title=config.app_name,
        description="Involutions of S_n, braid moves and the Hecke module spanned by X_∅",
        version=__version__,
        lifespan=lifespan
    )

    api_prefix = config.api_prefix

    app.include_router(health.router, prefix=api_prefix, tags=["health"])
    app.include_router(compute.router, prefix=api_prefix, tags=["compute"])

    return app

# Create app instance
app = create_app()
