#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Serves the HTTP API with uvicorn; host and port come from HOST and PORT.

For scripting and the long sweeps use ``python -m twinv`` instead.
"""
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))


def main() -> None:
    import uvicorn
    from twinv.core.config import config

    # reload spawns a second process, so it is tied to DEBUG
    uvicorn.run(
        "twinv.main:app",
        host=config.host,
        port=config.port,
        reload=bool(config.debug),
        log_level=config.log_level.lower(),
    )


if __name__ == "__main__":
    main()
