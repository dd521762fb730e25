# -*- coding: utf-8 -*-
"""
Shared pytest configuration.

The exhaustive high-rank tiers (n = 6, 7 and the larger tableau counts) are
marked ``slow`` and only run with ``pytest --slow``.
"""
import os
import sys

import pytest

# Add the project root to Python path for imports
project_root = os.path.join(os.path.dirname(__file__), "..")
sys.path.insert(0, project_root)


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run the exhaustive high-rank tiers")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive high-rank checks, enabled by --slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
