# -*- coding: utf-8 -*-
"""Configuration, logging, errors and security."""
