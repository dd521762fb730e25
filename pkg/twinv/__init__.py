# -*- coding: utf-8 -*-
"""Twisted involutions of S_n and the Hecke module spanned by X_∅."""

__version__ = "0.1.0"
