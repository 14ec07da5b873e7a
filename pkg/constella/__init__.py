"""Finite-algebra toolkit for left and right E-completions of monoids."""

__version__ = "0.1.0"
