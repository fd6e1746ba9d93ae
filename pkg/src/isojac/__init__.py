"""Curves with isomorphic unpolarized Jacobians: constructions and certificates."""

__version__ = "0.1.0"
