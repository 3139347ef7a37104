"""Chevalley-basis Lie algebras over GF(2) and nilpotent orbit classification."""

__version__ = "0.1.0"
