"""Compositions of graded coalgebras over trees, permutations and combs."""

__version__ = "0.1.0"
