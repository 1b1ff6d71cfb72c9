"""Exact Jantzen characters for Specht modules of cyclotomic Hecke algebras.

The library computes the character of the sum of the Jantzen filtration
layers of every Specht module by four independent routes (seminormal Gram
determinants, tableau degrees, rim-hook wrapping, and graded decomposition
numbers in characteristic zero) and cross-validates them.
"""

__version__ = "0.1.0"
