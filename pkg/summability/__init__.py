"""
Sonnenschein Summability Matrices

Builds Sonnenschein matrices from a generating function f(z), computes their
column sums from the coefficients of 1/(1 - f(z)) and checks the Karamata and
sin^2(pi z / 2) closed forms in exact arithmetic.
"""

__version__ = "0.1.0"
