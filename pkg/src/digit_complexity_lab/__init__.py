"""Digit Complexity Lab package.

An exact-arithmetic workbench for b-ary expansions of algebraic numbers:
certified digit streams, word complexity measures, rational approximation
machinery, twisted heights and explicit subspace-theorem bounds.
"""

__version__ = "0.1.0"
