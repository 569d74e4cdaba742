"""Exact-arithmetic toolkit for octonion, Clifford and triality computations."""

__version__ = "0.1.0"
