"""Exact verification of multiple commutation relations for trigonometric and rational R-matrices."""

__version__ = "0.1.0"
