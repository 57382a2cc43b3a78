"""Exact computations with the octonions and the exceptional Lie algebra g2."""

from ._backend import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
