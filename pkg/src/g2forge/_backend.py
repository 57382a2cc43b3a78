"""Select the elimination kernel: compiled when available, else pure Python."""

from __future__ import annotations

try:
    from ._kernels import ff_gauss_jordan
    BACKEND = "cython"
except ImportError:  # extension not built
    from ._kernels_py import ff_gauss_jordan
    BACKEND = "python"

__all__ = ["ff_gauss_jordan", "BACKEND"]
