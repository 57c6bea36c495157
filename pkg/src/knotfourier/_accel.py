"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it was built; otherwise the
pure-Python module is used.  Set ``KNOTFOURIER_PURE_PYTHON=1`` to force the
fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("KNOTFOURIER_PURE_PYTHON", "") not in ("", "0"):
    kernels = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
        BACKEND = "compiled"
    except ImportError:
        kernels = _kernels_py
        BACKEND = "python"

free_reduce = kernels.free_reduce
artin_images = kernels.artin_images
bracket_state_counts = kernels.bracket_state_counts
grid_candidates = kernels.grid_candidates

__all__ = [
    "BACKEND",
    "artin_images",
    "bracket_state_counts",
    "free_reduce",
    "grid_candidates",
]
