"""Backend selection for the exact kernels.

The compiled module is used when it imports and the graph fits in 64 bits;
set ``GRAPHSTAB_PURE_PYTHON=1`` to force the pure-Python fallback.
"""
from __future__ import annotations

import os
from typing import Sequence

from . import _kernels_py

try:
    if os.environ.get("GRAPHSTAB_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def max_independent_set_size(n: int, adj: Sequence[int]) -> int:
    if _ckernels is not None and n <= 64:
        return _ckernels.max_independent_set_size(n, adj)
    return _kernels_py.max_independent_set_size(n, adj)


def chromatic_number(n: int, adj: Sequence[int], lower: int = 0) -> int:
    if _ckernels is not None and n <= 64:
        return _ckernels.chromatic_number(n, adj, lower)
    return _kernels_py.chromatic_number(n, adj, lower)
