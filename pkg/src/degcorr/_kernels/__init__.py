"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set DEGCORR_PURE_PYTHON=1 to force the fallback (used by the benchmark and
by tests that exercise both paths). `BACKEND` records what was selected.
"""
from __future__ import annotations

import os

import numpy as np

from . import _fallback

if os.environ.get("DEGCORR_PURE_PYTHON", "") not in ("", "0"):
    _impl = None
else:
    try:
        from . import _inversions as _impl
    except ImportError:
        _impl = None

BACKEND = "compiled" if _impl is not None else "python"


def count_strict_inversions(values: np.ndarray) -> int:
    """Number of pairs i < j with values[i] > values[j] (ties excluded)."""
    arr = np.ascontiguousarray(values, dtype=np.int64)
    if arr.size < 2:
        return 0
    if _impl is not None:
        buf = arr.copy()
        work = np.empty_like(buf)
        return int(_impl.count_strict_inversions(buf, work))
    return _fallback.count_strict_inversions(arr.tolist())
