"""Overflow-safe exact integer reductions over numpy arrays.

All correlation numerators and variance terms are integers before the final
division, so they are accumulated exactly: with int64 numpy ops while a
conservative bound proves no overflow, and with Python big ints otherwise.
Both paths are order-independent, hence deterministic.
"""
from __future__ import annotations

import numpy as np

_INT64_SAFE = 2**62


def _max_abs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return int(np.abs(arr).max())


def exact_dot(a: np.ndarray, b: np.ndarray) -> int:
    """Exact sum of elementwise products of two integer arrays."""
    if a.size == 0:
        return 0
    bound = _max_abs(a) * _max_abs(b) * a.size
    if bound < _INT64_SAFE:
        return int(np.dot(a.astype(np.int64, copy=False), b.astype(np.int64, copy=False)))
    return sum(int(x) * int(y) for x, y in zip(a.tolist(), b.tolist()))


def exact_power_sum(arr: np.ndarray, k: int) -> int:
    """Exact sum of arr**k for non-negative integer k."""
    if arr.size == 0:
        return 0
    if k == 0:
        return arr.size
    bound = _max_abs(arr) ** k * arr.size
    if bound < _INT64_SAFE:
        a = arr.astype(np.int64, copy=False)
        out = a.copy()
        for _ in range(k - 1):
            out *= a
        return int(out.sum())
    return sum(int(v) ** k for v in arr.tolist())


def exact_product_moment(a: np.ndarray, b: np.ndarray, p: int, q: int) -> int:
    """Exact sum of a**p * b**q over paired integer arrays, with 0**0 == 1."""
    if a.size == 0:
        return 0
    if p == 0 and q == 0:
        return a.size
    if p == 0:
        return exact_power_sum(b, q)
    if q == 0:
        return exact_power_sum(a, p)
    bound = _max_abs(a) ** p * _max_abs(b) ** q * a.size
    if bound < _INT64_SAFE:
        x = a.astype(np.int64, copy=False)
        y = b.astype(np.int64, copy=False)
        out = x.copy()
        for _ in range(p - 1):
            out *= x
        for _ in range(q):
            out *= y
        return int(out.sum())
    return sum(int(x) ** p * int(y) ** q for x, y in zip(a.tolist(), b.tolist()))
