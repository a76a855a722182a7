"""Pure-Python inversion counting, used when the compiled kernel is absent.

Semantics match the extension: pairs i < j with values[i] > values[j],
ties never counted. Bottom-up merge over plain lists; roughly two orders
of magnitude slower than the compiled version (see benchmarks/).
"""
from __future__ import annotations


def count_strict_inversions(values) -> int:
    a = list(values)
    n = len(a)
    b = [0] * n
    total = 0
    width = 1
    while width < n:
        lo = 0
        while lo + width < n:
            mid = lo + width
            hi = min(mid + width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if a[j] < a[i]:
                    total += mid - i
                    b[k] = a[j]
                    j += 1
                else:
                    b[k] = a[i]
                    i += 1
                k += 1
            b[k:hi] = a[i:mid] if i < mid else a[j:hi]
            a[lo:hi] = b[lo:hi]
            lo += 2 * width
        width *= 2
    return total
