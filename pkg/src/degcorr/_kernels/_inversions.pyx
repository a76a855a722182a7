# cython: boundscheck=False, wraparound=False, cdivision=True
"""Merge-sort inversion counting over int64 sequences.

count_strict_inversions(values, work) counts pairs i < j with
values[i] > values[j]; equal values never count. The input buffer is
reordered (sorted ascending) in place; `work` is scratch of equal length.
"""


def count_strict_inversions(long long[::1] values, long long[::1] work):
    cdef Py_ssize_t n = values.shape[0]
    if work.shape[0] != n:
        raise ValueError("work buffer must match values length")
    cdef long long total = 0
    cdef Py_ssize_t width = 1
    cdef Py_ssize_t lo, mid, hi, i, j, k
    cdef long long[::1] a = values
    cdef long long[::1] b = work

    while width < n:
        lo = 0
        while lo < n:
            mid = lo + width
            if mid >= n:
                break
            hi = mid + width
            if hi > n:
                hi = n
            i = lo
            j = mid
            k = lo
            while i < mid and j < hi:
                if a[j] < a[i]:
                    # every element left in [i, mid) exceeds a[j]
                    total += mid - i
                    b[k] = a[j]
                    j += 1
                else:
                    b[k] = a[i]
                    i += 1
                k += 1
            while i < mid:
                b[k] = a[i]
                i += 1
                k += 1
            while j < hi:
                b[k] = a[j]
                j += 1
                k += 1
            for k in range(lo, hi):
                a[k] = b[k]
            lo += 2 * width
        width *= 2
    return total
