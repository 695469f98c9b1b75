# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled spacing-statistic kernel: one fused pass per sample row.

Bit-for-bit compatible with varextropy._kernels_py: both accumulate the
two sums left to right in double precision.
"""

import numpy as np

from varextropy.errors import TieError


def spacing_stat_batch(samples, m):
    """Spacing-based varextropy statistic for each row of sorted samples.

    Same contract as varextropy._kernels_py.spacing_stat_batch.
    """
    xs = np.ascontiguousarray(samples, dtype=np.float64)
    if xs.ndim != 2:
        raise ValueError("expected a 2-d batch of samples")
    cdef const double[:, ::1] view = xs
    cdef Py_ssize_t reps = view.shape[0]
    cdef Py_ssize_t n = view.shape[1]
    cdef Py_ssize_t mm = int(m)
    if mm < 1 or 2 * mm > n:
        raise ValueError(f"window m={m} outside [1, n/2] for n={n}")

    out = np.empty(reps, dtype=np.float64)
    cdef double[::1] result = out
    cdef Py_ssize_t r, i, hi, lo
    cdef Py_ssize_t bad_row = -1, bad_term = -1
    cdef double c = (2.0 * mm) / n
    cdef double gap, y, s1, s2

    with nogil:
        for r in range(reps):
            s1 = 0.0
            s2 = 0.0
            for i in range(n):
                hi = i + mm
                if hi > n - 1:
                    hi = n - 1
                lo = i - mm
                if lo < 0:
                    lo = 0
                gap = view[r, hi] - view[r, lo]
                if gap == 0.0:
                    bad_row = r
                    bad_term = i
                    break
                y = c / gap
                s1 += y * y
                s2 += y
            if bad_row >= 0:
                break
            result[r] = s1 / (4.0 * n) - 0.25 * (s2 / n) * (s2 / n)

    if bad_row >= 0:
        raise TieError(
            f"zero 2m-spacing in batch row {bad_row} at term {bad_term}",
            index=bad_term,
            replicate=bad_row,
        )
    return out
