"""Pure-numpy spacing-statistic kernel, the fallback when the compiled
extension is unavailable. Must match the compiled kernel bit-for-bit: the
cumulative sums below accumulate left to right, exactly like the C loop."""

import numpy as np

from .errors import TieError


def spacing_stat_batch(samples, m):
    """Spacing-based varextropy statistic for each row of sorted samples.

    Parameters
    ----------
    samples : (reps, n) float64 ndarray
        Each row sorted ascending.
    m : int
        Window size, 1 <= m <= n/2.

    Returns
    -------
    (reps,) float64 ndarray of statistics.
    """
    xs = np.ascontiguousarray(samples, dtype=np.float64)
    if xs.ndim != 2:
        raise ValueError("expected a 2-d batch of samples")
    reps, n = xs.shape
    m = int(m)
    if m < 1 or 2 * m > n:
        raise ValueError(f"window m={m} outside [1, n/2] for n={n}")
    idx = np.arange(n)
    hi = np.minimum(idx + m, n - 1)
    lo = np.maximum(idx - m, 0)
    gaps = xs[:, hi] - xs[:, lo]
    zero = gaps == 0.0
    if zero.any():
        r, i = np.argwhere(zero)[0]
        raise TieError(
            f"zero 2m-spacing in batch row {r} at term {i}",
            index=int(i),
            replicate=int(r),
        )
    c = (2.0 * m) / n
    y = c / gaps
    s1 = np.cumsum(y * y, axis=1)[:, -1]
    s2 = np.cumsum(y, axis=1)[:, -1]
    return s1 / (4.0 * n) - 0.25 * (s2 / n) * (s2 / n)
