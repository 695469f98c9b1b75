"""The m-spacing varextropy estimator and the empirical distribution function.

For a sorted sample x_(1) <= ... <= x_(n) and window m, each term

    y_i = (2m/n) / (x_(i+m) - x_(i-m)),  i = 1..n,

estimates the density at x_(i), with out-of-range indices clamped to the
extremes (i+m > n uses x_(n); i-m < 1 uses x_(1)). The statistic is the
empirical variance of -y/2:

    (1/(4n)) * sum(y_i^2)  -  (1/4) * (mean(y))^2,

which is nonnegative and estimates the varextropy of the sampled law.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import TieError

# Relative size of the deterministic tie-breaking perturbation.
_JITTER_RELATIVE = 1e-10


class Sample:
    """An immutable, ascending-sorted collection of finite observations."""

    __slots__ = ("values",)

    def __init__(self, values):
        arr = np.array(values, dtype=np.float64)
        if arr.ndim != 1:
            raise ValueError("observations must be one-dimensional")
        if arr.size < 1:
            raise ValueError("a sample needs at least one observation")
        if not np.all(np.isfinite(arr)):
            raise ValueError("observations must be finite (no NaN or inf)")
        arr.sort()
        arr.flags.writeable = False
        self.values = arr

    @property
    def n(self) -> int:
        return self.values.size

    def __len__(self) -> int:
        return self.values.size

    def __repr__(self) -> str:
        return f"Sample(n={self.n}, min={self.values[0]:g}, max={self.values[-1]:g})"


def as_sample(values) -> Sample:
    if isinstance(values, Sample):
        return values
    return Sample(values)


def default_window(n: int) -> int:
    """round(sqrt(n)), clamped into the valid range [1, n//2]."""
    return max(1, min(round(math.sqrt(n)), n // 2))


@dataclass(frozen=True)
class EstimatorConfig:
    """Estimator knobs.

    m : window size; None picks ``default_window(n)``.
    tie_policy : "error" raises on a zero 2m-spacing; "jitter" first adds
        the deterministic perturbation rank * eps to the sorted values.
    jitter_scale : absolute eps for the jitter; None means
        1e-10 * (sample range).
    """

    m: int | None = None
    tie_policy: str = "error"
    jitter_scale: float | None = None

    def __post_init__(self):
        if self.tie_policy not in ("error", "jitter"):
            raise ValueError(f"unknown tie policy {self.tie_policy!r}")
        if self.m is not None and (int(self.m) != self.m or self.m < 1):
            raise ValueError(f"window must be a positive integer, got {self.m!r}")


@dataclass(frozen=True)
class SpacingTerms:
    """The reciprocal-spacing terms y backing one statistic evaluation."""

    y: np.ndarray
    m: int

    def statistic(self) -> float:
        n = self.y.size
        s1 = np.cumsum(self.y * self.y)[-1]
        s2 = np.cumsum(self.y)[-1]
        return float(s1 / (4.0 * n) - 0.25 * (s2 / n) * (s2 / n))


def ecdf(sample, x):
    """Empirical distribution function of the sample, evaluated at x.

    Returns 0 below the minimum, i/n on [x_(i), x_(i+1)), and 1 from the
    maximum on. Accepts a scalar or an ndarray of evaluation points.
    """
    s = as_sample(sample)
    pos = np.searchsorted(s.values, x, side="right")
    out = pos / s.n
    if np.ndim(x) == 0:
        return float(out)
    return out


def _prepare(sample, config):
    s = as_sample(sample)
    cfg = config if config is not None else EstimatorConfig()
    n = s.n
    if n < 2:
        raise ValueError("estimation needs at least 2 observations")
    m = default_window(n) if cfg.m is None else int(cfg.m)
    if m < 1 or 2 * m > n:
        raise ValueError(f"window m={m} outside [1, n/2] for n={n}")
    x = s.values
    if cfg.tie_policy == "jitter":
        span = x[-1] - x[0]
        eps = cfg.jitter_scale if cfg.jitter_scale is not None else _JITTER_RELATIVE * span
        if not eps > 0.0:
            raise TieError(
                "jitter cannot separate the observations: every value is "
                "identical, so no spacing information exists"
            )
        x = x + eps * np.arange(1, n + 1)
    return x, m, cfg


def spacing_terms(sample, config: EstimatorConfig | None = None) -> SpacingTerms:
    """The y vector that ``estimate_varextropy`` aggregates, for diagnostics."""
    x, m, _ = _prepare(sample, config)
    n = x.size
    idx = np.arange(n)
    hi = np.minimum(idx + m, n - 1)
    lo = np.maximum(idx - m, 0)
    gaps = x[hi] - x[lo]
    zero = gaps == 0.0
    if zero.any():
        _raise_tie(int(np.argmax(zero)), m, n)
    y = ((2.0 * m) / n) / gaps
    y.flags.writeable = False
    return SpacingTerms(y=y, m=m)


def estimate_varextropy(sample, config: EstimatorConfig | None = None) -> float:
    """The m-spacing varextropy statistic of the sample.

    Deterministic given the observations and the window; the input order
    is irrelevant (sorting is internal). Raises :class:`TieError` when a
    zero 2m-spacing occurs under the "error" tie policy.
    """
    x, m, _ = _prepare(sample, config)
    try:
        out = kernels.spacing_stat_batch(x[np.newaxis, :], m)
    except TieError as exc:
        _raise_tie(exc.index, m, x.size)
    return float(out[0])


def _raise_tie(index, m, n):
    lo = max(index - m, 0)
    hi = min(index + m, n - 1)
    raise TieError(
        f"tied observations: order statistics {lo + 1} and {hi + 1} (1-based) "
        f"coincide, giving a zero 2m-spacing at term {index + 1} of {n}; "
        "pass tie_policy='jitter' to break ties deterministically",
        index=index,
    )
