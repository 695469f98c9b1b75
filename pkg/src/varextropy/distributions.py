"""Parametric laws consumed by the measures, the samplers, and the quadrature.

A ``DistributionSpec`` is a validated (kind, params) tag:

    uniform      params = (lower, upper), lower < upper
    exponential  params = (rate,), rate > 0
    normal       params = (mean, variance), variance > 0
    beta         params = (a, b), both shapes > 0
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .special import log_gamma

KINDS = ("uniform", "exponential", "normal", "beta")


@dataclass(frozen=True)
class DistributionSpec:
    kind: str
    params: tuple[float, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown distribution kind {self.kind!r}")
        params = tuple(float(p) for p in self.params)
        object.__setattr__(self, "params", params)
        if any(not math.isfinite(p) for p in params):
            raise ValueError(f"non-finite parameter in {params}")
        if self.kind == "uniform":
            a, b = params
            if not a < b:
                raise ValueError(f"uniform requires lower < upper, got ({a}, {b})")
        elif self.kind == "exponential":
            (rate,) = params
            if not rate > 0.0:
                raise ValueError(f"exponential rate must be > 0, got {rate}")
        elif self.kind == "normal":
            _, variance = params
            if not variance > 0.0:
                raise ValueError(f"normal variance must be > 0, got {variance}")
        else:
            a, b = params
            if not (a > 0.0 and b > 0.0):
                raise ValueError(f"beta shapes must be > 0, got ({a}, {b})")

    def describe(self) -> str:
        inner = ", ".join(f"{p:g}" for p in self.params)
        return f"{self.kind}({inner})"

    def support(self) -> tuple[float, float]:
        if self.kind == "uniform":
            return self.params
        if self.kind == "exponential":
            return (0.0, math.inf)
        if self.kind == "normal":
            return (-math.inf, math.inf)
        return (0.0, 1.0)

    def pdf(self, x):
        """Density at ``x`` (scalar or ndarray, evaluated elementwise)."""
        arr = np.asarray(x, dtype=np.float64)
        if self.kind == "uniform":
            a, b = self.params
            out = np.where((arr >= a) & (arr <= b), 1.0 / (b - a), 0.0)
        elif self.kind == "exponential":
            (rate,) = self.params
            safe = np.maximum(arr, 0.0)
            out = np.where(arr >= 0.0, rate * np.exp(-rate * safe), 0.0)
        elif self.kind == "normal":
            mean, variance = self.params
            out = np.exp(-0.5 * (arr - mean) ** 2 / variance) / math.sqrt(
                2.0 * math.pi * variance
            )
        else:
            a, b = self.params
            log_norm = log_gamma(a + b) - log_gamma(a) - log_gamma(b)
            inside = (arr > 0.0) & (arr < 1.0)
            safe = np.where(inside, arr, 0.5)
            with np.errstate(divide="ignore"):
                log_pdf = (a - 1.0) * np.log(safe) + (b - 1.0) * np.log1p(-safe)
            out = np.where(inside, np.exp(log_norm + log_pdf), 0.0)
        if np.ndim(x) == 0:
            return float(out)
        return out

    @property
    def has_quantile_form(self) -> bool:
        """True when a closed-form inverse cdf (hence quantile density) exists."""
        if self.kind in ("uniform", "exponential"):
            return True
        return self.kind == "beta" and self.params[0] == 1.0

    def ppf(self, p):
        """Closed-form inverse cdf; only for kinds with ``has_quantile_form``."""
        self._require_quantile_form()
        arr = np.asarray(p, dtype=np.float64)
        if np.any((arr < 0.0) | (arr > 1.0)):
            raise ValueError("probabilities must lie in [0, 1]")
        if self.kind == "uniform":
            a, b = self.params
            out = a + (b - a) * arr
        elif self.kind == "exponential":
            (rate,) = self.params
            out = -np.log1p(-arr) / rate
        else:
            _, b = self.params
            out = 1.0 - (1.0 - arr) ** (1.0 / b)
        if np.ndim(p) == 0:
            return float(out)
        return out

    def quantile_density(self, p):
        """d/dp of the inverse cdf; only for kinds with ``has_quantile_form``."""
        self._require_quantile_form()
        arr = np.asarray(p, dtype=np.float64)
        if self.kind == "uniform":
            a, b = self.params
            out = np.full_like(arr, b - a)
        elif self.kind == "exponential":
            (rate,) = self.params
            out = 1.0 / (rate * (1.0 - arr))
        else:
            _, b = self.params
            out = (1.0 / b) * (1.0 - arr) ** (1.0 / b - 1.0)
        if np.ndim(p) == 0:
            return float(out)
        return out

    def _require_quantile_form(self):
        if not self.has_quantile_form:
            raise ValueError(
                f"no quantile form for {self.describe()}: a closed-form "
                "inverse cdf is available only for uniform, exponential, "
                "and beta with first shape 1"
            )


def uniform(lower=0.0, upper=1.0) -> DistributionSpec:
    return DistributionSpec("uniform", (lower, upper))


def exponential(rate) -> DistributionSpec:
    return DistributionSpec("exponential", (rate,))


def normal(mean, variance) -> DistributionSpec:
    return DistributionSpec("normal", (mean, variance))


def beta(a, b) -> DistributionSpec:
    return DistributionSpec("beta", (a, b))
