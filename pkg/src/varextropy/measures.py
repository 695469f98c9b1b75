"""Extropy and varextropy of parametric laws.

Extropy is E[-f(X)/2] = -(1/2) * integral of f^2 over the support; it is
nonpositive, and closer to zero means a more spread-out law. Varextropy is
the variance of -f(X)/2,

    (1/4) * integral of f^3  -  (1/4) * (integral of f^2)^2,

which is nonnegative and vanishes exactly when the density is constant on
its support. Three evaluation routes are provided: closed forms, density
quadrature, and the quantile-density form; they must agree and the tests
hold them to each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .distributions import DistributionSpec
from .errors import QuadratureConvergenceError  # re-exported for callers
from .quadrature import integrate
from .special import log_gamma

__all__ = [
    "CLOSED_FORM",
    "QUADRATURE",
    "QUANTILE_FORM",
    "MeasureValue",
    "QuadratureConvergenceError",
    "extropy",
    "varextropy_closed",
    "varextropy_quadrature",
    "varextropy_quantile_form",
    "record_varextropy_exponential",
]

CLOSED_FORM = "closed_form"
QUADRATURE = "quadrature"
QUANTILE_FORM = "quantile_form"

# Truncation of infinite supports for the density quadrature. The discarded
# tail contributes below 1e-14 to the f^2 and f^3 integrals.
_TAIL_MASS = 1e-12
_NORMAL_TAIL_SIGMAS = 8.0


@dataclass(frozen=True)
class MeasureValue:
    """A measure evaluation tagged with the route that produced it."""

    value: float
    method: str


def _integration_bounds(dist: DistributionSpec) -> tuple[float, float]:
    if dist.kind == "uniform":
        return dist.params
    if dist.kind == "beta":
        return (0.0, 1.0)
    if dist.kind == "exponential":
        (rate,) = dist.params
        return (0.0, -math.log(_TAIL_MASS) / rate)
    mean, variance = dist.params
    spread = _NORMAL_TAIL_SIGMAS * math.sqrt(variance)
    return (mean - spread, mean + spread)


def _density_power_integral(dist: DistributionSpec, power: int) -> float:
    lo, hi = _integration_bounds(dist)
    return integrate(lambda x: dist.pdf(x) ** power, lo, hi)


def extropy(dist: DistributionSpec) -> MeasureValue:
    """E[-f(X)/2], in closed form where available, else by quadrature."""
    if dist.kind == "uniform":
        a, b = dist.params
        return MeasureValue(-0.5 / (b - a), CLOSED_FORM)
    if dist.kind == "exponential":
        (rate,) = dist.params
        return MeasureValue(-rate / 4.0, CLOSED_FORM)
    if dist.kind == "normal":
        _, variance = dist.params
        return MeasureValue(-1.0 / (4.0 * math.sqrt(math.pi * variance)), CLOSED_FORM)
    return MeasureValue(-0.5 * _density_power_integral(dist, 2), QUADRATURE)


def varextropy_closed(dist: DistributionSpec) -> MeasureValue:
    """Var[-f(X)/2] in closed form (uniform, exponential, normal).

    No closed form is adopted for the beta family; those specs route to
    :func:`varextropy_quadrature`.
    """
    if dist.kind == "uniform":
        return MeasureValue(0.0, CLOSED_FORM)
    if dist.kind == "exponential":
        (rate,) = dist.params
        # rate^2 * VJ(rate=1), so the scale law holds exactly in floats.
        return MeasureValue((rate * rate) * (1.0 / 48.0), CLOSED_FORM)
    if dist.kind == "normal":
        _, variance = dist.params
        sqrt3 = math.sqrt(3.0)
        return MeasureValue(
            (2.0 - sqrt3) / (16.0 * math.pi * variance * sqrt3), CLOSED_FORM
        )
    return varextropy_quadrature(dist)


def varextropy_quadrature(dist: DistributionSpec) -> MeasureValue:
    """Var[-f(X)/2] by composite quadrature of f^3 and f^2."""
    f2 = _density_power_integral(dist, 2)
    f3 = _density_power_integral(dist, 3)
    return MeasureValue(0.25 * f3 - 0.25 * f2 * f2, QUADRATURE)


def varextropy_quantile_form(dist: DistributionSpec) -> MeasureValue:
    """Var[-f(X)/2] via the quantile density q(p) = d/dp inverse-cdf(p):

        (1/4) * [ integral of q(p)^-2  -  (integral of q(p)^-1)^2 ]  over p in (0,1).

    Only laws with a closed-form inverse cdf participate; others raise.
    """
    if not dist.has_quantile_form:
        raise ValueError(
            f"no quantile form for {dist.describe()}; use varextropy_quadrature"
        )
    inv1 = integrate(lambda p: dist.quantile_density(p) ** -1.0, 0.0, 1.0)
    inv2 = integrate(lambda p: dist.quantile_density(p) ** -2.0, 0.0, 1.0)
    return MeasureValue(0.25 * (inv2 - inv1 * inv1), QUANTILE_FORM)


def record_varextropy_exponential(n, rate) -> MeasureValue:
    """Varextropy of the n-th upper record of an exponential law.

    Evaluates

        (rate^2 / 16) * [ 4*G(3n-2) / (G(n)^3 * 3^(3n-2))
                          - G(2n-1)^2 / (G(n)^4 * 4^(2n-2)) ]

    with G the gamma function, entirely in log space, so the gamma ratios
    stay finite for any practical n. For n = 1 this reduces to rate^2/48,
    the varextropy of the law itself.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"record index must be a positive integer, got {n!r}")
    n = int(n)
    rate = float(rate)
    if not rate > 0.0:
        raise ValueError(f"rate must be > 0, got {rate}")
    log_first = (
        math.log(4.0)
        + log_gamma(3 * n - 2)
        - 3.0 * log_gamma(n)
        - (3 * n - 2) * math.log(3.0)
    )
    log_second = (
        2.0 * log_gamma(2 * n - 1)
        - 4.0 * log_gamma(n)
        - (2 * n - 2) * math.log(4.0)
    )
    bracket = math.exp(log_first) - math.exp(log_second)
    return MeasureValue((rate * rate / 16.0) * bracket, CLOSED_FORM)
