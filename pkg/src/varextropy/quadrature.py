"""Deterministic adaptive quadrature over finite intervals.

A thin validation layer over QUADPACK (scipy.integrate.quad), which handles
the algebraic endpoint behavior of beta-family integrands that defeats
fixed composite rules. Results are deterministic, and any failure to reach
the requested absolute tolerance raises a distinct error instead of
returning a doubtful number.
"""

import math
import warnings

from scipy.integrate import IntegrationWarning, quad

from .errors import QuadratureConvergenceError


def integrate(fn, lo, hi, *, tol=1e-9):
    """Integrate ``fn`` over the finite interval [lo, hi].

    Parameters
    ----------
    fn : callable
        Maps evaluation points (scalar or ndarray) to values.
    lo, hi : float
        Integration bounds, lo < hi, both finite.
    tol : float
        Required absolute accuracy of the result.

    Raises
    ------
    QuadratureConvergenceError
        If the integrator cannot certify the tolerance, typically because
        of a non-integrable singularity (pathological shape parameters).
    """
    lo = float(lo)
    hi = float(hi)
    if not (math.isfinite(lo) and math.isfinite(hi) and hi > lo):
        raise ValueError(f"invalid integration bounds ({lo}, {hi})")
    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        try:
            value, abserr = quad(fn, lo, hi, epsabs=tol, epsrel=0.0, limit=200)
        except IntegrationWarning as exc:
            raise QuadratureConvergenceError(
                f"integral over [{lo}, {hi}] did not converge: {exc}"
            ) from exc
    if not math.isfinite(value) or abserr > tol:
        raise QuadratureConvergenceError(
            f"integral over [{lo}, {hi}] reached error {abserr:.3g}, above {tol}"
        )
    return value
