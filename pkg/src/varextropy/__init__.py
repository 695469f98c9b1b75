"""Varextropy: information measures, spacing-based estimation, and a
Monte Carlo uniformity test.

Varextropy is the variance of -f(X)/2, the complement of extropy's mean;
it is nonnegative and vanishes exactly for laws with a constant density.
This package evaluates both measures for standard parametric laws (closed
forms, quadrature, quantile form), estimates varextropy from data with an
m-spacing statistic, and turns that statistic into a seeded, reproducible
test of uniformity on [0, 1] with simulated critical values and power.
"""

from .distributions import DistributionSpec, beta, exponential, normal, uniform
from .errors import QuadratureConvergenceError, TieError
from .kernels import BACKEND as KERNEL_BACKEND
from .measures import (
    MeasureValue,
    extropy,
    record_varextropy_exponential,
    varextropy_closed,
    varextropy_quadrature,
    varextropy_quantile_form,
)
from .simulate import (
    RngSpec,
    SimulationTable,
    build_table,
    critical_value,
    power,
    sample_beta,
    sample_uniform,
)
from .spacing import (
    EstimatorConfig,
    Sample,
    SpacingTerms,
    default_window,
    ecdf,
    estimate_varextropy,
    spacing_terms,
)
from .special import log_gamma
from .uniformity import FAIL_TO_REJECT, REJECT, TestReport, run_test

__version__ = "0.1.0"

__all__ = [
    "DistributionSpec",
    "EstimatorConfig",
    "FAIL_TO_REJECT",
    "KERNEL_BACKEND",
    "MeasureValue",
    "QuadratureConvergenceError",
    "REJECT",
    "RngSpec",
    "Sample",
    "SimulationTable",
    "SpacingTerms",
    "TestReport",
    "TieError",
    "beta",
    "build_table",
    "critical_value",
    "default_window",
    "ecdf",
    "estimate_varextropy",
    "exponential",
    "extropy",
    "log_gamma",
    "normal",
    "power",
    "record_varextropy_exponential",
    "run_test",
    "sample_beta",
    "sample_uniform",
    "spacing_terms",
    "uniform",
    "varextropy_closed",
    "varextropy_quadrature",
    "varextropy_quantile_form",
]
