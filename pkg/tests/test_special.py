import math

import numpy as np
import pytest

from varextropy.special import log_gamma


def test_known_values():
    assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-14)
    assert log_gamma(2.0) == pytest.approx(0.0, abs=1e-14)
    assert log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-13)
    assert log_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), rel=1e-13)


def test_matches_stdlib_lgamma_across_range():
    # math.lgamma is the independent oracle for the 1e-12 relative contract.
    for x in np.geomspace(0.5, 600.0, 400):
        mine = log_gamma(float(x))
        ref = math.lgamma(float(x))
        assert mine == pytest.approx(ref, rel=1e-12, abs=1e-13)


def test_recurrence_identity():
    # ln G(x+1) - ln G(x) = ln x
    for x in np.linspace(0.5, 500.0, 1000):
        resid = log_gamma(float(x) + 1.0) - log_gamma(float(x)) - math.log(float(x))
        assert abs(resid) <= 1e-11


def test_reflection_region():
    for x in (0.05, 0.1, 0.25, 0.49):
        assert log_gamma(x) == pytest.approx(math.lgamma(x), rel=1e-12)


@pytest.mark.parametrize("bad", [0.0, -1.0, -0.5])
def test_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        log_gamma(bad)
