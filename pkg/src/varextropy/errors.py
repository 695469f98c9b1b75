"""Exception types shared across the package."""


class TieError(ValueError):
    """A zero 2m-spacing: the order statistics m ranks below and above some
    observation coincide, so the reciprocal-spacing term is undefined.

    Attributes
    ----------
    index : int or None
        0-based position of the offending term in the spacing sum.
    replicate : int or None
        Row of the batch that produced the tie (batch evaluation only).
    """

    def __init__(self, message, *, index=None, replicate=None):
        super().__init__(message)
        self.index = index
        self.replicate = replicate


class QuadratureConvergenceError(RuntimeError):
    """Panel refinement did not stabilize the integral within tolerance.

    Usually signals an integrand with a non-integrable singularity
    (pathological shape parameters) or a bad truncation of the support.
    """
