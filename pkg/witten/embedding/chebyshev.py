__author__ = 'max'

import warnings
from typing import Callable, Optional
import numpy as np
from numpy.polynomial import chebyshev
import torch

from witten.errors import InvalidInputError

MIN_DEGREE = 8
# points of the dense sample used for the sup-norm error estimate
ERROR_SAMPLES = 4097


class ChebApprox(object):
    """
    Degree-d Chebyshev expansion of sqrt(x) on [0, b]:
    sqrt(x) ~ sum_k c_k T_k(2x / b - 1).
    """
    def __init__(self, coefficients: np.ndarray, interval_upper: float, error_estimate: float, warning: Optional[str] = None):
        self.coefficients = coefficients
        self.interval_upper = interval_upper
        self.error_estimate = error_estimate
        self.warning = warning

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        y = np.asarray(x, dtype=np.float64) * (2. / self.interval_upper) - 1.
        return chebyshev.chebval(y, self.coefficients)

    def apply(self, op: Callable[[torch.Tensor], torch.Tensor], v: torch.Tensor) -> torch.Tensor:
        """
        Clenshaw recurrence for sqrt(op) v, where op is symmetric with spectrum in [0, b].

        Args:
            op: Callable
                the operator, Tensor [n, n] -> Tensor [n, n]
            v: Tensor [n, n]

        Returns: Tensor [n, n]
        """
        scale = 2. / self.interval_upper

        def shifted(x):
            # T = (2 / b) op - I maps the spectrum onto [-1, 1]
            return op(x).mul(scale) - x

        c = self.coefficients
        b1 = torch.zeros_like(v)
        b2 = torch.zeros_like(v)
        for k in range(self.degree, 0, -1):
            b0 = v * c[k] + shifted(b1).mul(2.) - b2
            b2 = b1
            b1 = b0
        return v * c[0] + shifted(b1) - b2

    def __repr__(self):
        return 'ChebApprox(degree={}, b={:.4g}, error={:.2e})'.format(self.degree, self.interval_upper, self.error_estimate)


def chebyshev_sqrt(degree: int, b: float, tol: Optional[float] = None) -> ChebApprox:
    """
    Interpolates sqrt(x) on [0, b] at the Chebyshev points of the first kind.

    Args:
        degree: int
            polynomial degree, at least 8
        b: float
            upper end of the interval
        tol: float or None
            requested accuracy; if the sup-norm error estimate exceeds it a warning is issued

    Returns: ChebApprox
    """
    if degree < MIN_DEGREE:
        raise InvalidInputError('Chebyshev degree should be at least %d, got: %s' % (MIN_DEGREE, degree))
    if not b > 0:
        raise InvalidInputError('interval upper bound should be positive, got: %s' % b)

    coeffs = chebyshev.chebinterpolate(lambda y: np.sqrt(np.clip((y + 1.) * (0.5 * b), 0., None)), degree)
    x = np.concatenate([np.linspace(0., b, ERROR_SAMPLES), [0.1 * b, 0.5 * b]])
    approx = ChebApprox(coeffs, b, 0.)
    error = float(np.abs(approx(x) - np.sqrt(x)).max())
    approx.error_estimate = error

    if tol is not None and error > tol:
        approx.warning = 'degree %d gives error %.3e above the requested %.3e' % (degree, error, tol)
        warnings.warn(approx.warning)
    return approx
