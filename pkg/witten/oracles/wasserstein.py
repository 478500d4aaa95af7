__author__ = 'max'

import math
from typing import Dict, Sequence
import numpy as np
from scipy.special import ndtr
from scipy.integrate import cumulative_trapezoid
import torch

from witten.errors import InvalidInputError

# 1-D inputs must integrate to one within this tolerance
QUANTILE_MASS_TOL = 1e-6
MIN_QUANTILE_POINTS = 1024


def _pair(x, name: str) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    if x.shape != (2,) or not np.isfinite(x).all():
        raise InvalidInputError('%s should be a finite 2-vector, got: %s' % (name, x))
    return x


class GaussianSpec(object):
    """Gaussian with mean m and diagonal covariance diag(sigma^2)"""
    def __init__(self, mean: Sequence[float], sigma: Sequence[float]):
        self.mean = _pair(mean, 'mean')
        self.sigma = _pair(sigma, 'sigma')
        if not (self.sigma > 0).all():
            raise InvalidInputError('sigma should be positive, got: %s' % self.sigma)

    def shifted(self, d_mean=(0., 0.), d_sigma=(0., 0.)) -> "GaussianSpec":
        return GaussianSpec(self.mean + _pair(d_mean, 'mean shift'), self.sigma + _pair(d_sigma, 'sigma shift'))

    def evaluate(self, x1: torch.Tensor, x2: torch.Tensor) -> torch.Tensor:
        """(1 / (2 pi sigma_1 sigma_2)) exp(-(1/2) sum_i (x_i - m_i)^2 / sigma_i^2)"""
        m1, m2 = self.mean
        s1, s2 = self.sigma
        z = (x1 - m1).div(s1).pow(2) + (x2 - m2).div(s2).pow(2)
        return z.mul(-0.5).exp().div(2. * math.pi * s1 * s2)

    def potential(self, x1: torch.Tensor, x2: torch.Tensor) -> torch.Tensor:
        """closed form of f^{-1/2} Delta f^{1/2}: sum_i (x_i - m_i)^2 / (4 sigma_i^4) - sum_i 1 / (2 sigma_i^2)"""
        m1, m2 = self.mean
        s1, s2 = self.sigma
        quad = (x1 - m1).pow(2).div(4. * s1 ** 4) + (x2 - m2).pow(2).div(4. * s2 ** 4)
        return quad - (0.5 / s1 ** 2 + 0.5 / s2 ** 2)

    def boundary_mass(self) -> float:
        """probability mass outside [0,1]^2"""
        inside = np.prod(ndtr((1. - self.mean) / self.sigma) - ndtr(-self.mean / self.sigma))
        return float(max(1. - inside, 0.))

    def to_params(self) -> Dict:
        return {'mean': self.mean.tolist(), 'sigma': self.sigma.tolist()}

    @classmethod
    def from_params(cls, params: Dict) -> "GaussianSpec":
        return GaussianSpec(**params)

    def __repr__(self):
        return 'GaussianSpec(mean={}, sigma={})'.format(self.mean.tolist(), self.sigma.tolist())


def w2_gaussian_diag(a: GaussianSpec, b: GaussianSpec) -> float:
    """W2^2 = |m_a - m_b|^2 + |sigma_a - sigma_b|^2 for diagonal covariances"""
    return float(np.sqrt(np.sum((a.mean - b.mean) ** 2) + np.sum((a.sigma - b.sigma) ** 2)))


def w2_translate(base: float, v: Sequence[float]) -> float:
    """W2 after translating the second measure by v, given its W2 to the first measure before"""
    if not base >= 0:
        raise InvalidInputError('base distance should be nonnegative, got: %s' % base)
    v = _pair(v, 'translation')
    return float(np.sqrt(base ** 2 + np.sum(v ** 2)))


def _quantile(density: np.ndarray, x: np.ndarray, t: np.ndarray) -> np.ndarray:
    cdf = cumulative_trapezoid(density, x, initial=0.)
    mass = cdf[-1]
    if abs(mass - 1.) > QUANTILE_MASS_TOL:
        raise InvalidInputError('1-D density should integrate to 1, got: %s' % mass)
    # pseudo-inverse: the first x at which each cdf level is reached
    levels, first = np.unique(cdf / mass, return_index=True)
    return np.interp(t, levels, x[first])


def w2_1d_quantile(f, g, m=4096, x=None) -> float:
    """
    W2^2 = int_0^1 (F^{-1}(t) - G^{-1}(t))^2 dt by the midpoint rule on m points.

    Args:
        f: 1-D array
            density samples on x
        g: 1-D array
            density samples on x
        m: int
            quadrature points, at least 1024
        x: 1-D array or None
            sample locations, the endpoint inclusive uniform grid on [0, 1] if not given

    Returns: float
    """
    f = np.asarray(f, dtype=np.float64)
    g = np.asarray(g, dtype=np.float64)
    if f.ndim != 1 or f.shape != g.shape:
        raise InvalidInputError('1-D densities of equal length expected, got shapes %s and %s' % (f.shape, g.shape))
    if m < MIN_QUANTILE_POINTS:
        raise InvalidInputError('at least %d quadrature points required, got: %s' % (MIN_QUANTILE_POINTS, m))
    if (f < 0).any() or (g < 0).any():
        raise InvalidInputError('1-D densities should be nonnegative')
    x = np.linspace(0., 1., len(f)) if x is None else np.asarray(x, dtype=np.float64)
    t = (np.arange(m) + 0.5) / m
    diff = _quantile(f, x, t) - _quantile(g, x, t)
    return float(np.sqrt(np.mean(diff ** 2)))
