__author__ = 'max'

import math
import warnings
from typing import Dict, Sequence, Tuple, Union
import numpy as np
from scipy.integrate import trapezoid
import torch
from overrides import overrides

from witten.errors import InvalidInputError
from witten.grid.density import DensityGrid, normalize_density
from witten.oracles.wasserstein import GaussianSpec
from witten.utils import DTYPE, grid_coordinates

# mass allowed outside [0,1]^2 before a warning is issued
BOUNDARY_MASS_TOL = 1e-8
MIN_STRIPED_SIZE = 129


class AnalyticDensity(object):
    """
    Base class of densities given by a formula on the plane. Grids are sampled from the formula
    and normalized; translations re-evaluate the formula at shifted arguments.
    """
    _registry = dict()

    def evaluate(self, x1: torch.Tensor, x2: torch.Tensor) -> torch.Tensor:
        """unnormalized density values at the points (x1, x2)"""
        raise NotImplementedError

    def translated(self, v: Sequence[float]) -> "AnalyticDensity":
        """the density x -> f(x + v)"""
        raise NotImplementedError

    def boundary_mass(self) -> float:
        """fraction of the mass lying outside [0,1]^2"""
        raise NotImplementedError

    def min_grid_size(self) -> int:
        return 9

    def grid(self, n: int) -> DensityGrid:
        if n < self.min_grid_size():
            raise InvalidInputError('%s needs n >= %d, got: %s' % (self, self.min_grid_size(), n))
        mass = self.boundary_mass()
        if mass > BOUNDARY_MASS_TOL:
            warnings.warn('%s has mass %.3e outside the unit square' % (self, mass))
        x1, x2 = grid_coordinates(n)
        return normalize_density(DensityGrid(self.evaluate(x1, x2)))

    @classmethod
    def register(cls, name: str):
        AnalyticDensity._registry[name] = cls

    @classmethod
    def by_name(cls, name: str):
        if name not in AnalyticDensity._registry:
            raise InvalidInputError('unknown density: %s' % name)
        return AnalyticDensity._registry[name]

    @classmethod
    def from_params(cls, params: Dict) -> "AnalyticDensity":
        raise NotImplementedError


class GaussianDensity(AnalyticDensity):
    def __init__(self, mean=(0.5, 0.5), sigma=(1. / 16, 1. / 14)):
        super(GaussianDensity, self).__init__()
        self.spec = GaussianSpec(mean, sigma)

    @overrides
    def evaluate(self, x1: torch.Tensor, x2: torch.Tensor) -> torch.Tensor:
        return self.spec.evaluate(x1, x2)

    @overrides
    def translated(self, v: Sequence[float]) -> "AnalyticDensity":
        return GaussianDensity(self.spec.mean - np.asarray(v, dtype=np.float64), self.spec.sigma)

    @overrides
    def boundary_mass(self) -> float:
        return self.spec.boundary_mass()

    def __repr__(self):
        return 'GaussianDensity(mean={}, sigma={})'.format(self.spec.mean.tolist(), self.spec.sigma.tolist())

    @classmethod
    def from_params(cls, params: Dict) -> "GaussianDensity":
        return GaussianDensity(**params)


def _transition(t: torch.Tensor) -> torch.Tensor:
    # exp(-1/t) for t > 0, 0 otherwise
    return torch.where(t > 0, t.clamp(min=1e-300).reciprocal().neg().exp(), torch.zeros_like(t))


def smooth_step(t: torch.Tensor) -> torch.Tensor:
    """C^infinity step: 0 for t <= 0, 1 for t >= 1"""
    a = _transition(t)
    return a / (a + _transition(1. - t))


def bump(x: torch.Tensor, lo=0.1, hi=0.9, width=0.1) -> torch.Tensor:
    """smooth bump supported in [lo, hi], equal to 1 on [lo + width, hi - width]"""
    return smooth_step((x - lo) / width) * smooth_step((hi - x) / width)


class StripedDensity(AnalyticDensity):
    """
    exp(9 x_1) (cos(16 pi x_1) + 1) zeta(x_1) zeta(x_2) with zeta a smooth bump on [.1, .9]:
    eight vertical stripes whose intensity grows along x_1.
    """
    def __init__(self, shift=(0., 0.)):
        super(StripedDensity, self).__init__()
        shift = np.asarray(shift, dtype=np.float64).reshape(-1)
        if shift.shape != (2,):
            raise InvalidInputError('shift should be a 2-vector, got: %s' % shift)
        self.shift = shift

    @overrides
    def evaluate(self, x1: torch.Tensor, x2: torch.Tensor) -> torch.Tensor:
        y1 = x1 + self.shift[0]
        y2 = x2 + self.shift[1]
        stripes = y1.mul(9.).exp() * (y1.mul(16. * math.pi).cos() + 1.)
        return stripes * bump(y1) * bump(y2)

    @overrides
    def translated(self, v: Sequence[float]) -> "AnalyticDensity":
        return StripedDensity(self.shift + np.asarray(v, dtype=np.float64))

    @overrides
    def boundary_mass(self) -> float:
        # the support [.1, .9]^2 - shift stays inside the unit square for |shift| <= .1
        if (np.abs(self.shift) <= 0.1).all():
            return 0.
        lo = 0.1 - self.shift
        hi = 0.9 - self.shift
        x1 = torch.linspace(lo[0], hi[0], 801, dtype=DTYPE)
        x2 = torch.linspace(lo[1], hi[1], 801, dtype=DTYPE)
        g1, g2 = torch.meshgrid(x1, x2, indexing='ij')
        values = self.evaluate(g1, g2).numpy()
        inside = ((g1 >= 0) & (g1 <= 1) & (g2 >= 0) & (g2 <= 1)).numpy()
        total = trapezoid(trapezoid(values, x2.numpy(), axis=1), x1.numpy())
        kept = trapezoid(trapezoid(values * inside, x2.numpy(), axis=1), x1.numpy())
        return float(max(1. - kept / total, 0.))

    @overrides
    def min_grid_size(self) -> int:
        return MIN_STRIPED_SIZE

    def __repr__(self):
        return 'StripedDensity(shift={})'.format(self.shift.tolist())

    @classmethod
    def from_params(cls, params: Dict) -> "StripedDensity":
        return StripedDensity(**params)


GaussianDensity.register('gaussian')
StripedDensity.register('striped')


def make_gaussian_grid(spec: GaussianSpec, n: int) -> DensityGrid:
    return GaussianDensity(spec.mean, spec.sigma).grid(n)


def make_striped_bump_grid(n: int) -> DensityGrid:
    return StripedDensity().grid(n)


def make_translated_grid(base: Union[AnalyticDensity, Dict], v: Tuple[float, float], n: int) -> DensityGrid:
    """
    Args:
        base: AnalyticDensity or Dict
            the density, or its parameters with the registered name under 'type'
        v: 2-vector
            translation, the result samples f(x + v)
        n: int
            grid size

    Returns: DensityGrid
    """
    if isinstance(base, dict):
        params = dict(base)
        base = AnalyticDensity.by_name(params.pop('type')).from_params(params)
    return base.translated(v).grid(n)
