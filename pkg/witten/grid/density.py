__author__ = 'max'

from typing import Union
import math
import torch

from witten.errors import InvalidInputError
from witten.utils import DTYPE, check_field, check_same_shape, trapezoid_weights

NORMALIZATION_TOL = 1e-12


class DensityGrid(object):
    """
    An n x n sampling of a nonnegative function on [0,1]^2.
    values[i, j] = f(x_i, y_j) with x_i = i / (n - 1).
    """
    def __init__(self, values, normalized=False):
        values = torch.as_tensor(values, dtype=DTYPE)
        check_field(values)
        if values.dim() != 2:
            raise InvalidInputError('density grid should be a single [n, n] array, got shape: %s' % (tuple(values.size()),))
        self.values = values
        self.normalized = normalized
        if normalized:
            mass = integrate(values)
            if abs(mass - 1.0) > NORMALIZATION_TOL:
                raise InvalidInputError('grid flagged normalized has mass: %s' % mass)

    @property
    def n(self) -> int:
        return self.values.size(-1)

    def __repr__(self):
        return 'DensityGrid(n={}, normalized={})'.format(self.n, self.normalized)


def _values(field: Union[DensityGrid, torch.Tensor]) -> torch.Tensor:
    if isinstance(field, DensityGrid):
        return field.values
    return torch.as_tensor(field, dtype=DTYPE)


def integrate(field: Union[DensityGrid, torch.Tensor]) -> float:
    """
    Trapezoid rule on the unit square.

    Args:
        field: DensityGrid or Tensor [n, n]

    Returns: float
        sum_ij w_i w_j field[i, j]
    """
    field = _values(field)
    n = check_field(field)
    w = trapezoid_weights(n)
    return torch.mv(field, w).dot(w).item()


def inner_product(a: Union[DensityGrid, torch.Tensor], b: Union[DensityGrid, torch.Tensor]) -> float:
    """L^2(dx) pairing of two fields"""
    a = _values(a)
    b = _values(b)
    check_same_shape(a, b)
    return integrate(a * b)


def normalize_density(f: DensityGrid) -> DensityGrid:
    values = _values(f)
    check_field(values)
    if (values < 0).any():
        raise InvalidInputError('density has negative values, min: %s' % values.min().item())
    mass = integrate(values)
    if not mass > 0:
        raise InvalidInputError('density has zero mass')
    return DensityGrid(values / mass, normalized=True)


def l2_distance(f: Union[DensityGrid, torch.Tensor], g: Union[DensityGrid, torch.Tensor]) -> float:
    f = _values(f)
    g = _values(g)
    check_same_shape(f, g)
    diff = f - g
    return math.sqrt(max(integrate(diff * diff), 0.0))
