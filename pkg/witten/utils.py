__author__ = 'max'

from typing import Tuple
import numpy as np
import torch

from witten.errors import InvalidInputError

DTYPE = torch.float64


def check_grid_size(n: int):
    """Grids are endpoint inclusive with n = 2^k + 1 points per axis, k >= 3"""
    k = n - 1
    if n < 9 or k & (k - 1) != 0:
        raise InvalidInputError('grid size should be 2^k + 1 with k >= 3, got: %s' % n)


def check_field(field: torch.Tensor) -> int:
    """
    Validates a field of shape [..., n, n].

    Returns: int
        the grid size n
    """
    if field.dim() < 2 or field.size(-1) != field.size(-2):
        raise InvalidInputError('field should be a square [n, n] array, got shape: %s' % (tuple(field.size()),))
    n = field.size(-1)
    check_grid_size(n)
    if not torch.isfinite(field).all():
        raise InvalidInputError('field contains non-finite values')
    return n


def check_same_shape(a: torch.Tensor, b: torch.Tensor):
    if a.size() != b.size():
        raise InvalidInputError('shape mismatch: %s vs %s' % (tuple(a.size()), tuple(b.size())))


def trapezoid_weights(n: int) -> torch.Tensor:
    """1-D trapezoid weights on the endpoint inclusive grid x_i = i / (n - 1)"""
    w = torch.full((n,), 1.0 / (n - 1), dtype=DTYPE)
    w[0] = 0.5 / (n - 1)
    w[-1] = 0.5 / (n - 1)
    return w


def grid_coordinates(n: int) -> Tuple[torch.Tensor, torch.Tensor]:
    """
    Args:
        n: int
            points per axis

    Returns: x1: Tensor [n, n], x2: Tensor [n, n]
        ij-indexed coordinates, x1[i, j] = i / (n - 1), x2[i, j] = j / (n - 1)
    """
    x = torch.linspace(0., 1., n, dtype=DTYPE)
    x1, x2 = torch.meshgrid(x, x, indexing='ij')
    return x1, x2


def dot(a: torch.Tensor, b: torch.Tensor) -> torch.Tensor:
    """Euclidean pairing over the last two dimensions"""
    return a.mul(b).sum(dim=(-2, -1))


def norm(a: torch.Tensor) -> torch.Tensor:
    return dot(a, a).sqrt()


def loglog_slope(x, y) -> float:
    """least squares slope of log(y) against log(x)"""
    slope, _ = np.polyfit(np.log(np.asarray(x, dtype=np.float64)), np.log(np.asarray(y, dtype=np.float64)), 1)
    return float(slope)
