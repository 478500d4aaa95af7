__author__ = 'max'

import math
import torch

from witten.grid.density import DensityGrid, normalize_density
from witten.spectral import dct_inverse
from witten.utils import DTYPE, grid_coordinates


def uniform(n: int) -> DensityGrid:
    return DensityGrid(torch.ones(n, n, dtype=DTYPE), normalized=True)


def single_mode(n: int, amplitude=0.01) -> torch.Tensor:
    """amplitude * sqrt(2) cos(pi x_1), a unit-norm cosine mode scaled by amplitude"""
    x1, _ = grid_coordinates(n)
    return x1.mul(math.pi).cos().mul(math.sqrt(2.) * amplitude)


def smooth_random_density(n: int, generator: torch.Generator, modes=4, amplitude=0.02) -> DensityGrid:
    """1 + a few random low cosine modes, bounded away from zero, normalized"""
    coeffs = torch.zeros(n, n, dtype=DTYPE)
    coeffs[:modes, :modes] = torch.rand(modes, modes, generator=generator, dtype=DTYPE).mul(2.).sub(1.).mul(amplitude)
    coeffs[0, 0] = 1.
    return normalize_density(DensityGrid(dct_inverse(coeffs)))


def smooth_zero_mean(n: int) -> torch.Tensor:
    x1, x2 = grid_coordinates(n)
    return x1.mul(2. * math.pi).cos() * x2.mul(math.pi).cos() * 0.05 + x2.mul(3. * math.pi).cos() * 0.03
