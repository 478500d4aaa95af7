__author__ = 'max'

import math
import pytest
import torch

from witten.errors import InvalidInputError
from witten.grid import DensityGrid, integrate, inner_product, normalize_density, l2_distance
from witten.utils import DTYPE, check_grid_size, grid_coordinates, trapezoid_weights, loglog_slope


@pytest.mark.parametrize('n', [9, 17, 33, 257])
def test_valid_grid_sizes(n):
    check_grid_size(n)


@pytest.mark.parametrize('n', [5, 8, 10, 16, 100])
def test_invalid_grid_sizes(n):
    with pytest.raises(InvalidInputError):
        check_grid_size(n)


def test_trapezoid_weights_sum_to_one():
    assert abs(trapezoid_weights(33).sum().item() - 1.) < 1e-15


def test_integrate_constant_and_linear():
    n = 17
    x1, x2 = grid_coordinates(n)
    assert abs(integrate(torch.ones(n, n, dtype=DTYPE)) - 1.) < 1e-14
    assert abs(integrate(x1) - 0.5) < 1e-14
    assert abs(integrate(x1 * x2) - 0.25) < 1e-14


def test_integrate_cosine_square():
    x1, _ = grid_coordinates(33)
    assert abs(integrate(x1.mul(math.pi).cos().pow(2)) - 0.5) < 1e-14


def test_integrate_is_linear(generator):
    a = torch.randn(33, 33, generator=generator, dtype=DTYPE)
    b = torch.randn(33, 33, generator=generator, dtype=DTYPE)
    assert abs(integrate(a * 2.5 - b * 0.75) - (2.5 * integrate(a) - 0.75 * integrate(b))) < 1e-12


def test_coordinates_are_ij_indexed():
    x1, x2 = grid_coordinates(9)
    assert x1[8, 0].item() == 1.
    assert x2[0, 8].item() == 1.


def test_inner_product_and_distance():
    n = 33
    x1, _ = grid_coordinates(n)
    f = torch.ones(n, n, dtype=DTYPE)
    assert abs(inner_product(f, x1) - 0.5) < 1e-14
    assert l2_distance(f, f) == 0.
    assert abs(l2_distance(f, torch.zeros(n, n, dtype=DTYPE)) - 1.) < 1e-14


def test_distance_triangle_inequality(generator):
    for _ in range(20):
        f, g, h = torch.rand(3, 17, 17, generator=generator, dtype=DTYPE)
        assert l2_distance(f, h) <= l2_distance(f, g) + l2_distance(g, h) + 1e-14


def test_shape_mismatch():
    with pytest.raises(InvalidInputError):
        inner_product(torch.ones(9, 9, dtype=DTYPE), torch.ones(17, 17, dtype=DTYPE))


def test_normalize_density():
    n = 17
    x1, x2 = grid_coordinates(n)
    f = normalize_density(DensityGrid(1. + x1 * x2))
    assert f.normalized
    assert abs(integrate(f) - 1.) < 1e-12


def test_normalize_rejects_negative_and_empty():
    n = 9
    with pytest.raises(InvalidInputError):
        normalize_density(DensityGrid(torch.full((n, n), -1., dtype=DTYPE)))
    with pytest.raises(InvalidInputError):
        normalize_density(DensityGrid(torch.zeros(n, n, dtype=DTYPE)))


def test_normalized_flag_is_checked():
    with pytest.raises(InvalidInputError):
        DensityGrid(torch.full((9, 9), 2., dtype=DTYPE), normalized=True)


def test_rejects_bad_fields():
    with pytest.raises(InvalidInputError):
        DensityGrid(torch.ones(9, 17, dtype=DTYPE))
    bad = torch.ones(9, 9, dtype=DTYPE)
    bad[3, 3] = math.nan
    with pytest.raises(InvalidInputError):
        DensityGrid(bad)


def test_loglog_slope():
    x = [1e-3, 2e-3, 4e-3, 8e-3]
    y = [3. * v ** 2 for v in x]
    assert abs(loglog_slope(x, y) - 2.) < 1e-10
