__author__ = 'max'

import math
import pytest
import torch

from witten.errors import InvalidInputError
from witten.spectral import dct_forward, dct_inverse, eigenvalues, EIGENVALUE_CONVENTION
from witten.spectral import apply_fractional_laplacian, heat_semigroup, project_constant, laplacian, gradient
from witten.grid.density import integrate
from witten.utils import DTYPE, grid_coordinates


def _random_field(n, generator):
    return torch.rand(n, n, generator=generator, dtype=DTYPE)


@pytest.mark.parametrize('n', [9, 33, 65])
def test_round_trip(n, generator):
    field = _random_field(n, generator)
    assert (dct_inverse(dct_forward(field)) - field).abs().max().item() <= 1e-12
    coeffs = _random_field(n, generator)
    assert (dct_forward(dct_inverse(coeffs)) - coeffs).abs().max().item() <= 1e-12


def test_transform_is_an_isometry(generator):
    field = _random_field(33, generator)
    coeffs = dct_forward(field)
    assert abs(coeffs.pow(2).sum().item() - integrate(field * field)) <= 1e-12 * integrate(field * field)


def test_constant_and_single_mode():
    n = 17
    x1, x2 = grid_coordinates(n)
    coeffs = dct_forward(torch.ones(n, n, dtype=DTYPE))
    assert abs(coeffs[0, 0].item() - 1.) < 1e-14
    assert coeffs.abs().sum().item() - abs(coeffs[0, 0].item()) < 1e-12

    mode = x1.mul(math.pi).cos().mul(math.sqrt(2.)) * x2.mul(2. * math.pi).cos().mul(math.sqrt(2.))
    coeffs = dct_forward(mode)
    assert abs(coeffs[1, 2].item() - 1.) < 1e-12
    coeffs[1, 2] = 0.
    assert coeffs.abs().max().item() < 1e-12


def test_batched_transform(generator):
    fields = torch.rand(3, 17, 17, generator=generator, dtype=DTYPE)
    batched = dct_forward(fields)
    for i in range(3):
        torch.testing.assert_close(batched[i], dct_forward(fields[i]), rtol=0., atol=1e-14)


def test_rejects_bad_sizes():
    with pytest.raises(InvalidInputError):
        dct_forward(torch.zeros(10, 10, dtype=DTYPE))
    with pytest.raises(InvalidInputError):
        dct_inverse(torch.zeros(9, 17, dtype=DTYPE))


def test_eigenvalues():
    lam = eigenvalues(9)
    assert EIGENVALUE_CONVENTION == 'pi2'
    assert lam[0, 0].item() == 0.
    assert abs(lam[1, 2].item() - 5. * math.pi ** 2) < 1e-12
    assert abs(lam[8, 8].item() - 2. * math.pi ** 2 * 64) < 1e-9


@pytest.mark.parametrize('gamma', [0.5, 1., -1.])
def test_fractional_laplacian_composition(gamma, generator):
    coeffs = _random_field(33, generator)
    out = apply_fractional_laplacian(apply_fractional_laplacian(coeffs, gamma), -gamma)
    assert (out - coeffs).abs().max().item() <= 1e-11 * coeffs.abs().max().item()


def test_fractional_laplacian_keeps_zero_mode():
    coeffs = torch.zeros(17, 17, dtype=DTYPE)
    coeffs[0, 0] = 3.
    coeffs[0, 1] = 1.
    out = apply_fractional_laplacian(coeffs, -0.5)
    assert out[0, 0].item() == 3.
    assert abs(out[0, 1].item() - 1. / math.pi) < 1e-15


def test_heat_semigroup(generator):
    coeffs = _random_field(33, generator)
    twice = heat_semigroup(heat_semigroup(coeffs, 1e-3), 2e-3)
    once = heat_semigroup(coeffs, 3e-3)
    assert (twice - once).abs().max().item() <= 1e-12
    assert torch.equal(heat_semigroup(coeffs, 0.), coeffs)
    with pytest.raises(InvalidInputError):
        heat_semigroup(coeffs, -1.)


def test_heat_semigroup_single_mode():
    n = 33
    x1, _ = grid_coordinates(n)
    mode = x1.mul(math.pi).cos().mul(math.sqrt(2.))
    out = dct_inverse(heat_semigroup(dct_forward(mode), 1.))
    torch.testing.assert_close(out, mode.mul(math.exp(-math.pi ** 2)), rtol=0., atol=1e-14)


@pytest.mark.parametrize('tau', [1e-4, 1e-2, 1.])
def test_heat_semigroup_contracts_and_keeps_mass(tau, generator):
    coeffs = _random_field(33, generator)
    out = heat_semigroup(coeffs, tau)
    assert out[0, 0].item() == coeffs[0, 0].item()
    assert out.pow(2).sum().item() <= coeffs.pow(2).sum().item()


def test_project_constant(generator):
    coeffs = _random_field(17, generator)
    out = project_constant(coeffs)
    assert out[0, 0].item() == coeffs[0, 0].item()
    assert out.abs().sum().item() == abs(coeffs[0, 0].item())


def test_laplacian_of_cosine_mode():
    n = 33
    x1, x2 = grid_coordinates(n)
    field = x1.mul(math.pi).cos() * x2.mul(2. * math.pi).cos()
    lap = dct_inverse(laplacian(dct_forward(field)))
    torch.testing.assert_close(lap, field.mul(-5. * math.pi ** 2), rtol=0., atol=1e-9)


def test_laplacian_kills_constants():
    lap = laplacian(dct_forward(torch.ones(17, 17, dtype=DTYPE)))
    assert lap.abs().max().item() < 1e-10


def test_gradient_of_cosine_mode():
    n = 33
    x1, x2 = grid_coordinates(n)
    field = x1.mul(math.pi).cos() * x2.mul(2. * math.pi).cos()
    d1, d2 = gradient(field)
    torch.testing.assert_close(d1, x1.mul(math.pi).sin().mul(-math.pi) * x2.mul(2. * math.pi).cos(), rtol=0., atol=1e-10)
    torch.testing.assert_close(d2, x1.mul(math.pi).cos() * x2.mul(2. * math.pi).sin().mul(-2. * math.pi), rtol=0., atol=1e-10)
