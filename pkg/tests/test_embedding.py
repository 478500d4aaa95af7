__author__ = 'max'

import math
import numpy as np
import pytest
import torch

from witten.errors import InvalidInputError, NonConvergenceError
from witten.embedding import chebyshev_sqrt, embed, embedding_distance, spectral_bound, EmbeddingField
from witten.grid.density import DensityGrid, l2_distance
from witten.potential import build_potential
from witten.solvers import SolverConfig, weighted_hm1_norm
from witten.utils import DTYPE

from helpers import uniform, single_mode


def test_chebyshev_arguments():
    with pytest.raises(InvalidInputError):
        chebyshev_sqrt(4, 1.)
    with pytest.raises(InvalidInputError):
        chebyshev_sqrt(16, 0.)


def test_chebyshev_error_decreases_with_degree():
    errors = [chebyshev_sqrt(d, 100.).error_estimate for d in (16, 64, 256)]
    assert errors[0] > errors[1] > errors[2]
    approx = chebyshev_sqrt(256, 100.)
    assert approx.degree == 256
    assert abs(approx(49.) - 7.) <= approx.error_estimate


def test_chebyshev_tolerance_warning():
    with pytest.warns(UserWarning):
        approx = chebyshev_sqrt(8, 1e4, tol=1e-10)
    assert approx.warning is not None
    assert chebyshev_sqrt(8, 1e4).warning is None


def test_clenshaw_matches_scalar_evaluation(generator):
    b = 50.
    approx = chebyshev_sqrt(64, b)
    diag = torch.rand(9, 9, generator=generator, dtype=DTYPE).mul(b)
    v = torch.randn(9, 9, generator=generator, dtype=DTYPE)
    out = approx.apply(lambda x: x * diag, v)
    expected = torch.from_numpy(approx(diag.numpy())) * v
    torch.testing.assert_close(out, expected, rtol=1e-10, atol=1e-10)


def test_spectral_bound_uniform():
    pot = build_potential(uniform(17))
    assert abs(spectral_bound(pot) - 2. * math.pi ** 2 * 256) <= 1e-6


def test_identical_densities_embed_to_zero(wide_gaussian):
    f = wide_gaussian.grid(33)
    field = embed(f, f, degree=64)
    assert field.norm() == 0.
    assert field.iterations == 0


def test_single_mode_on_uniform_reference():
    n = 33
    f = uniform(n)
    g = DensityGrid(f.values + single_mode(n))
    field = embed(f, g, degree=1024)
    assert abs(field.norm() - 0.01 / math.pi) <= 5e-3 * 0.01 / math.pi


def test_embedding_is_near_isometric(wide_gaussian):
    n = 33
    cfg = SolverConfig(tau=1e-3)
    f = wide_gaussian.grid(n)
    g = wide_gaussian.translated((0.01, -0.005)).grid(n)
    pot = build_potential(f, tau=cfg.tau, floor=cfg.floor)
    field = embed(f, g, cfg, pot=pot)
    norm = weighted_hm1_norm(f, g, cfg, pot=pot).value
    assert abs(field.norm() - norm) <= 0.02 * norm


def test_embedding_is_affine(wide_gaussian):
    n = 33
    f = wide_gaussian.grid(n)
    g = wide_gaussian.translated((0.01, 0.)).grid(n)
    h = wide_gaussian.translated((0., 0.01)).grid(n)
    mid = DensityGrid((g.values + h.values) * 0.5)
    pot = build_potential(f)
    phi_g = embed(f, g, degree=128, pot=pot).phi
    phi_h = embed(f, h, degree=128, pot=pot).phi
    phi_mid = embed(f, mid, degree=128, pot=pot).phi
    scale = phi_g.abs().max().item()
    torch.testing.assert_close(phi_mid, (phi_g + phi_h) * 0.5, rtol=0., atol=1e-7 * scale)


def test_distance_requires_matching_potentials():
    phi = torch.zeros(17, 17, dtype=DTYPE)
    a = EmbeddingField(phi, 1e-3, 64, 100.)
    with pytest.raises(InvalidInputError):
        embedding_distance(a, EmbeddingField(phi, 1e-2, 64, 100.))
    with pytest.raises(InvalidInputError):
        embedding_distance(a, EmbeddingField(phi, 1e-3, 64, 200.))
    with pytest.raises(InvalidInputError):
        embedding_distance(a, EmbeddingField(torch.zeros(33, 33, dtype=DTYPE), 1e-3, 64, 100.))
    assert embedding_distance(a, EmbeddingField(phi + 1., 1e-3, 64, 100.)) == pytest.approx(1.)


def test_distance_is_l2_of_fields(wide_gaussian):
    n = 33
    f = wide_gaussian.grid(n)
    pot = build_potential(f)
    a = embed(f, wide_gaussian.translated((0.01, 0.)).grid(n), degree=64, pot=pot)
    b = embed(f, wide_gaussian.translated((0., 0.01)).grid(n), degree=64, pot=pot)
    assert embedding_distance(a, b) == l2_distance(a.phi, b.phi)


def test_embed_rejects_mass_defect():
    f = uniform(17)
    with pytest.raises(InvalidInputError):
        embed(f, DensityGrid(f.values * 2.))


def test_embed_reports_non_convergence(wide_gaussian):
    f = wide_gaussian.grid(33)
    g = wide_gaussian.translated((0.01, 0.)).grid(33)
    with pytest.raises(NonConvergenceError):
        embed(f, g, SolverConfig(tol=1e-14, max_iter=1), degree=64)


def test_field_repr_and_size():
    field = EmbeddingField(torch.zeros(17, 17, dtype=DTYPE), 1e-3, 64, 100.)
    assert field.n == 17
    assert 'degree=64' in repr(field)
    assert np.isclose(field.norm(), 0.)


def test_chebyshev_unit_interval():
    approx = chebyshev_sqrt(64, 1.)
    assert abs(approx(0.5) - math.sqrt(0.5)) < 1e-3
    for x in (0.1, 0.5, 1.):
        assert abs(approx(x) - math.sqrt(x)) <= approx.error_estimate
