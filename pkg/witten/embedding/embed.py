__author__ = 'max'

import math
import logging
from typing import Optional
import torch

from witten.errors import ConsistencyError, InvalidInputError, NonConvergenceError
from witten.grid.density import DensityGrid, integrate, inner_product, l2_distance
from witten.potential import WittenPotential, build_potential
from witten.solvers.hm1 import SolverConfig, solve_witten, MASS_DEFECT_TOL
from witten.embedding.chebyshev import chebyshev_sqrt
from witten.utils import check_same_shape

logger = logging.getLogger(__name__)

DEFAULT_DEGREE = 1024


class EmbeddingField(object):
    """
    Phi_f(g) = H_tau^{-1/2} ((f - g) / f_tau^{1/2}) on the grid. For a fixed f, L^2 distances between
    embedded fields are H^{-1}(d mu_tau) distances.
    """
    def __init__(self, phi: torch.Tensor, tau: float, cheb_degree: int, spectral_bound: float,
                 iterations=0, residual=0.):
        self.phi = phi
        self.tau = tau
        self.cheb_degree = cheb_degree
        self.spectral_bound = spectral_bound
        self.iterations = iterations
        self.residual = residual

    @property
    def n(self) -> int:
        return self.phi.size(-1)

    def norm(self) -> float:
        return math.sqrt(max(integrate(self.phi * self.phi), 0.))

    def __repr__(self):
        return 'EmbeddingField(n={}, tau={}, degree={}, b={:.4g})'.format(self.n, self.tau, self.cheb_degree, self.spectral_bound)


def spectral_bound(pot: WittenPotential) -> float:
    """upper bound b = 2 pi^2 (n-1)^2 + max(v_max, 0) of the spectrum of H_tau"""
    return 2. * math.pi ** 2 * (pot.n - 1) ** 2 + max(pot.v_max, 0.)


def embed(f: DensityGrid, g: DensityGrid, cfg: Optional[SolverConfig] = None, degree=DEFAULT_DEGREE,
          pot: Optional[WittenPotential] = None) -> EmbeddingField:
    """
    Two stages: psi = H^{-1} u_tilde by the conjugate gradient path of the H^{-1} solver,
    then Phi = H^{1/2} psi by the Chebyshev expansion of sqrt(x) with operator argument H.

    Args:
        f: DensityGrid
            normalized reference density
        g: DensityGrid
            normalized density to embed
        cfg: SolverConfig
        degree: int
            Chebyshev degree
        pot: WittenPotential
            potential of f, built from cfg if not given

    Returns: EmbeddingField
    """
    if cfg is None:
        cfg = SolverConfig()
    check_same_shape(f.values, g.values)
    if pot is None:
        pot = build_potential(f, tau=cfg.tau, floor=cfg.floor)
    diff = f.values - g.values
    mass_defect = abs(integrate(diff))
    if mass_defect > MASS_DEFECT_TOL:
        raise InvalidInputError('densities should have equal mass, defect: %s' % mass_defect)

    bound = spectral_bound(pot)
    approx = chebyshev_sqrt(degree, bound)
    s = pot.sqrt_f_tau
    psi, iters, residual, converged = solve_witten(pot, diff / s, cfg)
    if not converged:
        raise NonConvergenceError('conjugate gradient did not converge in %d iterations, residual: %s' % (iters, residual))
    # remove the null direction of H before the recurrence
    psi = psi - s * (inner_product(psi, s) / inner_product(s, s))

    phi = approx.apply(pot.apply_hamiltonian, psi)
    if not torch.isfinite(phi).all():
        raise ConsistencyError('non-finite values in the embedded field')
    logger.debug('embedding: degree %d, bound %.4g, cheb error %.2e', degree, bound, approx.error_estimate)
    return EmbeddingField(phi, pot.tau, degree, bound, iterations=iters, residual=residual)


def embedding_distance(a: EmbeddingField, b: EmbeddingField) -> float:
    if a.tau != b.tau or a.spectral_bound != b.spectral_bound:
        raise InvalidInputError('embedded fields come from different potentials: tau %s vs %s, bound %s vs %s'
                                % (a.tau, b.tau, a.spectral_bound, b.spectral_bound))
    check_same_shape(a.phi, b.phi)
    return l2_distance(a.phi, b.phi)
