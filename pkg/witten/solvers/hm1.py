__author__ = 'max'

import math
import logging
from typing import Dict, Optional, Tuple
import torch

from witten.errors import InvalidInputError, ConsistencyError
from witten.grid.density import DensityGrid, integrate, inner_product
from witten.potential import WittenPotential, build_potential, DEFAULT_TAU, DEFAULT_FLOOR
from witten.spectral import dct_forward, dct_inverse, eigenvalues, apply_fractional_laplacian, project_constant
from witten.solvers.cg import conjugate_gradient
from witten.utils import check_same_shape, norm

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
MASS_DEFECT_TOL = 1e-10
DEFLATION_TOL = 1e-6
# pairings in [-NEGATIVE_PAIRING_TOL, 0) are rounding noise and clamped to zero
NEGATIVE_PAIRING_TOL = 1e-14


class SolverConfig(object):
    """
    Settings of the weighted H^{-1} solve. max_iter=None resolves to ceil(10 sqrt(1 + v_max)) + 100
    once the potential is known.
    """
    def __init__(self, tol=DEFAULT_TOL, max_iter=None, tau=DEFAULT_TAU, floor=DEFAULT_FLOOR):
        if not tol > 0:
            raise InvalidInputError('tolerance should be positive, got: %s' % tol)
        if max_iter is not None and max_iter < 1:
            raise InvalidInputError('max_iter should be at least 1, got: %s' % max_iter)
        if not tau >= 0:
            raise InvalidInputError('heat time should be nonnegative, got: %s' % tau)
        if not floor > 0:
            raise InvalidInputError('positivity floor should be positive, got: %s' % floor)
        self.tol = float(tol)
        self.max_iter = None if max_iter is None else int(max_iter)
        self.tau = float(tau)
        self.floor = float(floor)

    def resolve_max_iter(self, v_max: float) -> int:
        if self.max_iter is not None:
            return self.max_iter
        return int(math.ceil(10. * math.sqrt(1. + v_max))) + 100

    def to_params(self) -> Dict:
        return {'tol': self.tol, 'max_iter': self.max_iter, 'tau': self.tau, 'floor': self.floor}

    @classmethod
    def from_params(cls, params: Dict) -> "SolverConfig":
        unknown = set(params.keys()) - {'tol', 'max_iter', 'tau', 'floor'}
        if len(unknown) > 0:
            raise InvalidInputError('unknown solver options: %s' % sorted(unknown))
        return SolverConfig(**params)

    def __repr__(self):
        return 'SolverConfig(tol={}, max_iter={}, tau={}, floor={})'.format(self.tol, self.max_iter, self.tau, self.floor)


class NormResult(object):
    def __init__(self, value: float, iterations: int, residual: float, v_max: float, mass_defect: float, converged=True):
        assert value >= 0
        self.value = value
        self.iterations = iterations
        self.residual = residual
        self.v_max = v_max
        self.mass_defect = mass_defect
        self.converged = converged

    def to_dict(self) -> Dict:
        return {'value': self.value, 'iterations': self.iterations, 'residual': self.residual,
                'v_max': self.v_max, 'mass_defect': self.mass_defect, 'converged': self.converged}

    def __repr__(self):
        return 'NormResult(value={:.6e}, iterations={}, residual={:.2e}, converged={})'.format(
            self.value, self.iterations, self.residual, self.converged)


def apply_A(pot: WittenPotential, xi: torch.Tensor) -> torch.Tensor:
    """
    A = Id - P_1 + (-Delta)^{-1/2} V (-Delta)^{-1/2} in cosine coefficients,
    the multiplication by V done on the grid.

    Args:
        pot: WittenPotential
        xi: Tensor [..., n, n]
            coefficients

    Returns: Tensor [..., n, n]
    """
    if xi.size()[-2:] != pot.v.size():
        raise InvalidInputError('shape mismatch: %s vs %s' % (tuple(xi.size()), tuple(pot.v.size())))
    field = dct_inverse(apply_fractional_laplacian(xi, -0.5))
    out = apply_fractional_laplacian(dct_forward(field * pot.v), -0.5)
    return xi - project_constant(xi) + out


def deflation_vector(pot: WittenPotential) -> torch.Tensor:
    """
    The unit null direction w of A, proportional to (-Delta)^{1/2} applied to the coefficients of f_tau^{1/2}.
    Raises ConsistencyError when ||A w|| exceeds the tolerance.
    """
    w = apply_fractional_laplacian(dct_forward(pot.sqrt_f_tau), 0.5)
    w = w / norm(w)
    defect = norm(apply_A(pot, w)).item()
    if defect > DEFLATION_TOL:
        raise ConsistencyError('null direction is not annihilated, ||Aw|| = %s' % defect)
    return w


def solve_witten(pot: WittenPotential, u_tilde: torch.Tensor, cfg: SolverConfig) -> Tuple[torch.Tensor, int, float, bool]:
    """
    Solves H_tau psi = u_tilde through the preconditioned system A Psi = (-Delta)^{-1/2} u_tilde,
    psi = (-Delta)^{-1/2} Psi.

    Returns: psi: Tensor [n, n], iterations: int, residual: float, converged: bool
    """
    check_same_shape(u_tilde, pot.v)
    w = deflation_vector(pot)
    rhs = apply_fractional_laplacian(dct_forward(u_tilde), -0.5)
    max_iter = cfg.resolve_max_iter(pot.v_max)
    Psi, iters, residual, converged = conjugate_gradient(lambda xi: apply_A(pot, xi), rhs, cfg.tol, max_iter,
                                                         deflation=w)
    psi = dct_inverse(apply_fractional_laplacian(Psi, -0.5))
    logger.debug('witten solve: %d iterations, residual %.3e, converged %s, v_max %.4g',
                 iters, residual, converged, pot.v_max)
    return psi, iters, residual, converged


def witten_norm(pot: WittenPotential, diff: torch.Tensor, cfg: Optional[SolverConfig] = None) -> NormResult:
    """
    ||diff / f_tau|| in H^{-1}(d mu_tau) under a prebuilt potential.

    Args:
        pot: WittenPotential
        diff: Tensor [n, n]
            zero mass difference of densities, f - g
        cfg: SolverConfig

    Returns: NormResult
    """
    if cfg is None:
        cfg = SolverConfig(tau=pot.tau, floor=pot.floor)
    diff = torch.as_tensor(diff, dtype=pot.v.dtype)
    check_same_shape(diff, pot.v)
    mass_defect = abs(integrate(diff))
    if mass_defect > MASS_DEFECT_TOL:
        raise InvalidInputError('densities should have equal mass, defect: %s' % mass_defect)

    u_tilde = diff / pot.sqrt_f_tau
    psi, iters, residual, converged = solve_witten(pot, u_tilde, cfg)
    pairing = inner_product(u_tilde, psi)
    if pairing < -NEGATIVE_PAIRING_TOL:
        raise ConsistencyError('negative energy pairing: %s' % pairing)
    if not converged:
        logger.debug('witten solve stopped at max_iter=%d with residual %.3e', iters, residual)
    return NormResult(math.sqrt(max(pairing, 0.)), iters, residual, pot.v_max, mass_defect, converged)


def weighted_hm1_norm(f: DensityGrid, g: DensityGrid, cfg: Optional[SolverConfig] = None,
                      pot: Optional[WittenPotential] = None) -> NormResult:
    """
    The linearised W2 distance ||(f - g) / f_tau|| in H^{-1}(d mu_tau).

    Args:
        f: DensityGrid
            normalized reference density
        g: DensityGrid
            normalized density of the same size
        cfg: SolverConfig
        pot: WittenPotential
            potential of f, built from cfg if not given

    Returns: NormResult
    """
    if cfg is None:
        cfg = SolverConfig()
    check_same_shape(f.values, g.values)
    if pot is None:
        pot = build_potential(f, tau=cfg.tau, floor=cfg.floor)
    return witten_norm(pot, f.values - g.values, cfg)


def unweighted_hm1_norm(f: DensityGrid, g: DensityGrid) -> float:
    """sqrt(sum_{k != 0} a_k^2 / lambda_k) with a = dct_forward(f - g)"""
    check_same_shape(f.values, g.values)
    diff = f.values - g.values
    mass_defect = abs(integrate(diff))
    if mass_defect > MASS_DEFECT_TOL:
        raise InvalidInputError('densities should have equal mass, defect: %s' % mass_defect)
    a = dct_forward(diff)
    lam = eigenvalues(f.n)
    lam[0, 0] = 1.
    a[0, 0] = 0.
    return math.sqrt(a.pow(2).div(lam).sum().item())
