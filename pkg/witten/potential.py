__author__ = 'max'

import math
import torch

from witten.errors import InvalidInputError
from witten.grid.density import DensityGrid, integrate, NORMALIZATION_TOL
from witten.spectral import dct_forward, dct_inverse, eigenvalues, heat_semigroup, laplacian, gradient

DEFAULT_TAU = 1e-3
DEFAULT_FLOOR = 1e-8
ALTERNATE_FORM_REGION = 1e-6


class WittenPotential(object):
    """
    The regularised potential V_tau = f_tau^{-1/2} Delta f_tau^{1/2} with f_tau = (e^{heat_time(tau) Delta} f^{1/2})^2,
    together with the quantities the solvers need. H_tau = -Delta + V_tau annihilates sqrt_f_tau.
    """
    def __init__(self, tau: float, v: torch.Tensor, f_tau: DensityGrid, sqrt_f_tau: torch.Tensor, floor: float):
        self.tau = tau
        self.v = v
        self.f_tau = f_tau
        self.sqrt_f_tau = sqrt_f_tau
        self.v_max = v.abs().max().item()
        self.floor = floor

    @property
    def n(self) -> int:
        return self.v.size(-1)

    def apply_hamiltonian(self, psi: torch.Tensor) -> torch.Tensor:
        """
        H_tau psi = -Delta psi + V_tau psi, -Delta spectral and V_tau pointwise.

        Args:
            psi: Tensor [..., n, n]

        Returns: Tensor [..., n, n]
        """
        lam = eigenvalues(self.n)
        return dct_inverse(dct_forward(psi) * lam) + self.v * psi

    def extra_repr(self) -> str:
        return 'tau={}, floor={}, v_max={:.4g}'.format(self.tau, self.floor, self.v_max)

    def __repr__(self):
        return 'WittenPotential({})'.format(self.extra_repr())


def _check_normalized(f: DensityGrid):
    mass = integrate(f.values)
    if abs(mass - 1.0) > NORMALIZATION_TOL:
        raise InvalidInputError('density should be normalized, mass: %s' % mass)


def heat_time(tau: float) -> float:
    """
    tau is measured against k_1^2 + k_2^2, the unscaled eigenvalues: the heat factor of mode k is
    exp(-tau (k_1^2 + k_2^2)), which is exp(-(tau / pi^2) lambda_k) on the pi^2 scaled table.
    """
    return tau / math.pi ** 2


def build_potential(f: DensityGrid, tau=DEFAULT_TAU, floor=DEFAULT_FLOOR) -> WittenPotential:
    """
    Args:
        f: DensityGrid
            normalized density
        tau: float
            heat time applied to f^{1/2}, see heat_time
        floor: float
            the smoothed f^{1/2} is clamped below at floor * max

    Returns: WittenPotential
    """
    if not floor > 0:
        raise InvalidInputError('positivity floor should be positive, got: %s' % floor)
    if not tau >= 0:
        raise InvalidInputError('heat time should be nonnegative, got: %s' % tau)
    _check_normalized(f)

    root = f.values.clamp(min=0.).sqrt()
    s = dct_inverse(heat_semigroup(dct_forward(root), heat_time(tau)))
    # smooth floor: s >= floor * max(s) without the kink of a hard clamp
    s = torch.hypot(s, torch.full_like(s, floor * s.abs().max().item()))
    v = dct_inverse(laplacian(dct_forward(s))) / s
    return WittenPotential(tau, v, DensityGrid(s * s), s, floor)


def potential_alternate_form_check(f: DensityGrid, tau=DEFAULT_TAU, floor=DEFAULT_FLOOR,
                                   region=ALTERNATE_FORM_REGION) -> float:
    """
    Max-abs difference between V_tau and (1/4)|grad F|^2 - (1/2) Delta F with F = -log f_tau,
    taken where f_tau > region * max(f_tau).

    F itself has a nonzero normal derivative, f_tau = s^2 does not, so grad f_tau and Delta f_tau
    are computed from the cosine series of f_tau and carried over to F:
    grad F = -grad f_tau / f_tau, Delta F = -Delta f_tau / f_tau + |grad f_tau|^2 / f_tau^2.
    The difference is the discretization error of squaring s on the grid.

    Args:
        f: DensityGrid
        tau: float
        floor: float
        region: float
            relative level of f_tau below which the difference is not measured,
            round off in Delta f_tau / f_tau dominates there

    Returns: float
    """
    pot = build_potential(f, tau=tau, floor=floor)
    f_tau = pot.f_tau.values
    d1, d2 = gradient(f_tau)
    lap = dct_inverse(laplacian(dct_forward(f_tau)))
    grad_sq = (d1 * d1 + d2 * d2) / (f_tau * f_tau)
    lap_F = grad_sq - lap / f_tau
    v_alt = grad_sq.mul(0.25) - lap_F.mul(0.5)
    mask = f_tau > region * f_tau.max()
    return (pot.v - v_alt)[mask].abs().max().item()
