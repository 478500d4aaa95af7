__author__ = 'max'

from typing import Dict, List, Sequence, Tuple
import numpy as np

from witten.errors import InvalidInputError, NonConvergenceError
from witten.data.densities import make_gaussian_grid
from witten.embedding import embed, embedding_distance, DEFAULT_DEGREE
from witten.oracles.wasserstein import GaussianSpec, w2_gaussian_diag
from witten.potential import build_potential
from witten.solvers.hm1 import weighted_hm1_norm, witten_norm
from witten.experiments.report import echo_config, solver_config
from witten.utils import loglog_slope

REFERENCE_MEAN = (0.5, 0.5)
REFERENCE_SIGMA = (1. / 16, 1. / 14)
# perturbations (mean shift, sigma shift) of the reference Gaussian
G_SHIFT = ((0.001, 0.002), (0.001, 0.003))
H_SHIFT = ((0.003, -0.002), (-0.001, 0.002))

# (mean_1, mean_2, sigma_1, sigma_2) direction of the scaling sweep, normalized before use
DEFAULT_DIRECTION = (0.001, 0.002, 0.001, 0.003)
DEFAULT_EPSILONS = (4e-3, 2e-3, 1e-3, 5e-4)
MIN_SCALING_POINTS = 4
MIN_SCALING_SPAN = 8.


def gaussian_triple() -> Tuple[GaussianSpec, GaussianSpec, GaussianSpec]:
    """the reference Gaussian f and its two perturbations g, h"""
    f = GaussianSpec(REFERENCE_MEAN, REFERENCE_SIGMA)
    return f, f.shifted(*G_SHIFT), f.shifted(*H_SHIFT)


def cmd_gaussian_check(n=257, tau=1e-3, tol=None, max_iter=None, floor=None, g_equals_f=False) -> Dict:
    cfg = solver_config(tau, tol, max_iter, floor)
    f_spec, g_spec, _ = gaussian_triple()
    if g_equals_f:
        g_spec = f_spec
    f = make_gaussian_grid(f_spec, n)
    g = make_gaussian_grid(g_spec, n)
    result = weighted_hm1_norm(f, g, cfg)
    w2 = w2_gaussian_diag(f_spec, g_spec)
    report = {'config': echo_config(n, cfg),
              'f': f_spec.to_params(), 'g': g_spec.to_params(),
              'norm': result.value, 'w2': w2, 'gap': abs(result.value - w2)}
    report.update(result.to_dict())
    return report


class ScalingResult(object):
    def __init__(self, rows: List[Tuple[float, float, float, float]], slope: float, config: Dict):
        # rows of (epsilon, norm, analytic_w2, abs_error)
        self.rows = rows
        self.slope = slope
        self.config = config

    def to_dict(self) -> Dict:
        return {'config': self.config, 'slope': self.slope,
                'rows': [dict(zip(('epsilon', 'norm', 'w2', 'abs_error'), row)) for row in self.rows]}


def _check_epsilons(epsilons: Sequence[float]):
    eps = np.asarray(epsilons, dtype=np.float64)
    if len(eps) < MIN_SCALING_POINTS:
        raise InvalidInputError('insufficient points: at least %d epsilons required, got %d' % (MIN_SCALING_POINTS, len(eps)))
    if not (eps > 0).all() or not (np.diff(eps) < 0).all():
        raise InvalidInputError('epsilons should be positive and strictly decreasing, got: %s' % eps.tolist())
    if eps[0] / eps[-1] < MIN_SCALING_SPAN:
        raise InvalidInputError('epsilons should span at least a factor %g, got: %g' % (MIN_SCALING_SPAN, eps[0] / eps[-1]))


def cmd_scaling(n=257, tau=1e-5, direction=DEFAULT_DIRECTION, epsilons=DEFAULT_EPSILONS,
                tol=None, max_iter=None, floor=None) -> ScalingResult:
    """
    |W2 - norm| along a fixed perturbation of the reference Gaussian, one solve per epsilon,
    and the least squares slope of log |W2 - norm| against log epsilon.
    """
    _check_epsilons(epsilons)
    direction = np.asarray(direction, dtype=np.float64)
    if direction.shape != (4,) or not np.linalg.norm(direction) > 0:
        raise InvalidInputError('direction should be a nonzero 4-vector, got: %s' % direction.tolist())
    direction = direction / np.linalg.norm(direction)

    cfg = solver_config(tau, tol, max_iter, floor)
    f_spec, _, _ = gaussian_triple()
    f = make_gaussian_grid(f_spec, n)
    pot = build_potential(f, tau=cfg.tau, floor=cfg.floor)
    rows = []
    for eps in epsilons:
        step = direction * eps
        g_spec = f_spec.shifted(step[:2], step[2:])
        result = weighted_hm1_norm(f, make_gaussian_grid(g_spec, n), cfg, pot=pot)
        if not result.converged:
            raise NonConvergenceError('solve at epsilon=%s did not converge, residual: %s' % (eps, result.residual))
        w2 = w2_gaussian_diag(f_spec, g_spec)
        rows.append((float(eps), result.value, w2, abs(w2 - result.value)))

    slope = loglog_slope([row[0] for row in rows], [row[3] for row in rows])
    config = echo_config(n, cfg, direction=direction.tolist(), epsilons=[float(e) for e in epsilons])
    return ScalingResult(rows, slope, config)


def cmd_embed_demo(n=257, tau=1e-3, degree=DEFAULT_DEGREE, tol=None, max_iter=None, floor=None, h_equals_g=False) -> Dict:
    """
    Embeds g and h with respect to f and compares the L^2 distance of the embedded fields
    to the analytic W2(g, h) and to the solver norm of (g - h) / f_tau.
    """
    cfg = solver_config(tau, tol, max_iter, floor)
    f_spec, g_spec, h_spec = gaussian_triple()
    if h_equals_g:
        h_spec = g_spec
    f = make_gaussian_grid(f_spec, n)
    g = make_gaussian_grid(g_spec, n)
    h = make_gaussian_grid(h_spec, n)
    pot = build_potential(f, tau=cfg.tau, floor=cfg.floor)

    phi_g = embed(f, g, cfg, degree=degree, pot=pot)
    phi_h = embed(f, h, cfg, degree=degree, pot=pot)
    distance = embedding_distance(phi_g, phi_h)
    w2 = w2_gaussian_diag(g_spec, h_spec)
    solver = witten_norm(pot, g.values - h.values, cfg)
    isometry_gap = abs(distance - solver.value) / solver.value if solver.value > 0 else abs(distance)
    return {'config': echo_config(n, cfg, degree=degree, spectral_bound=phi_g.spectral_bound),
            'distance': distance, 'w2': w2, 'gap': abs(distance - w2),
            'solver_norm': solver.value, 'isometry_gap': isometry_gap,
            'norm_g': phi_g.norm(), 'norm_h': phi_h.norm(), 'converged': solver.converged}
