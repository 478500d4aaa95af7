__author__ = 'max'

import os
import json
import math
from typing import Dict, List, Optional
import numpy as np

from witten.errors import InvalidInputError, NonConvergenceError
from witten.data.densities import AnalyticDensity, GaussianDensity
from witten.grid.density import DensityGrid, l2_distance
from witten.potential import WittenPotential, build_potential
from witten.solvers.hm1 import SolverConfig, weighted_hm1_norm, unweighted_hm1_norm
from witten.experiments.gaussian import REFERENCE_MEAN, REFERENCE_SIGMA
from witten.experiments.report import echo_config, solver_config
from witten.parallel import parallel_apply

METRICS = ('witten', 'sobolev', 'euclid')
MIN_DIRECTIONS = 16
CSV_HEADER = 'theta,radius'


class CircleSetResult(object):
    """
    Image of the circle of directions under one metric: for direction theta the radius is the
    distance between f and its perturbation by epsilon (cos theta, sin theta).
    """
    def __init__(self, metric: str, epsilon: float, thetas: np.ndarray, radii: np.ndarray):
        if metric not in METRICS:
            raise InvalidInputError('unknown metric: %s' % metric)
        self.metric = metric
        self.epsilon = epsilon
        self.thetas = np.asarray(thetas, dtype=np.float64)
        self.radii = np.asarray(radii, dtype=np.float64)

    @property
    def ratio(self) -> float:
        """max/min radius, 1 for a circle"""
        return float(self.radii.max() / self.radii.min())

    def to_csv(self, path: str):
        np.savetxt(path, np.stack([self.thetas, self.radii], axis=1), delimiter=',',
                   header=CSV_HEADER, comments='', fmt='%.17g')

    def summary(self) -> Dict:
        return {'metric': self.metric, 'epsilon': self.epsilon, 'directions': len(self.thetas),
                'max_radius': float(self.radii.max()), 'min_radius': float(self.radii.min()), 'ratio': self.ratio}


def read_circle_csv(path: str, metric: str, epsilon: float) -> CircleSetResult:
    with open(path, 'r') as f:
        header = f.readline().strip()
    if header != CSV_HEADER:
        raise InvalidInputError('unexpected circle csv header in %s: %s' % (path, header))
    data = np.loadtxt(path, delimiter=',', skiprows=1, ndmin=2)
    return CircleSetResult(metric, epsilon, data[:, 0], data[:, 1])


def _base_density(density: str, params: Optional[Dict]) -> AnalyticDensity:
    params = dict(params or {})
    if density == 'gaussian':
        params.setdefault('mean', REFERENCE_MEAN)
        params.setdefault('sigma', REFERENCE_SIGMA)
    return AnalyticDensity.by_name(density).from_params(params)


def run_circle_directions(f: DensityGrid, perturbations: List[AnalyticDensity], cfg: SolverConfig,
                          pot: Optional[WittenPotential] = None, max_threads=None) -> np.ndarray:
    """
    Distances from f to every perturbed density, one worker thread per direction.

    Returns: ndarray [d, 3]
        witten, sobolev and euclid distance per direction
    """
    if pot is None:
        pot = build_potential(f, tau=cfg.tau, floor=cfg.floor)

    def distances(density):
        g = density.grid(f.n)
        witten = weighted_hm1_norm(f, g, cfg, pot=pot)
        if not witten.converged:
            raise NonConvergenceError('solve for %s did not converge, residual: %s' % (density, witten.residual))
        return witten.value, unweighted_hm1_norm(f, g), l2_distance(f, g)

    return np.array(parallel_apply(distances, perturbations, max_threads=max_threads))


def cmd_circle(kind='translate', density='striped', epsilon=5e-3, d=32, n=257, tau=None,
               tol=None, max_iter=None, floor=None, params=None, out=None, max_threads=None) -> Dict[str, CircleSetResult]:
    """
    Perturbs f along d unit directions v by epsilon v, either translating it (translate)
    or changing the standard deviations of a Gaussian (variance), and records the
    witten, sobolev and euclid distances per direction.

    Args:
        kind: str
            'translate' or 'variance'
        density: str
            'gaussian' or 'striped'
        epsilon: float
            radius of the perturbation
        d: int
            number of directions, at least 16
        out: str or None
            directory receiving one csv per metric and a summary json

    Returns: Dict[str, CircleSetResult]
    """
    if kind not in ('translate', 'variance'):
        raise InvalidInputError('unknown circle experiment: %s' % kind)
    if kind == 'variance' and density != 'gaussian':
        raise InvalidInputError('variance experiment requires a gaussian density, got: %s' % density)
    if d < MIN_DIRECTIONS:
        raise InvalidInputError('at least %d directions required, got: %s' % (MIN_DIRECTIONS, d))
    if not epsilon > 0:
        raise InvalidInputError('epsilon should be positive, got: %s' % epsilon)
    if tau is None:
        tau = 1e-2 if density == 'striped' else 1e-3

    cfg = solver_config(tau, tol, max_iter, floor)
    base = _base_density(density, params)
    f = base.grid(n)
    pot = build_potential(f, tau=cfg.tau, floor=cfg.floor)
    thetas = np.arange(d) * (2. * math.pi / d)

    def perturbed(theta):
        v = epsilon * np.array([math.cos(theta), math.sin(theta)])
        if kind == 'translate':
            return base.translated(v)
        assert isinstance(base, GaussianDensity)
        return GaussianDensity(base.spec.mean, base.spec.sigma + v)

    rows = run_circle_directions(f, [perturbed(theta) for theta in thetas], cfg, pot=pot, max_threads=max_threads)
    results = {metric: CircleSetResult(metric, epsilon, thetas, rows[:, i]) for i, metric in enumerate(METRICS)}

    if out is not None:
        if not os.path.exists(out):
            os.makedirs(out)
        prefix = 'circle_{}_{}'.format(kind, density)
        for metric, result in results.items():
            result.to_csv(os.path.join(out, '{}_{}.csv'.format(prefix, metric)))
        summary = {'config': echo_config(n, cfg, kind=kind, density=density, epsilon=epsilon, directions=d),
                   'reference_radius': epsilon,
                   'sets': [result.summary() for result in results.values()]}
        with open(os.path.join(out, prefix + '.json'), 'w') as f_out:
            json.dump(summary, f_out, indent=2)
    return results
