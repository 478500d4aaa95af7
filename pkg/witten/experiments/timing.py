__author__ = 'max'

import time
from typing import Dict
import numpy as np

from witten.errors import InvalidInputError
from witten.data.densities import StripedDensity
from witten.solvers.hm1 import weighted_hm1_norm
from witten.experiments.report import echo_config, solver_config

MIN_REPEATS = 8
# translation of the striped density timed against the unshifted one
TIMING_SHIFT = (5e-3, 0.)


def cmd_timing(n=129, tau=1e-2, repeats=128, tol=None, max_iter=None, floor=None) -> Dict:
    """wall time of complete weighted_hm1_norm calls, potential construction included"""
    if repeats < MIN_REPEATS:
        raise InvalidInputError('at least %d repeats required, got: %s' % (MIN_REPEATS, repeats))
    cfg = solver_config(tau, tol, max_iter, floor)
    base = StripedDensity()
    f = base.grid(n)
    g = base.translated(TIMING_SHIFT).grid(n)

    times = []
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = weighted_hm1_norm(f, g, cfg)
        times.append(time.perf_counter() - start)
    times = np.asarray(times)
    report = {'config': echo_config(n, cfg, repeats=repeats),
              'mean_time': float(times.mean()), 'median_time': float(np.median(times)),
              'min_time': float(times.min()), 'max_time': float(times.max())}
    report.update(result.to_dict())
    return report
