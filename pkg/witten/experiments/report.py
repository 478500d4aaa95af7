__author__ = 'max'

from typing import Dict, Optional

from witten.spectral import EIGENVALUE_CONVENTION
from witten.solvers.hm1 import SolverConfig


def echo_config(n: int, cfg: SolverConfig, **extra) -> Dict:
    """the effective configuration every report carries"""
    config = {'n': n, 'eigenvalue_convention': EIGENVALUE_CONVENTION}
    config.update(cfg.to_params())
    config.update(extra)
    return config


def solver_config(tau: float, tol: Optional[float] = None, max_iter: Optional[int] = None, floor: Optional[float] = None) -> SolverConfig:
    params = {'tau': tau}
    if tol is not None:
        params['tol'] = tol
    if max_iter is not None:
        params['max_iter'] = max_iter
    if floor is not None:
        params['floor'] = floor
    return SolverConfig.from_params(params)
