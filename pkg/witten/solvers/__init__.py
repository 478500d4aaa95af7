__author__ = 'max'

from witten.solvers.cg import conjugate_gradient
from witten.solvers.hm1 import SolverConfig, NormResult, DEFAULT_TOL
from witten.solvers.hm1 import apply_A, deflation_vector, solve_witten, witten_norm, weighted_hm1_norm, unweighted_hm1_norm
