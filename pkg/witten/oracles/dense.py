__author__ = 'max'

import math
import numpy as np
import scipy.linalg
import torch

from witten.errors import InvalidInputError, ConsistencyError
from witten.grid.density import DensityGrid, integrate, inner_product
from witten.potential import build_potential, DEFAULT_FLOOR
from witten.spectral import dct_forward, dct_inverse, apply_fractional_laplacian
from witten.solvers.hm1 import apply_A, deflation_vector, MASS_DEFECT_TOL, NEGATIVE_PAIRING_TOL
from witten.utils import DTYPE, check_same_shape, dot

MAX_DENSE_SIZE = 33


def dense_norm_oracle(f: DensityGrid, g: DensityGrid, tau: float, floor=DEFAULT_FLOOR) -> float:
    """
    Brute-force counterpart of weighted_hm1_norm for small grids: A is assembled as a dense
    n^2 x n^2 matrix and A Psi = U is solved directly, the deflation direction w pinned by
    the bordered system [[A, w], [w^T, 0]].
    """
    check_same_shape(f.values, g.values)
    n = f.n
    if n > MAX_DENSE_SIZE:
        raise InvalidInputError('dense oracle supports n <= %d, got: %s' % (MAX_DENSE_SIZE, n))
    diff = f.values - g.values
    mass_defect = abs(integrate(diff))
    if mass_defect > MASS_DEFECT_TOL:
        raise InvalidInputError('densities should have equal mass, defect: %s' % mass_defect)

    pot = build_potential(f, tau=tau, floor=floor)
    w = deflation_vector(pot)
    u_tilde = diff / pot.sqrt_f_tau
    rhs = apply_fractional_laplacian(dct_forward(u_tilde), -0.5)
    rhs = rhs - dot(rhs, w) * w

    size = n * n
    # row i holds A e_i; A is symmetric
    basis = torch.eye(size, dtype=DTYPE).view(size, n, n)
    matrix = apply_A(pot, basis).view(size, size).numpy()
    matrix = 0.5 * (matrix + matrix.T)

    bordered = np.zeros((size + 1, size + 1))
    bordered[:size, :size] = matrix
    bordered[:size, size] = w.reshape(-1).numpy()
    bordered[size, :size] = w.reshape(-1).numpy()
    b = np.zeros(size + 1)
    b[:size] = rhs.reshape(-1).numpy()
    sol = scipy.linalg.solve(bordered, b, assume_a='sym')

    Psi = torch.from_numpy(sol[:size]).view(n, n)
    psi = dct_inverse(apply_fractional_laplacian(Psi, -0.5))
    pairing = inner_product(u_tilde, psi)
    if pairing < -NEGATIVE_PAIRING_TOL:
        raise ConsistencyError('negative energy pairing: %s' % pairing)
    return math.sqrt(max(pairing, 0.))
