__author__ = 'max'

from witten.spectral.dct import dct_forward, dct_inverse, eigenvalues, EIGENVALUE_CONVENTION
from witten.spectral.operators import apply_fractional_laplacian, heat_semigroup, project_constant, laplacian, gradient
