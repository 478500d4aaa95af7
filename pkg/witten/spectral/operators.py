__author__ = 'max'

import math
from typing import Tuple
import torch

from witten.errors import InvalidInputError
from witten.utils import DTYPE
from witten.spectral.dct import eigenvalues, basis_norms, dct_forward, cos_synthesis, sin_synthesis


def apply_fractional_laplacian(coeffs: torch.Tensor, gamma: float) -> torch.Tensor:
    """
    (-Delta)^gamma in the cosine basis. The zero mode is passed through unchanged so the
    operator is invertible for every gamma.

    Args:
        coeffs: Tensor [..., n, n]
        gamma: float

    Returns: Tensor [..., n, n]
    """
    lam = eigenvalues(coeffs.size(-1))
    lam[0, 0] = 1.
    return coeffs * lam.pow(gamma)


def heat_semigroup(coeffs: torch.Tensor, tau: float) -> torch.Tensor:
    """e^{tau Delta}: mode k scaled by exp(-tau lambda_k)"""
    if not tau >= 0:
        raise InvalidInputError('heat time should be nonnegative, got: %s' % tau)
    if tau == 0:
        return coeffs.clone()
    lam = eigenvalues(coeffs.size(-1))
    return coeffs * lam.mul(-tau).exp()


def project_constant(coeffs: torch.Tensor) -> torch.Tensor:
    """P_1, the projection onto constants: keeps the (0, 0) coefficient only"""
    out = torch.zeros_like(coeffs)
    out[..., 0, 0] = coeffs[..., 0, 0]
    return out


def laplacian(coeffs: torch.Tensor) -> torch.Tensor:
    """Delta in the cosine basis, the zero mode is mapped to 0"""
    return coeffs * eigenvalues(coeffs.size(-1)).neg()


def gradient(field: torch.Tensor) -> Tuple[torch.Tensor, torch.Tensor]:
    """
    Spectral gradient of a field: the cosine series is differentiated term by term,
    the differentiated axis becoming a sine series.

    Args:
        field: Tensor [..., n, n]

    Returns: d1: Tensor [..., n, n], d2: Tensor [..., n, n]
    """
    alpha = dct_forward(field)
    n = field.size(-1)
    c = basis_norms(n)
    # derivative of c_k cos(pi k x) is -pi k c_k sin(pi k x)
    dc = torch.arange(n, dtype=DTYPE).mul(-math.pi) * c

    d1 = sin_synthesis(alpha * dc.unsqueeze(1), -2)
    d1 = cos_synthesis(d1 * c, -1)

    d2 = cos_synthesis(alpha * c.unsqueeze(1), -2)
    d2 = sin_synthesis(d2 * dc, -1)
    return d1, d2
