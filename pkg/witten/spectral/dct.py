__author__ = 'max'

import math
import torch

from witten.utils import DTYPE, check_field, check_grid_size

# Eigenvalues are pi^2 (k1^2 + k2^2), the exact Neumann eigenvalues of the cosine modes on [0,1]^2.
EIGENVALUE_CONVENTION = 'pi2'


def basis_norms(n: int) -> torch.Tensor:
    """
    Normalisation c_k of the discrete cosine modes so that c_k cos(pi k x) has unit
    trapezoid norm: c_0 = c_{n-1} = 1, sqrt(2) otherwise.
    """
    c = torch.full((n,), math.sqrt(2.), dtype=DTYPE)
    c[0] = 1.
    c[-1] = 1.
    return c


def end_weights(n: int) -> torch.Tensor:
    e = torch.ones(n, dtype=DTYPE)
    e[0] = 0.5
    e[-1] = 0.5
    return e


def eigenvalues(n: int) -> torch.Tensor:
    """
    Returns: Tensor [n, n]
        lambda[k1, k2] = pi^2 (k1^2 + k2^2)
    """
    check_grid_size(n)
    k = torch.arange(n, dtype=DTYPE).mul(math.pi).pow(2)
    return k.unsqueeze(1) + k.unsqueeze(0)


def _along(x: torch.Tensor, dim: int, fn) -> torch.Tensor:
    return fn(x.transpose(dim, -1)).transpose(dim, -1).contiguous()


def _dct1(x: torch.Tensor) -> torch.Tensor:
    # torch has no dct; scipy.fft.dct(type=1) would round-trip through numpy on every solver step
    # y_k = x_0 + (-1)^k x_N + 2 sum_{i=1}^{N-1} x_i cos(pi k i / N), via the even extension of length 2N
    ext = torch.cat([x, x[..., 1:-1].flip(-1)], dim=-1)
    return torch.fft.rfft(ext, dim=-1).real


def _dst1_synthesis(b: torch.Tensor) -> torch.Tensor:
    # x_i = sum_k b_k sin(pi k i / N), via the odd extension of length 2N
    ext = torch.cat([b, b[..., 1:-1].flip(-1).neg()], dim=-1)
    y = torch.fft.ifft(ext, dim=-1).imag.mul(ext.size(-1) / 2.)
    return y[..., :b.size(-1)]


def cos_analysis(x: torch.Tensor, dim: int) -> torch.Tensor:
    """orthonormal cosine coefficients along one axis"""
    n = x.size(dim)
    scale = basis_norms(n).div(2. * (n - 1))
    return _along(x, dim, lambda t: _dct1(t) * scale)


def cos_synthesis(beta: torch.Tensor, dim: int) -> torch.Tensor:
    """sum_k beta_k cos(pi k x_i) along one axis"""
    n = beta.size(dim)
    e = end_weights(n)
    return _along(beta, dim, lambda t: _dct1(t / e).mul(0.5))


def sin_synthesis(beta: torch.Tensor, dim: int) -> torch.Tensor:
    """sum_k beta_k sin(pi k x_i) along one axis"""
    return _along(beta, dim, _dst1_synthesis)


def dct_forward(field: torch.Tensor) -> torch.Tensor:
    """
    Coefficients of the orthonormal double cosine expansion interpolating the samples.

    Args:
        field: Tensor [..., n, n]

    Returns: Tensor [..., n, n]
        coeffs[k1, k2], the coefficient of c_k1 c_k2 cos(pi k1 x1) cos(pi k2 x2)
    """
    check_field(field)
    return cos_analysis(cos_analysis(field, -2), -1)


def dct_inverse(coeffs: torch.Tensor) -> torch.Tensor:
    check_field(coeffs)
    n = coeffs.size(-1)
    c = basis_norms(n)
    out = cos_synthesis(coeffs * c, -1)
    return cos_synthesis(out * c.unsqueeze(1), -2)
