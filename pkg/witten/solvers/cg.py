__author__ = 'max'

from typing import Callable, Optional, Tuple
import torch

from witten.errors import ConsistencyError
from witten.utils import dot, norm


def _deflate(x: torch.Tensor, w: Optional[torch.Tensor]) -> torch.Tensor:
    if w is None:
        return x
    return x - dot(x, w) * w


def conjugate_gradient(apply: Callable[[torch.Tensor], torch.Tensor], b: torch.Tensor,
                       tol: float, max_iter: int,
                       deflation: Optional[torch.Tensor] = None) -> Tuple[torch.Tensor, int, float, bool]:
    """
    Plain conjugate gradient for a symmetric positive semidefinite operator acting on [n, n] tensors.
    If a unit deflation direction w spanning the null space is given, the right-hand side,
    the iterate and the residual are kept orthogonal to w at every step.

    Args:
        apply: Callable
            the operator, Tensor [n, n] -> Tensor [n, n]
        b: Tensor [n, n]
            right-hand side
        tol: float
            target of the relative residual ||b - Ax|| / ||b||
        max_iter: int
            maximum number of iterations
        deflation: Tensor [n, n] or None
            unit vector with A w = 0

    Returns: x: Tensor, iterations: int, residual: float, converged: bool
        x is the iterate with the smallest residual seen; residual is its true relative residual.
    """
    assert max_iter >= 1
    b = _deflate(b, deflation)
    x = torch.zeros_like(b)
    b_norm = norm(b).item()
    if b_norm == 0:
        return x, 0, 0., True

    r = b.clone()
    p = r.clone()
    rr = dot(r, r).item()
    best_x = x
    best_res = 1.
    converged = False
    iters = 0
    while iters < max_iter:
        iters += 1
        q = _deflate(apply(p), deflation)
        pq = dot(p, q).item()
        if not pq > 0:
            raise ConsistencyError('operator is not positive on the search direction, <p, Ap> = %s' % pq)
        alpha = rr / pq
        x = _deflate(x + p * alpha, deflation)
        r = _deflate(r - q * alpha, deflation)
        rr_new = dot(r, r).item()
        res = rr_new ** 0.5 / b_norm
        if res < best_res:
            best_res = res
            best_x = x
        if res <= tol:
            converged = True
            break
        p = r + p * (rr_new / rr)
        rr = rr_new

    true_res = norm(b - _deflate(apply(best_x), deflation)).item() / b_norm
    return best_x, iters, true_res, converged
