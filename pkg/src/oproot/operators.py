"""Finite sections of the classical operators.

Sequence-space operators (shift powers, the Toeplitz matrix of cos(theta), the
Hilbert and Cesaro matrices) are truncated to their leading N x N block.  The
Volterra operator on L^2[0, 1] is discretised by midpoint collocation; its
Cayley-type transform stands in for the compressed shift on the model space
of the atomic inner function, to which it is unitarily equivalent.
"""
from __future__ import annotations

import numpy as np
from scipy.linalg import solve_triangular

from .matrixcore import as_matrix


def shift_pow_matrix(n: int, p: int = 1) -> np.ndarray:
    """Ones on the ``p``-th subdiagonal."""
    if p < 1:
        raise ValueError("p must be >= 1")
    return as_matrix(np.eye(n, k=-p))


def tcos_matrix(n: int) -> np.ndarray:
    """Tridiagonal 1/2 off-diagonal matrix of (S + S*)/2."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return as_matrix(0.5 * (np.eye(n, k=1) + np.eye(n, k=-1)))


def hilbert_matrix(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("n must be >= 1")
    idx = np.arange(n)
    return as_matrix(1.0 / (idx[:, None] + idx[None, :] + 1.0))


def cesaro_matrix(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("n must be >= 1")
    return as_matrix(np.tril(np.ones((n, n))) / np.arange(1, n + 1)[:, None])


def volterra_matrix(m: int) -> np.ndarray:
    """Midpoint collocation of (Vf)(x) = int_0^x f on ``m`` cells.

    Row ``i`` integrates a cellwise-constant ``f`` up to the midpoint
    ``x_i = (i + 1/2)h``: full cells weigh ``h``, the own cell ``h/2``.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    h = 1.0 / m
    return as_matrix(np.tril(np.full((m, m), h), -1) + 0.5 * h * np.eye(m))


def cayley_volterra(v: np.ndarray) -> np.ndarray:
    """``(I - V)(I + V)^-1`` by forward substitution.

    The two factors commute, so the triangular solve ``(I + V) M = I - V``
    gives the same matrix.
    """
    v = np.asarray(v)
    n = v.shape[0]
    eye = np.eye(n)
    lhs = eye + v
    if not np.allclose(lhs, np.tril(lhs)):
        raise ValueError("expected a lower-triangular Volterra matrix")
    if np.any(np.diag(lhs) == 0):
        raise np.linalg.LinAlgError("I + V is singular")
    return as_matrix(solve_triangular(lhs, eye - v, lower=True))


BUILDERS = {
    "shift2": lambda n: shift_pow_matrix(n, 2),
    "tcos": tcos_matrix,
    "hilbert": hilbert_matrix,
    "cesaro": cesaro_matrix,
    "volterra": volterra_matrix,
    "cayley": lambda n: cayley_volterra(volterra_matrix(n)),
}
