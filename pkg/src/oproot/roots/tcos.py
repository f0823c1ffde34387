"""Square roots of T_cos = (S + S*)/2 through the Chebyshev-U spectral model.

With ``u_n`` the Chebyshev polynomials of the second kind and
``rho(x) = sqrt(1 - x^2)``, every root has entries
``(2/pi) int_{-1}^{1} phi(x) u_n(x) u_m(x) rho(x) dx`` for some ``phi`` with
``phi(x)^2 = x``.
"""
from __future__ import annotations

from typing import Callable

import numpy as np

from ..matrixcore import as_matrix
from ..quadrature import gauss_legendre

DOUBLING_TOL = 1e-6


def principal_phi(x: np.ndarray) -> np.ndarray:
    """sqrt(x) for x >= 0 and i sqrt(-x) for x < 0."""
    return np.where(x >= 0, np.sqrt(np.abs(x)) + 0j, 1j * np.sqrt(np.abs(x)))


def flipped_phi(x: np.ndarray) -> np.ndarray:
    """The other sign on the negative half-line: -i sqrt(-x)."""
    return np.where(x >= 0, principal_phi(x), -principal_phi(x))


BRANCHES: dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "principal": principal_phi,
    "flipped": flipped_phi,
    "identity": lambda x: x + 0j,  # phi(x) = x reproduces T_cos itself
}


def _half_nodes(q: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes/weights for int_{-1}^{1} g(x) rho(x) dx, split at 0.

    On each half ``x = +-sin(pi v / 2)`` so ``rho dx = (pi/2) cos^2(pi v/2) dv``
    is smooth at the endpoints +-1; the kink of phi at 0 sits on a panel edge.
    """
    v, wv = gauss_legendre(0.0, 1.0, q // 2)
    x = np.sin(0.5 * np.pi * v)
    w = wv * 0.5 * np.pi * np.cos(0.5 * np.pi * v) ** 2
    nodes = np.concatenate([-x[::-1], x])
    weights = np.concatenate([w[::-1], w])
    return nodes, weights


def chebyshev_u(n: int, x: np.ndarray) -> np.ndarray:
    """Rows u_0..u_(n-1) at ``x`` by the three-term recurrence."""
    out = np.empty((n, x.size))
    out[0] = 1.0
    if n > 1:
        out[1] = 2.0 * x
    for k in range(1, n - 1):
        out[k + 1] = 2.0 * x * out[k] - out[k - 1]
    return out


def _tcos_entries(n: int, phi, q: int) -> np.ndarray:
    x, w = _half_nodes(q)
    u = chebyshev_u(n, x)
    return (2.0 / np.pi) * (u * (phi(x) * w)) @ u.T


def tcos_root(n: int, branch: str = "principal", quad_nodes: int = 4096, phi=None) -> np.ndarray:
    """N x N section of ``F M_phi F*``.

    ``phi`` overrides ``branch`` (any callable on [-1, 1]).  The result is
    checked against a half-resolution evaluation.
    """
    if quad_nodes < 8 * n:
        raise ValueError(f"quad_nodes must be >= 8n = {8 * n}")
    fn = phi if phi is not None else BRANCHES[branch]
    b = _tcos_entries(n, fn, quad_nodes)
    coarse = _tcos_entries(n, fn, quad_nodes // 2)
    err = float(np.max(np.abs(b - coarse)))
    if err > DOUBLING_TOL:
        raise ValueError(f"quadrature not converged: doubling difference {err:.2e}")
    # integrand is symmetric in (m, n); enforce it bit for bit
    b = 0.5 * (b + b.T)
    return as_matrix(b, copy=False)
