"""Square roots of the Hilbert matrix through a Laguerre-Lebedev spectral model.

``w_n = U Q L_n`` where ``L_n`` are the Laguerre polynomials, ``Q`` is
multiplication by ``e^(-x/2)`` and ``U`` is the Lebedev (Kontorovich-Lebedev)
transform

    (U f)(tau) = int_0^inf sqrt(2 tau sinh(pi tau)) / (pi sqrt(x)) K_{i tau}(x/2) f(x) dx.

In this basis the Hilbert matrix becomes multiplication by
``h(tau) = pi / cosh(pi tau)``, and its roots are ``[int g w_m w_n dtau]`` with
``g^2 = h``.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..io import worker_count
from ..matrixcore import as_matrix
from ..quadrature import GridMesh, composite_gauss_legendre, tau_mesh

GRAM_TOL = 1e-3
_EXP_FLOOR = 37.0  # e^-37 < 1e-16


def bessel_k_imag(tau: float, x: float, t_max: float | None = None, nodes: int = 2048) -> float:
    """K_{i tau}(x) = int_0^inf e^(-x cosh t) cos(tau t) dt by composite Gauss-Legendre."""
    if x <= 0:
        raise ValueError("x must be positive")
    if t_max is None:
        t_max = math.acosh(max(_EXP_FLOOR / x, 1.5))
    panels = max(1, nodes // 16)
    t, w = composite_gauss_legendre(np.linspace(0.0, t_max, panels + 1), 16)
    return float(np.dot(np.exp(-x * np.cosh(t)) * np.cos(tau * t), w))


def _t_grid(a_min: float) -> tuple[np.ndarray, np.ndarray]:
    # fine panels near t = 0 resolve e^(-a cosh t) for large a; the tail
    # reaches the point where the integrand drops below 1e-16 for the smallest a
    t_max = math.acosh(max(_EXP_FLOOR / a_min, 1.5))
    edges = np.concatenate([np.linspace(0.0, 1.0, 41), np.arange(1.25, t_max + 0.25, 0.25)])
    return composite_gauss_legendre(edges, 16)


def bessel_k_table(taus: np.ndarray, xs: np.ndarray) -> np.ndarray:
    """Matrix ``K[k, j] = K_{i taus[k]}(xs[j])`` on a shared t-grid."""
    taus = np.asarray(taus, dtype=float)
    xs = np.asarray(xs, dtype=float)
    if np.any(xs <= 0):
        raise ValueError("x must be positive")
    t, wt = _t_grid(float(xs.min()))
    cos_tab = np.cos(np.outer(taus, t)) * wt
    cosh_t = np.cosh(t)

    def chunk(idx):
        return cos_tab @ np.exp(-np.outer(cosh_t, xs[idx]))

    parts = np.array_split(np.arange(xs.size), max(1, min(worker_count(), 8)))
    with ThreadPoolExecutor(max_workers=len(parts)) as pool:
        cols = list(pool.map(chunk, parts))
    return np.concatenate(cols, axis=1)


def laguerre_functions(n_max: int, x: np.ndarray) -> np.ndarray:
    """Rows ``e^(-x/2) L_n(x)``, n = 0..n_max, by the three-term recurrence."""
    out = np.empty((n_max + 1, x.size))
    out[0] = np.exp(-0.5 * x)
    if n_max >= 1:
        out[1] = (1.0 - x) * out[0]
    for n in range(1, n_max):
        out[n + 1] = ((2 * n + 1 - x) * out[n] - n * out[n - 1]) / (n + 1)
    return out


def hilbert_symbol(tau: np.ndarray) -> np.ndarray:
    return np.pi / np.cosh(np.pi * np.asarray(tau))


@dataclass(frozen=True, eq=False)
class LebedevBasis:
    tau_mesh: GridMesh
    samples: np.ndarray  # samples[n, k] = w_n(tau_k)

    @property
    def n_max(self) -> int:
        return self.samples.shape[0] - 1

    def moment(self, weight=None) -> np.ndarray:
        """``[int weight(tau) w_m w_n dtau]``; the Gram matrix when ``weight`` is None."""
        wt = self.tau_mesh.weights if weight is None else self.tau_mesh.weights * weight
        return (self.samples * wt) @ self.samples.T

    def gram(self) -> np.ndarray:
        return self.moment()


def lebedev_basis(
    n_max: int,
    mesh: GridMesh | None = None,
    x_nodes: int | None = None,
    gram_block: int = 5,
    gram_tol: float = GRAM_TOL,
) -> LebedevBasis:
    """Sample ``w_0..w_n_max`` on the tau mesh.

    The x-integral is taken in ``x = s^2`` (removing the ``1/sqrt(x)``
    endpoint singularity) on geometrically graded panels; ``x_nodes`` is the
    number of s-nodes.  Only the leading ``gram_block`` functions are
    required to be orthonormal to ``gram_tol``: higher ``w_n`` carry mass
    beyond the end of the tau mesh, which only the h-weighted integrals can
    afford to ignore.
    """
    mesh = tau_mesh() if mesh is None else mesh
    per_panel = 16
    if x_nodes is None:
        x_nodes = per_panel * (60 + n_max // 2)
    panels = max(8, x_nodes // per_panel)
    s_max = math.sqrt(2.0 * (_EXP_FLOOR + 10.0))
    edges = np.concatenate([[0.0], np.geomspace(1e-4, s_max, panels)])
    s, ws = composite_gauss_legendre(edges, per_panel)

    tau = mesh.nodes
    kern = bessel_k_table(tau, 0.5 * s * s)
    pref = 2.0 * np.sqrt(2.0 * tau * np.sinh(np.pi * tau)) / np.pi
    lag = laguerre_functions(n_max, s * s)
    samples = ((pref[:, None] * kern) @ (lag * ws).T).T

    basis = LebedevBasis(mesh, samples)
    blk = min(gram_block, n_max + 1)
    dev = np.abs(basis.gram()[:blk, :blk] - np.eye(blk))
    if dev.max() > gram_tol:
        m, n = np.unravel_index(np.argmax(dev), dev.shape)
        raise ValueError(f"Gram deviation {dev[m, n]:.2e} at (m, n) = ({m}, {n})")
    return basis


def hilbert_root(basis: LebedevBasis, sign_flip_above: float | None = None) -> np.ndarray:
    """``[int g w_m w_n dtau]`` with ``g = sqrt(h)``, negated for tau above the flip point."""
    tau = basis.tau_mesh.nodes
    g = np.sqrt(hilbert_symbol(tau))
    if sign_flip_above is not None:
        g = np.where(tau > sign_flip_above, -g, g)
    t = basis.moment(g)
    return as_matrix(0.5 * (t + t.T), copy=False)
