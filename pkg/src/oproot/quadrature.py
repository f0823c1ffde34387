"""Node/weight meshes for the discretisations used across the package."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss


@dataclass(frozen=True, eq=False)
class GridMesh:
    """Quadrature nodes and positive weights; ``kind`` records what they discretise."""

    nodes: np.ndarray
    weights: np.ndarray
    kind: str

    def __post_init__(self):
        x = np.asarray(self.nodes, dtype=float)
        w = np.asarray(self.weights, dtype=float)
        if x.shape != w.shape or x.ndim != 1:
            raise ValueError("nodes and weights must be 1-d and of equal length")
        if np.any(np.diff(x) <= 0):
            raise ValueError("nodes must be strictly increasing")
        if np.any(w <= 0):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "nodes", x)
        object.__setattr__(self, "weights", w)

    def __len__(self) -> int:
        return self.nodes.size

    def integrate(self, values) -> np.ndarray:
        """Quadrature along the last axis of ``values``."""
        return np.asarray(values) @ self.weights


@lru_cache(maxsize=64)
def _gl(n: int) -> tuple[np.ndarray, np.ndarray]:
    return leggauss(n)


def gauss_legendre(a: float, b: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = _gl(n)
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w


def composite_gauss_legendre(edges, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre with ``n`` nodes on each panel ``[edges[i], edges[i+1]]``."""
    edges = np.asarray(edges, dtype=float)
    x, w = _gl(n)
    lo, hi = edges[:-1, None], edges[1:, None]
    nodes = lo + 0.5 * (hi - lo) * (x + 1.0)
    weights = 0.5 * (hi - lo) * w
    return nodes.ravel(), weights.ravel()


def uniform_mesh(m: int) -> GridMesh:
    """Midpoints of ``m`` equal cells of [0, 1]; weights are the cell width."""
    h = 1.0 / m
    return GridMesh((np.arange(m) + 0.5) * h, np.full(m, h), "uniform01")


def tau_mesh(lo: float = 1e-3, hi: float = 16.0, panels: int = 80, per_panel: int = 10) -> GridMesh:
    x, w = composite_gauss_legendre(np.linspace(lo, hi, panels + 1), per_panel)
    return GridMesh(x, w, "tau_halfline")
