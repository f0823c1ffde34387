"""Square roots of S^2 and the Toeplitz square-root decision.

Every root of S^2 is ``Q = W* U* [[z a, b], [z c, -z a]] U W`` with ``U`` a
constant 2x2 unitary and ``z a^2 + b c = 1``; ``W`` splits a function into
its even and odd parts, ``z^(2k) -> (z^k, 0)``, ``z^(2k+1) -> (0, z^k)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..matrixcore import as_matrix
from ..series import (
    PowerSeries,
    analytic_multiplier_matrix,
    series_mul,
    series_sqrt,
)

UNITARY_TOL = 1e-10
CONSTRAINT_TOL = 1e-8
SWAP = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)


@dataclass(frozen=True, eq=False)
class ShiftRootParams:
    a: PowerSeries
    b: PowerSeries
    c: PowerSeries
    U: np.ndarray = field(default_factory=lambda: np.eye(2, dtype=np.complex128))

    def __post_init__(self):
        u = np.array(self.U, dtype=np.complex128)
        if u.shape != (2, 2):
            raise ValueError("U must be 2x2")
        object.__setattr__(self, "U", u)

    def unitarity_residual(self) -> float:
        return float(np.max(np.abs(self.U.conj().T @ self.U - np.eye(2))))

    def constraint_residual(self, k: int) -> float:
        """max |coeff| of ``z a^2 + b c - 1`` through degree ``k``."""
        za2 = series_mul(self.a, self.a, k).times_z().truncate(k)
        lhs = za2 + series_mul(self.b, self.c, k)
        return (lhs - PowerSeries.constant(1.0)).max_abs(k)

    def degree(self) -> int:
        """Largest stored degree among a, b, c (the band half-width for polynomial symbols)."""
        return max(self.a.order, self.b.order, self.c.order)


def identity_unitary_params() -> ShiftRootParams:
    """a = 0, b = c = 1, U = I: ``Qg = z^3 g_e + g_o / z``."""
    one = PowerSeries.constant(1.0)
    return ShiftRootParams(PowerSeries.constant(0.0), one, one)


def swap_sqrt_params(k: int) -> ShiftRootParams:
    """a = 1, b = c = sqrt(1 - z) truncated at degree ``k``, U = swap."""
    r = series_sqrt(PowerSeries.poly([1.0, -1.0]), k)
    return ShiftRootParams(PowerSeries.constant(1.0), r, r, SWAP)


def swap_shift_params() -> ShiftRootParams:
    """a = 0, b = c = 1, U = swap: the shift itself."""
    one = PowerSeries.constant(1.0)
    return ShiftRootParams(PowerSeries.constant(0.0), one, one, SWAP)


def self_map_params(a: PowerSeries, k: int, U=None) -> ShiftRootParams:
    """b = c = sqrt(1 - z a^2) for a self-map ``a`` of the disc."""
    za2 = series_mul(a, a, k).times_z().truncate(k)
    r = series_sqrt(PowerSeries.constant(1.0) - za2, k)
    return ShiftRootParams(a, r, r, np.eye(2) if U is None else U)


def shift2_root(p: ShiftRootParams, n: int) -> np.ndarray:
    """N x N section of the square root of S^2 built from ``p``."""
    if n % 2:
        raise ValueError("n must be even")
    half = n // 2
    if p.unitarity_residual() > UNITARY_TOL:
        raise ValueError("U is not unitary")
    res = p.constraint_residual(half - 1)
    if res > CONSTRAINT_TOL:
        raise ValueError(f"z a^2 + b c = 1 violated: residual {res:.3e}")

    za = p.a.times_z()
    blocks = [
        [analytic_multiplier_matrix(za, half), analytic_multiplier_matrix(p.b, half)],
        [analytic_multiplier_matrix(p.c.times_z(), half), -analytic_multiplier_matrix(za, half)],
    ]
    uh = p.U.conj().T
    q = np.zeros((n, n), dtype=np.complex128)
    for r in range(2):
        for s in range(2):
            blk = sum(uh[r, i] * blocks[i][j] * p.U[j, s] for i in range(2) for j in range(2))
            # W: block r, index l  <->  basis index 2l + r
            q[r::2, s::2] = blk
    return as_matrix(q, copy=False)


def _cluster_zeros(zeros: Sequence[complex], tol: float) -> list[tuple[complex, int]]:
    groups: list[list[complex]] = []
    for z0 in zeros:
        for g in groups:
            if abs(g[0] - z0) <= tol:
                g.append(complex(z0))
                break
        else:
            groups.append([complex(z0)])
    return [(complex(np.mean(g)), len(g)) for g in groups]


def poly_from_zeros(zeros: Sequence[complex], lead: complex = 1.0) -> PowerSeries:
    """Ascending coefficients of ``lead * prod (z - z0)``."""
    c = np.array([lead], dtype=np.complex128)
    for z0 in zeros:
        c = np.convolve(c, [-z0, 1.0])
    return PowerSeries(c)


def toeplitz_root_decide(zeros: Sequence[complex], lead: complex, k: int, tol: float = 1e-9) -> PowerSeries | None:
    """Analytic ``psi`` with ``psi^2 = phi`` for a polynomial symbol, or ``None``.

    ``phi = lead * prod (z - z0)``.  A Toeplitz square root exists exactly
    when every zero inside the open disc has even multiplicity.  Paired
    in-disc factors give ``(z - z0)^(m/2)``; the remaining factor has a
    nonzero constant term and gets a series square root.
    """
    inner: list[complex] = []
    outer: list[complex] = []
    for z0, mult in _cluster_zeros(zeros, tol):
        if abs(z0) < 1 - tol:
            if mult % 2:
                return None
            inner += [z0] * (mult // 2)
        else:
            outer += [z0] * mult
    psi = series_sqrt(poly_from_zeros(outer, lead), k)
    return series_mul(poly_from_zeros(inner), psi, k)
