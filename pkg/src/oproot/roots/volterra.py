"""Roots of the Volterra operator and of the compressed shift.

The Abel operator ``(Yf)(x) = pi^(-1/2) int_0^x f(t) (x - t)^(-1/2) dt`` is
discretised by product integration on the same midpoint grid as
:func:`oproot.operators.volterra_matrix`.

For the compressed shift, the Cayley transform ``M = (I - V)(I + V)^-1`` is
the concrete model.  The root is ``psi(M)`` with
``psi = sqrt(z + Theta (1 - z)^(1/5))``, evaluated by Cesaro (Fejer) means of
the Taylor partial sums, which stay bounded for any contraction.
"""
from __future__ import annotations

import math

import numpy as np

from ..matrixcore import as_matrix, op_norm_est
from ..series import PowerSeries, binomial_series, series_mul, series_sqrt, theta_coeffs

CONTRACTION_SLACK = 1.05


def volterra_abel_root(m: int) -> np.ndarray:
    if m < 2:
        raise ValueError("m must be >= 2")
    h = 1.0 / m
    i = np.arange(m)
    x = (i + 0.5) * h
    # cell j is [j h, (j+1) h]; the cell holding x_i is integrated up to x_i only
    lo = np.sqrt(np.clip(x[:, None] - i[None, :] * h, 0.0, None))
    hi = np.sqrt(np.clip(x[:, None] - (i[None, :] + 1) * h, 0.0, None))
    y = np.tril(lo - hi)
    return as_matrix(2.0 / math.sqrt(math.pi) * y)


def compressed_shift_symbol(k: int) -> PowerSeries:
    """``z + Theta(z) (1 - z)^(1/5)`` through degree ``k``."""
    f = series_mul(theta_coeffs(k), binomial_series(0.2, k), k)
    return f + PowerSeries.monomial(1)


def compressed_shift_root_symbol(k: int) -> PowerSeries:
    return series_sqrt(compressed_shift_symbol(k), k)


def compressed_shift_root(m_cayley: np.ndarray, k: int, cesaro_avg: bool = True) -> np.ndarray:
    """``sum_j psi_j M^j`` over the first ``k`` Taylor terms.

    With ``cesaro_avg`` the result is the mean of the partial sums
    ``S_0, ..., S_(k-1)``, i.e. term ``j`` carries weight ``1 - j/k``.
    """
    m_cayley = np.asarray(m_cayley, dtype=np.complex128)
    nrm = op_norm_est(m_cayley)
    if nrm > CONTRACTION_SLACK:
        raise ValueError(f"operator norm {nrm:.4f} exceeds {CONTRACTION_SLACK}")
    if k < 1:
        raise ValueError("k must be >= 1")
    psi = compressed_shift_root_symbol(k).coeffs[:k]
    if cesaro_avg:
        psi = psi * (1.0 - np.arange(k) / k)
    n = m_cayley.shape[0]
    out = np.zeros((n, n), dtype=np.complex128)
    power = np.eye(n, dtype=np.complex128)
    for j, c in enumerate(psi):
        out += c * power
        if j + 1 < k:
            power = power @ m_cayley
    return as_matrix(out, copy=False)
