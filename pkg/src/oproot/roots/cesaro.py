"""Lower-triangular square roots of the Cesaro matrix.

Three constructions of the same family:

* closed form ``A_ij = C(i,j) sum_l (-1)^l C(i-j,l) / sqrt(l+j+1)``, evaluated
  through the equivalent positive integral
  ``C(i,j) (2/sqrt(pi)) int_0^inf e^(-(j+1)s^2) (1 - e^(-s^2))^(i-j) ds``;
* the binomial series of ``sqrt(1 - z)`` at ``I - C``;
* the factorization ``B diag(sigma(k+1)/sqrt(k+1)) B`` with ``B`` the signed
  binomial involution, which covers every sign pattern.

The alternating sums cancel catastrophically in floating point (terms grow
like ``3^N``), so the factored form runs in exact integer fixed point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np
from scipy.special import gammaln

from ..matrixcore import as_matrix
from ..operators import cesaro_matrix
from ..quadrature import composite_gauss_legendre
from ..series import binomial_series


@dataclass(frozen=True)
class SignPattern:
    """``sigma: {1, 2, ...} -> {+1, -1}``; ``signs[k-1]`` is ``sigma(k)``, later indices take ``default``."""

    signs: tuple[int, ...] = ()
    default: int = 1

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if any(s not in (1, -1) for s in self.signs + (self.default,)):
            raise ValueError("signs must be +1 or -1")

    def __call__(self, k: int) -> int:
        if k < 1:
            raise ValueError("sigma is indexed from 1")
        return self.signs[k - 1] if k <= len(self.signs) else self.default

    @classmethod
    def constant(cls, s: int = 1) -> "SignPattern":
        return cls((), s)

    @classmethod
    def flip_first(cls) -> "SignPattern":
        """sigma(1) = -1, every other value +1."""
        return cls((-1,), 1)

    @classmethod
    def from_string(cls, text: str) -> "SignPattern":
        """``"+"``, ``"-"`` or a string such as ``"-++-"``; the last symbol repeats."""
        text = text.strip()
        if not text or any(ch not in "+-" for ch in text):
            raise ValueError(f"bad sign pattern {text!r}")
        vals = [1 if ch == "+" else -1 for ch in text]
        return cls(tuple(vals[:-1]), vals[-1])


# ---------------------------------------------------------------- closed form

@lru_cache(maxsize=4)
def _s_nodes(panels: int = 96, per_panel: int = 32) -> tuple[np.ndarray, np.ndarray]:
    # e^(-s^2) < 1e-17 past s = 6.3; the integrand peaks below s = sqrt(ln N)
    return composite_gauss_legendre(np.linspace(0.0, 8.0, panels + 1), per_panel)


def cesaro_root_closed(n: int, global_sign: int = 1) -> np.ndarray:
    """N x N section of the principal root (times ``global_sign``)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if global_sign not in (1, -1):
        raise ValueError("global_sign must be +1 or -1")
    s, w = _s_nodes()
    s2 = s * s
    log1m = np.log(-np.expm1(-s2))  # log(1 - e^(-s^2)), accurate near s = 0
    logw = np.log(w) + math.log(2.0 / math.sqrt(math.pi))
    out = np.zeros((n, n))
    for j in range(n):
        d = np.arange(n - j)[:, None]
        logc = gammaln(j + d + 1.0) - gammaln(j + 1.0) - gammaln(d + 1.0)
        expo = logc - (j + 1) * s2[None, :] + d * log1m[None, :] + logw[None, :]
        out[j:, j] = np.exp(expo).sum(axis=1)
    return as_matrix(global_sign * out, copy=False)


def cesaro_entry_naive(i: int, j: int, dps: int = 50) -> float:
    """The alternating sum for ``A_ij`` in extended precision."""
    if i < j:
        return 0.0
    with mpmath.workdps(dps):
        total = mpmath.fsum(
            (-1) ** l * math.comb(i - j, l) / mpmath.sqrt(l + j + 1) for l in range(i - j + 1)
        )
        return float(math.comb(i, j) * total)


# --------------------------------------------------------------- series form

def cesaro_root_series(n: int, terms: int) -> np.ndarray:
    """``sum_{k < terms} c_k (I - C)^k`` with ``c_k`` the coefficients of ``sqrt(1 - z)``."""
    if terms < 1:
        raise ValueError("terms must be >= 1")
    coeffs = binomial_series(0.5, terms - 1).coeffs.real
    x = np.eye(n) - cesaro_matrix(n).real
    out = np.zeros((n, n))
    power = np.eye(n)
    for k, c in enumerate(coeffs):
        out += c * power
        if k + 1 < terms:
            power = power @ x
    return as_matrix(out, copy=False)


# ------------------------------------------------------------- factored form

def _precision_bits(n: int) -> int:
    # |B| entries sum to at most 3^n per row, twice over; keep 64 spare bits
    return math.ceil(2 * n * math.log2(3)) + 64


def _scaled_diag(n: int, sigma: SignPattern, bits: int) -> list[int]:
    """``round_down(2^bits / sqrt(k+1)) * sigma(k+1)``."""
    one = 1 << (2 * bits)
    return [sigma(k + 1) * math.isqrt(one // (k + 1)) for k in range(n)]


def _factored_int(n: int, sigma: SignPattern, bits: int) -> list[list[int]]:
    d = _scaled_diag(n, sigma, bits)
    rows = []
    for i in range(n):
        row = []
        for j in range(i + 1):
            acc = sum((-1) ** l * math.comb(i - j, l) * d[j + l] for l in range(i - j + 1))
            row.append(math.comb(i, j) * acc)
        rows.append(row + [0] * (n - i - 1))
    return rows


def cesaro_root_factored(n: int, sigma: SignPattern | None = None) -> np.ndarray:
    """``B D B`` with ``D = diag(sigma(k+1)/sqrt(k+1))`` rounded once at the end."""
    if n < 1:
        raise ValueError("n must be >= 1")
    sigma = SignPattern.constant(1) if sigma is None else sigma
    bits = _precision_bits(n)
    scale = 1 << bits
    rows = _factored_int(n, sigma, bits)
    return as_matrix([[v / scale for v in row] for row in rows], copy=False)


def cesaro_factored_column(n: int, sigma: SignPattern, j: int = 0) -> np.ndarray:
    """Column ``j`` of the N x N factored root, without forming the matrix."""
    if not 0 <= j < n:
        raise ValueError("column out of range")
    bits = _precision_bits(n)
    d = _scaled_diag(n, sigma, bits)
    # B e_j has entries (-1)^j C(k, j); then D, then B again
    v = [(-1) ** j * math.comb(k, j) * d[k] for k in range(n)]
    col = [sum((-1) ** k * math.comb(i, k) * v[k] for k in range(i + 1)) for i in range(n)]
    scale = 1 << bits
    return np.array([c / scale for c in col])


def cesaro_factored_square_residual(n: int, sigma: SignPattern) -> float:
    """``max |(A^sigma)^2 - C_N|`` with the product formed in exact integers."""
    bits = _precision_bits(n)
    x = _factored_int(n, sigma, bits)
    den = 1 << (2 * bits)
    worst = 0.0
    for i in range(n):
        for j in range(i + 1):
            sq = sum(x[i][k] * x[k][j] for k in range(j, i + 1))
            # (sq/den) - 1/(i+1), one correctly rounded division
            worst = max(worst, abs((sq * (i + 1) - den) / (den * (i + 1))))
    return worst
