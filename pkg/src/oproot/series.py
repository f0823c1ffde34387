"""Truncated power series over the complex numbers.

A :class:`PowerSeries` stores Taylor coefficients ``c[0..K]`` of a function
analytic on the unit disc.  All arithmetic truncates at an explicit degree.
This is the symbol toolbox for the root constructions: the atomic inner
function, binomial series ``(1 - z)^alpha``, even/odd splitting and the
lower-triangular Toeplitz matrices of analytic multipliers.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.linalg import toeplitz

from .matrixcore import as_matrix

ZERO_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class PowerSeries:
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128).ravel()
        if c.size == 0:
            c = np.zeros(1, dtype=np.complex128)
        if not np.all(np.isfinite(c)):
            raise ValueError("series has non-finite coefficients")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @classmethod
    def poly(cls, coeffs: Sequence[complex]) -> "PowerSeries":
        return cls(np.asarray(coeffs, dtype=np.complex128))

    @classmethod
    def constant(cls, c: complex = 1.0) -> "PowerSeries":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: complex = 1.0) -> "PowerSeries":
        out = np.zeros(n + 1, dtype=np.complex128)
        out[n] = c
        return cls(out)

    def padded(self, k: int) -> np.ndarray:
        """Coefficients 0..k, zero-filled or truncated."""
        out = np.zeros(k + 1, dtype=np.complex128)
        m = min(k, self.order) + 1
        out[:m] = self.coeffs[:m]
        return out

    def truncate(self, k: int) -> "PowerSeries":
        return PowerSeries(self.padded(k))

    def times_z(self, n: int = 1) -> "PowerSeries":
        return PowerSeries(np.concatenate([np.zeros(n, dtype=np.complex128), self.coeffs]))

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        k = max(self.order, other.order)
        return PowerSeries(self.padded(k) + other.padded(k))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        k = max(self.order, other.order)
        return PowerSeries(self.padded(k) - other.padded(k))

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(-self.coeffs)

    def scale(self, c: complex) -> "PowerSeries":
        return PowerSeries(c * self.coeffs)

    def max_abs(self, k: int | None = None) -> float:
        c = self.coeffs if k is None else self.padded(k)
        return float(np.max(np.abs(c)))

    def __repr__(self) -> str:
        head = ", ".join(f"{v:.6g}" for v in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"PowerSeries([{head}{tail}], order={self.order})"


def series_mul(f: PowerSeries, g: PowerSeries, k: int) -> PowerSeries:
    """Cauchy product truncated at degree ``k``."""
    return PowerSeries(np.convolve(f.padded(k), g.padded(k))[: k + 1])


def series_inv(g: PowerSeries, k: int) -> PowerSeries:
    """Reciprocal ``1/g`` through degree ``k`` (requires ``g(0) != 0``)."""
    gc = g.padded(k)
    if gc[0] == 0:
        raise ZeroDivisionError("series with vanishing constant term has no reciprocal")
    inv = np.zeros(k + 1, dtype=np.complex128)
    inv[0] = 1.0 / gc[0]
    for n in range(1, k + 1):
        inv[n] = -np.dot(gc[1 : n + 1], inv[n - 1 :: -1]) * inv[0]
    return PowerSeries(inv)


def series_div(f: PowerSeries, g: PowerSeries, k: int) -> PowerSeries:
    return series_mul(f, series_inv(g, k), k)


def series_sqrt(f: PowerSeries, k: int) -> PowerSeries:
    """Square root by Newton iteration ``g <- (g + f/g) / 2``.

    The branch is fixed by ``g(0) = sqrt(f(0))`` (principal root).  Each step
    doubles the number of correct coefficients, so ``ceil(log2(k+1)) + 2``
    steps suffice.
    """
    f0 = complex(f.coeffs[0])
    if f0 == 0:
        raise ValueError("no analytic square root: constant term vanishes")
    g = PowerSeries.constant(np.sqrt(f0)).truncate(k)
    fk = f.truncate(k)
    for _ in range(math.ceil(math.log2(k + 1)) + 2):
        g = PowerSeries((g.coeffs + series_div(fk, g, k).coeffs) / 2)
    return g


def theta_coeffs(k: int) -> PowerSeries:
    """Taylor coefficients of the atomic inner function exp((z+1)/(z-1)).

    Solves ``Theta' = g' Theta`` term by term with ``g = (z+1)/(z-1)``, whose
    derivative has coefficients ``-2(n+1)``; ``Theta(0) = e^-1``.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    th = np.zeros(k + 1)
    th[0] = math.exp(-1.0)
    dg = -2.0 * np.arange(1, k + 1, dtype=float)
    for n in range(k):
        th[n + 1] = np.dot(dg[: n + 1], th[n::-1]) / (n + 1)
    return PowerSeries(th)


def binomial_series(alpha: float, k: int) -> PowerSeries:
    """Coefficients of ``(1 - z)^alpha`` (principal branch)."""
    c = np.zeros(k + 1, dtype=np.complex128)
    c[0] = 1.0
    for n in range(k):
        c[n + 1] = c[n] * (n - alpha) / (n + 1)
    return PowerSeries(c)


def even_odd_split(g: PowerSeries) -> tuple[PowerSeries, PowerSeries]:
    ge = g.coeffs.copy()
    go = g.coeffs.copy()
    ge[1::2] = 0
    go[0::2] = 0
    return PowerSeries(ge), PowerSeries(go)


def analytic_multiplier_matrix(f: PowerSeries, n: int) -> np.ndarray:
    """Matrix of multiplication by ``f`` on span{1, z, ..., z^(n-1)}: lower-triangular Toeplitz."""
    col = f.padded(n - 1)
    return as_matrix(toeplitz(col, np.zeros(n, dtype=np.complex128)))


def order_of_zero(f: PowerSeries, tol: float = ZERO_TOL) -> int:
    big = np.nonzero(np.abs(f.coeffs) > tol)[0]
    return int(big[0]) if big.size else f.order + 1


def eval_disc_grid(f: PowerSeries, points) -> np.ndarray:
    """Horner evaluation at points of the open unit disc."""
    z = np.asarray(points, dtype=np.complex128)
    if np.any(np.abs(z) >= 1):
        raise ValueError("evaluation point outside the open unit disc")
    acc = np.zeros_like(z)
    for c in f.coeffs[::-1]:
        acc = acc * z + c
    return acc


def series_to_csv(f: PowerSeries) -> str:
    buf = io.StringIO()
    for n, c in enumerate(f.coeffs):
        buf.write(f"{n},{c.real:.17g},{c.imag:.17g}\n")
    return buf.getvalue()


def series_from_csv(text: str) -> PowerSeries:
    rows = [line.split(",") for line in text.splitlines() if line.strip()]
    out = np.zeros(len(rows), dtype=np.complex128)
    for idx, re, im in rows:
        out[int(idx)] = complex(float(re), float(im))
    return PowerSeries(out)
