"""Dense complex matrix helpers.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  Constructors in
this package return read-only arrays so a truncation cannot be mutated after
it is built; every operation returns a fresh array.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

POWER_ITERS = 200
POWER_TOL = 1e-8


def as_matrix(a, *, copy: bool = True) -> np.ndarray:
    """Return ``a`` as a finite, read-only, two-dimensional complex array."""
    m = np.array(a, dtype=np.complex128) if copy else np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d array, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    m.flags.writeable = False
    return m


@dataclass(frozen=True)
class Window:
    """Leading ``size`` x ``size`` block used when comparing truncations."""

    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("window size must be positive")


def mat_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return as_matrix(a @ b, copy=False)


def op_norm_est(a: np.ndarray, iters: int = POWER_ITERS, tol: float = POWER_TOL) -> float:
    """Largest singular value by power iteration on ``A^H A``.

    The start vector is drawn from a fixed-seed generator, so repeated calls
    agree bit for bit.  Power iteration approaches the norm from below; the
    largest column norm is also a lower bound, and the larger of the two is
    returned.
    """
    if iters < 1:
        raise ValueError("iters must be >= 1")
    a = np.asarray(a, dtype=np.complex128)
    if a.size == 0:
        return 0.0
    col_max = float(np.max(np.linalg.norm(a, axis=0)))
    if col_max == 0.0:
        return 0.0
    rng = np.random.default_rng(0)
    x = rng.standard_normal(a.shape[1]) + 1j * rng.standard_normal(a.shape[1])
    x /= np.linalg.norm(x)
    est = 0.0
    for _ in range(iters):
        y = a.conj().T @ (a @ x)
        lam = np.linalg.norm(y)
        if lam == 0.0:
            break
        x = y / lam
        new = math.sqrt(lam)
        if abs(new - est) <= tol * new:
            est = new
            break
        est = new
    return max(est, col_max)


def window_residual(a: np.ndarray, b, w: Window | int) -> float:
    """Spectral-norm estimate of ``A - B`` on the leading ``w`` x ``w`` block.

    ``b`` may be the scalar 0 to measure ``A`` alone.
    """
    k = w.size if isinstance(w, Window) else int(w)
    a = np.asarray(a)
    if k > min(a.shape):
        raise ValueError(f"window {k} exceeds matrix shape {a.shape}")
    if np.isscalar(b):
        d = a[:k, :k] - b
    else:
        b = np.asarray(b)
        if k > min(b.shape):
            raise ValueError(f"window {k} exceeds matrix shape {b.shape}")
        d = a[:k, :k] - b[:k, :k]
    return op_norm_est(d)


def binomial_matrix_int(n: int) -> list[list[int]]:
    """Signed binomial involution ``(-1)^j C(i, j)`` as exact Python ints."""
    return [[(-1) ** j * math.comb(i, j) if j <= i else 0 for j in range(n)] for i in range(n)]


def binomial_involution_matrix(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = binomial_matrix_int(n)
    # int -> float conversion is correctly rounded for arbitrarily large ints
    return as_matrix([[float(v) for v in row] for row in rows])


def format_complex(z: complex) -> str:
    z = complex(z)
    return f"{z.real:.17g}{z.imag:+.17g}i"


def parse_complex(s: str) -> complex:
    s = s.strip()
    if s.endswith("i"):
        s = s[:-1] + "j"
    return complex(s)


def matrix_to_csv(a: np.ndarray) -> str:
    buf = io.StringIO()
    for row in np.asarray(a):
        buf.write(",".join(format_complex(v) for v in row))
        buf.write("\n")
    return buf.getvalue()


def matrix_from_csv(text: str) -> np.ndarray:
    rows = [[parse_complex(tok) for tok in line.split(",")] for line in text.splitlines() if line.strip()]
    return as_matrix(rows)


def write_matrix_csv(a: np.ndarray, path: str | Path) -> None:
    from .io import atomic_write_text

    atomic_write_text(path, matrix_to_csv(a))


def read_matrix_csv(path: str | Path) -> np.ndarray:
    return matrix_from_csv(Path(path).read_text(encoding="utf-8"))
