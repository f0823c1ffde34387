"""Claim-checking harness.

Each check returns a :class:`VerifyReport` holding the measured metrics and
the bounds they were judged against.  Nothing here draws random numbers
except :func:`oproot.matrixcore.op_norm_est`, whose start vector is seeded.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .io import SCHEMA_VERSION, dumps
from .matrixcore import Window, op_norm_est, window_residual
from .operators import cayley_volterra, cesaro_matrix, volterra_matrix
from .roots.cesaro import SignPattern, cesaro_factored_column, cesaro_root_series
from .roots.volterra import compressed_shift_root, compressed_shift_symbol, volterra_abel_root
from .series import (
    PowerSeries,
    binomial_series,
    eval_disc_grid,
    order_of_zero,
    series_mul,
    series_sqrt,
    theta_coeffs,
)

_OPS: dict[str, Callable[[float, float], bool]] = {
    "<=": lambda v, b: v <= b,
    "<": lambda v, b: v < b,
    ">=": lambda v, b: v >= b,
    ">": lambda v, b: v > b,
}


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    op: str
    bound: float

    def __post_init__(self):
        if self.op not in _OPS:
            raise ValueError(f"unknown comparison {self.op!r}")

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.value)) and _OPS[self.op](self.value, self.bound)

    def describe(self) -> str:
        mark = "ok" if self.passed else "FAIL"
        return f"{self.name} = {self.value:.4g} {self.op} {self.bound:.4g} [{mark}]"


@dataclass
class VerifyReport:
    claim_id: str
    params: dict = field(default_factory=dict)
    metrics: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    def check(self, name: str, value: float, op: str, bound: float) -> Check:
        c = Check(name, float(value), op, float(bound))
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def tolerance(self) -> float | None:
        """Bound of the first check, the headline tolerance of the claim."""
        return self.checks[0].bound if self.checks else None

    def merge(self, other: "VerifyReport", prefix: str) -> None:
        for k, v in other.metrics.items():
            self.metrics[f"{prefix}.{k}"] = v
        for c in other.checks:
            self.checks.append(Check(f"{prefix}.{c.name}", c.value, c.op, c.bound))

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "claim_id": self.claim_id,
            "params": self.params,
            "metrics": self.metrics,
            "checks": [
                {"name": c.name, "value": c.value, "op": c.op, "bound": c.bound, "pass": c.passed}
                for c in self.checks
            ],
            "tolerance": self.tolerance,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())


# ----------------------------------------------------------------- residuals

def square_residual_report(
    root: np.ndarray,
    target: np.ndarray,
    w: Window | int,
    tol: float = 1e-8,
    claim_id: str = "square-residual",
) -> VerifyReport:
    """Window residual of ``root^2 - target`` and of the commutator ``[root, target]``.

    A root of ``T`` commutes with ``T``; on a truncation the commutator is
    allowed ten times the square residual plus ``1e-8``.
    """
    root = np.asarray(root)
    target = np.asarray(target)
    if root.shape != target.shape or root.shape[0] != root.shape[1]:
        raise ValueError(f"shape mismatch: {root.shape} vs {target.shape}")
    k = w.size if isinstance(w, Window) else int(w)
    res = window_residual(root @ root, target, k)
    comm = window_residual(root @ target - target @ root, 0, k)
    rep = VerifyReport(claim_id, {"n": root.shape[0], "window": k, "tol": tol})
    rep.metrics.update(
        residual=res, commutator=comm, norm_root=op_norm_est(root), norm_target=op_norm_est(target)
    )
    rep.check("residual", res, "<=", tol)
    rep.check("commutator", comm, "<=", 10 * res + 1e-8)
    return rep


def commutation_report(root: np.ndarray, target: np.ndarray, w: Window | int, claim_id: str = "commutation") -> VerifyReport:
    """Only the commutator half of :func:`square_residual_report`."""
    full = square_residual_report(root, target, w, tol=math.inf, claim_id=claim_id)
    full.checks = [c for c in full.checks if c.name == "commutator"]
    return full


# -------------------------------------------------------------- convergence

CONVERGENCE_SLACK = 1.05
CONVERGENCE_FLOOR = 1e-12


def _volterra_residual(m: int) -> float:
    y = volterra_abel_root(m)
    return op_norm_est(y @ y - volterra_matrix(m))


def _cesaro_series_residual(terms: int, n: int = 64) -> float:
    a = cesaro_root_series(n, terms)
    return op_norm_est(a @ a - cesaro_matrix(n))


def _compressed_shift_residual(k: int, grid: int = 256) -> float:
    m = cayley_volterra(volterra_matrix(grid))
    r = compressed_shift_root(m, k)
    return op_norm_est(r @ r - m)


SWEEP_BUILDERS: dict[str, Callable[[int], float]] = {
    "volterra-abel": _volterra_residual,
    "cesaro-series": _cesaro_series_residual,
    "compressed-shift": _compressed_shift_residual,
}


def convergence_sweep(builder_id: str, sizes: Sequence[int]) -> VerifyReport:
    """Residual per size; passes if each step is within 5% of non-increasing."""
    if builder_id not in SWEEP_BUILDERS:
        raise KeyError(f"unknown builder {builder_id!r}")
    if len(sizes) < 2:
        raise ValueError("need at least two sizes")
    fn = SWEEP_BUILDERS[builder_id]
    res = [fn(int(s)) for s in sizes]
    rep = VerifyReport(f"sweep:{builder_id}", {"sizes": list(sizes)})
    for s, r in zip(sizes, res):
        rep.metrics[f"residual[{s}]"] = r
    for (s0, r0), (s1, r1) in zip(zip(sizes, res), zip(sizes[1:], res[1:])):
        rep.check(f"step[{s0}->{s1}]", r1, "<=", max(CONVERGENCE_SLACK * r0, CONVERGENCE_FLOOR))
    return rep


# ------------------------------------------------------------ boundary / figures

PROFILES = ("one_plus_z_theta", "z_theta_fifth_root")
FIGURE_OF = {"fig1": "z_theta_fifth_root", "fig2": "one_plus_z_theta"}
DISC_THRESHOLD = 0.05
R_MAX = 0.995


def default_theta_grid(points: int = 100_000, exclude: float = 1e-4) -> np.ndarray:
    """Uniform grid on ``[exclude, 2 pi - exclude]``."""
    return np.linspace(exclude, 2 * np.pi - exclude, points)


@dataclass(frozen=True, eq=False)
class BoundaryProfile:
    kind: str
    theta_grid: np.ndarray = field(default_factory=default_theta_grid)

    def __post_init__(self):
        if self.kind not in PROFILES:
            raise ValueError(f"unknown profile {self.kind!r}")
        g = np.asarray(self.theta_grid, dtype=float)
        if g.size == 0:
            raise ValueError("empty grid")
        if np.any(np.isclose(np.mod(g, 2 * np.pi), 0.0, atol=1e-12, rtol=0)):
            raise ValueError("grid must exclude theta = 0")
        object.__setattr__(self, "theta_grid", g)


def boundary_re(kind: str, theta) -> np.ndarray:
    """Closed-form ``Re f(e^(i theta))`` on ``(0, 2 pi)``.

    ``Theta(e^(i theta)) = exp(-i cot(theta/2))`` and
    ``1 - e^(i theta) = 2 sin(theta/2) e^(i (theta - pi)/2)`` with
    ``sin(theta/2) > 0``, so one formula covers the whole open interval.  On
    ``(pi, 2 pi)`` it agrees with the reflection ``f(e^(-i t)) = conj f(e^(i t))``
    (real Taylor coefficients).
    """
    th = np.mod(np.asarray(theta, dtype=float), 2 * np.pi)
    cot = np.cos(th / 2) / np.sin(th / 2)
    if kind == "one_plus_z_theta":
        return 1.0 + np.cos(th) + np.cos(cot)
    if kind == "z_theta_fifth_root":
        return np.cos(th) + (2 * np.sin(th / 2)) ** 0.2 * np.cos((th - np.pi) / 10 - cot)
    raise ValueError(f"unknown profile {kind!r}")


def boundary_value(kind: str, theta) -> np.ndarray:
    """Closed-form complex boundary value ``f(e^(i theta))``."""
    th = np.mod(np.asarray(theta, dtype=float), 2 * np.pi)
    z = np.exp(1j * th)
    inner = np.exp(-1j * np.cos(th / 2) / np.sin(th / 2))
    if kind == "one_plus_z_theta":
        return 1.0 + z + inner
    if kind == "z_theta_fifth_root":
        return z + inner * (2 * np.sin(th / 2)) ** 0.2 * np.exp(1j * (th - np.pi) / 10)
    raise ValueError(f"unknown profile {kind!r}")


def boundary_min_re(p: BoundaryProfile) -> float:
    return float(np.min(boundary_re(p.kind, p.theta_grid)))


def boundary_argmin_re(p: BoundaryProfile) -> float:
    return float(p.theta_grid[np.argmin(boundary_re(p.kind, p.theta_grid))])


def figure_series_degree(r_max: float = R_MAX) -> int:
    # r^K < e^-36 ~ 2e-16 at the outermost ring
    return max(400, math.ceil(-36.0 / math.log(r_max)))


def figure_symbol(f_id: str, k: int) -> PowerSeries:
    if f_id == "fig2":
        return theta_coeffs(k) + PowerSeries.poly([1.0, 1.0])
    if f_id == "fig1":
        return compressed_shift_symbol(k)
    raise ValueError(f"unknown figure {f_id!r}")


def polar_grid(radial: int, angular: int, r_max: float = R_MAX) -> np.ndarray:
    """``r_i e^(i theta_j)`` with ``r_i = r_max i/(R-1)``, ``theta_j = 2 pi j/A``; shape (R, A)."""
    if radial < 16 or angular < 16:
        raise ValueError("radial and angular must be >= 16")
    r = r_max * np.arange(radial) / (radial - 1)
    t = 2 * np.pi * np.arange(angular) / angular
    return r[:, None] * np.exp(1j * t)[None, :]


def disc_image_points(f_id: str, radial: int = 256, angular: int = 720) -> np.ndarray:
    """Values of the figure's function on the polar grid, shape (radial, angular)."""
    z = polar_grid(radial, angular)
    f = figure_symbol(f_id, figure_series_degree())
    return eval_disc_grid(f, z)


def direct_value(f_id: str, z) -> np.ndarray:
    """Figure functions evaluated from ``exp`` and the principal power, not from series."""
    z = np.asarray(z, dtype=np.complex128)
    theta = np.exp((z + 1) / (z - 1))
    if f_id == "fig2":
        return 1 + z + theta
    if f_id == "fig1":
        return z + theta * (1 - z) ** 0.2
    raise ValueError(f"unknown figure {f_id!r}")


def winding_number(f_id: str, r: float, samples: int = 200_000) -> int:
    """Winding number about 0 of ``f(r e^(i theta))``, i.e. the zero count in ``|z| < r``."""
    if not 0 < r < 1:
        raise ValueError("r must lie in (0, 1)")
    t = 2 * np.pi * np.arange(samples + 1) / samples
    vals = direct_value(f_id, r * np.exp(1j * t))
    steps = np.angle(vals[1:] / vals[:-1])
    return int(round(steps.sum() / (2 * np.pi)))


def figure_report(f_id: str, radial: int = 256, angular: int = 720, threshold: float = DISC_THRESHOLD) -> VerifyReport:
    pts = disc_image_points(f_id, radial, angular)
    mod = np.abs(pts)
    idx = np.unravel_index(np.argmin(mod), mod.shape)
    rep = VerifyReport(f"figure:{f_id}", {"radial": radial, "angular": angular, "r_max": R_MAX})
    rep.metrics.update(
        min_modulus=float(mod[idx]),
        argmin_r=float(R_MAX * idx[0] / (radial - 1)),
        argmin_theta=float(2 * np.pi * idx[1] / angular),
        value_at_zero=complex(pts[0, 0]),
    )
    rep.check("min_modulus", mod[idx], ">", threshold)
    return rep


def boundary_report(kind: str, grid: np.ndarray | None = None) -> VerifyReport:
    p = BoundaryProfile(kind) if grid is None else BoundaryProfile(kind, grid)
    rep = VerifyReport(f"boundary:{kind}", {"points": int(p.theta_grid.size)})
    m = boundary_min_re(p)
    rep.metrics.update(min_re=m, argmin_theta=boundary_argmin_re(p))
    rep.check("min_re", m, ">", 0.0)
    return rep


# --------------------------------------------------------------------- Cesaro

def cesaro_eigencheck(w: complex, n: int, tol: float = 1e-12) -> VerifyReport:
    """Relative residual of ``(I - C^H) v_w = w v_w`` with ``v_w = (1 - z)^(w/(1-w))``."""
    if w == 1:
        raise ValueError("w = 1 has no eigenfunction")
    if abs(w) >= 1:
        raise ValueError("|w| must be < 1")
    v = binomial_series(w / (1 - w), n - 1).coeffs
    c = cesaro_matrix(n)
    lhs = v - c.conj().T @ v
    metric = float(np.linalg.norm(lhs - w * v) / np.linalg.norm(v))
    rep = VerifyReport("cesaro-eigen", {"w": complex(w), "n": n})
    rep.metrics["relative_residual"] = metric
    rep.check("relative_residual", metric, "<=", tol)
    return rep


def unbounded_growth_demo(n_list: Sequence[int], control_bound: float = 2.2) -> VerifyReport:
    """First-column norms of the root with ``sigma(1) = -1`` against the all-plus control."""
    n_list = [int(n) for n in n_list]
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ValueError("n_list must be increasing")
    rep = VerifyReport("cesaro-unbounded", {"n_list": n_list, "sigma": "-+"})
    mixed = SignPattern.flip_first()
    plus = SignPattern.constant(1)
    norms = []
    for n in n_list:
        v = float(np.linalg.norm(cesaro_factored_column(n, mixed)))
        c = float(np.linalg.norm(cesaro_factored_column(n, plus)))
        norms.append(v)
        rep.metrics[f"mixed_norm[{n}]"] = v
        rep.metrics[f"control_norm[{n}]"] = c
        if n >= 64:
            rep.check(f"mixed_norm[{n}]", v, ">=", math.sqrt(n))
        rep.check(f"control_norm[{n}]", c, "<=", control_bound)
    for (n0, a), (n1, b) in zip(zip(n_list, norms), zip(n_list[1:], norms[1:])):
        rep.metrics[f"ratio[{n0}->{n1}]"] = b / a
        rep.check(f"ratio_lo[{n0}->{n1}]", b / a, ">=", 1.3)
        rep.check(f"ratio_hi[{n0}->{n1}]", b / a, "<=", 1.5)
    return rep


# ------------------------------------------------------------ no-root check

def no_root_double_zero_check(u: PowerSeries, h_samples: Sequence[PowerSeries]) -> VerifyReport:
    """``z + u h`` has a simple zero at 0 whenever ``u`` vanishes to order >= 2."""
    if order_of_zero(u) < 2:
        raise ValueError("u must vanish to order >= 2 at 0")
    rep = VerifyReport("no-root-double-zero", {"u": u.coeffs.tolist(), "samples": len(h_samples)})
    for idx, h in enumerate(h_samples):
        k = u.order + h.order + 1
        f = series_mul(u, h, k) + PowerSeries.monomial(1)
        order = order_of_zero(f)
        try:
            series_sqrt(f, k)
            sqrt_refused = 0.0
        except ValueError:
            sqrt_refused = 1.0
        rep.metrics[f"order[{idx}]"] = order
        rep.check(f"order_lo[{idx}]", order, ">=", 1)
        rep.check(f"order_hi[{idx}]", order, "<=", 1)
        rep.check(f"sqrt_refused[{idx}]", sqrt_refused, ">=", 1)
    return rep
