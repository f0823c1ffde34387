"""Command-line front end: ``oproot build|root|verify|figure|suite``.

Exit status is 0 on success or a passing check, 1 when a verification fails
and 2 on a usage error.  Files are written atomically.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from . import acceptance, verify
from .io import SCHEMA_VERSION, atomic_write_text, dumps
from .matrixcore import matrix_to_csv
from .operators import BUILDERS, cayley_volterra, volterra_matrix
from .roots.cesaro import (
    SignPattern,
    cesaro_root_closed,
    cesaro_root_factored,
    cesaro_root_series,
)
from .roots.hilbert import hilbert_root, lebedev_basis
from .roots.shift import (
    identity_unitary_params,
    swap_sqrt_params,
    swap_shift_params,
    shift2_root,
)
from .roots.tcos import tcos_root
from .roots.volterra import compressed_shift_root, volterra_abel_root
from .series import PowerSeries

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULTS = {"n": 32, "terms": 100_000, "quad": 4096, "radial": 256, "angular": 720, "k": 256}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    name: str | None = None
    flags: dict = field(default_factory=dict)
    output: Path | None = None
    fmt: str = "csv"

    def get(self, key: str):
        val = self.flags.get(key)
        return DEFAULTS.get(key) if val is None else val


# ------------------------------------------------------------------- roots

def _shift2(kind: str):
    def build(cfg: RunConfig):
        n = cfg.get("n")
        params = {"identity": identity_unitary_params, "swap-sqrt": lambda: swap_sqrt_params(n // 2), "swap-shift": swap_shift_params}[kind]()
        half = n // 2
        return shift2_root(params, n), {"constraint": params.constraint_residual(half - 1)}

    return build


def _cesaro_closed(cfg):
    return cesaro_root_closed(cfg.get("n"), cfg.get("sign") or 1), {}


def _cesaro_series(cfg):
    return cesaro_root_series(cfg.get("n"), cfg.get("terms")), {}


def _cesaro_factored(cfg):
    sigma = SignPattern.from_string(cfg.flags.get("sigma") or "+")
    return cesaro_root_factored(cfg.get("n"), sigma), {}


def _volterra(cfg):
    return volterra_abel_root(cfg.get("n")), {}


def _compressed(cfg):
    m = cayley_volterra(volterra_matrix(cfg.get("n")))
    return compressed_shift_root(m, cfg.get("k")), {}


def _tcos(cfg):
    return tcos_root(cfg.get("n"), cfg.flags.get("branch") or "principal", cfg.get("quad")), {}


def _hilbert(cfg):
    basis = lebedev_basis(cfg.get("n") - 1)
    return hilbert_root(basis, cfg.flags.get("flip")), {}


# name -> (builder, flags it accepts besides --n)
ROOTS: dict[str, tuple[Callable, set[str]]] = {
    "shift2-identity": (_shift2("identity"), set()),
    "shift2-swap-sqrt": (_shift2("swap-sqrt"), set()),
    "shift2-swap-shift": (_shift2("swap-shift"), set()),
    "cesaro-closed": (_cesaro_closed, {"sign"}),
    "cesaro-series": (_cesaro_series, {"terms"}),
    "cesaro-factored": (_cesaro_factored, {"sigma"}),
    "volterra-abel": (_volterra, set()),
    "compressed-shift": (_compressed, {"k"}),
    "tcos": (_tcos, {"quad", "branch"}),
    "hilbert": (_hilbert, {"flip"}),
}
ROOT_FLAGS = {"sign", "terms", "sigma", "k", "quad", "branch", "flip"}


# ------------------------------------------------------------------ verify

def _sizes(cfg, default):
    raw = cfg.flags.get("sizes")
    return [int(s) for s in raw.split(",")] if raw else list(default)


VERIFY: dict[str, tuple[Callable[[RunConfig], verify.VerifyReport], set[str]]] = {
    "cesaro-eigen": (lambda c: verify.cesaro_eigencheck(complex(c.get("w")), c.get("n"), c.flags.get("tol") or 1e-3), {"w", "n", "tol"}),
    "cesaro-unbounded": (lambda c: verify.unbounded_growth_demo(_sizes(c, acceptance.GROWTH_SIZES)), {"sizes"}),
    "sweep-volterra-abel": (lambda c: verify.convergence_sweep("volterra-abel", _sizes(c, acceptance.VOLTERRA_GRIDS)), {"sizes"}),
    "sweep-cesaro-series": (lambda c: verify.convergence_sweep("cesaro-series", _sizes(c, (1000, 10_000, 100_000))), {"sizes"}),
    "sweep-compressed-shift": (lambda c: verify.convergence_sweep("compressed-shift", _sizes(c, acceptance.COMPRESSED_K)), {"sizes"}),
    "boundary-fig1": (lambda c: verify.boundary_report("z_theta_fifth_root"), set()),
    "boundary-fig2": (lambda c: verify.boundary_report("one_plus_z_theta"), set()),
    "no-root-double-zero": (
        lambda c: verify.no_root_double_zero_check(
            PowerSeries.monomial(2), [PowerSeries.constant(1.0), PowerSeries.poly([1.0, 1.0]), PowerSeries.constant(0.0)]
        ),
        set(),
    ),
}
for _cid in acceptance.CRITERIA:
    VERIFY[_cid] = (lambda c, cid=_cid: acceptance.run_criterion(cid), set())
VERIFY_FLAGS = {"w", "n", "tol", "sizes"}


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oproot", description="Square roots of classical operators.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="dump an operator truncation as CSV")
    b.add_argument("name", choices=sorted(BUILDERS))
    b.add_argument("--n", type=int, default=None)
    b.add_argument("-o", "--output", type=Path)

    r = sub.add_parser("root", help="construct a square root; CSV plus a JSON sidecar")
    r.add_argument("name", choices=sorted(ROOTS))
    r.add_argument("--n", type=int, default=None)
    r.add_argument("--sign", type=int, choices=(1, -1), default=None)
    r.add_argument("--terms", type=int, default=None)
    r.add_argument("--sigma", type=str, default=None, help="sign pattern such as --sigma=-+ (last symbol repeats)")
    r.add_argument("--k", type=int, default=None, help="Taylor terms for compressed-shift")
    r.add_argument("--quad", type=int, default=None)
    r.add_argument("--branch", choices=("principal", "flipped"), default=None)
    r.add_argument("--flip", type=float, default=None, help="negate g above this tau")
    r.add_argument("-o", "--output", type=Path)

    v = sub.add_parser("verify", help="run one claim check and write a JSON report")
    v.add_argument("claim_id", choices=sorted(VERIFY))
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--w", type=complex, default=None)
    v.add_argument("--tol", type=float, default=None)
    v.add_argument("--sizes", type=str, default=None, help="comma-separated sizes")
    v.add_argument("-o", "--output", type=Path)

    f = sub.add_parser("figure", help="disc image point cloud as re,im CSV")
    f.add_argument("name", choices=("fig1", "fig2"))
    f.add_argument("--radial", type=int, default=None)
    f.add_argument("--angular", type=int, default=None)
    f.add_argument("--threshold", type=float, default=verify.DISC_THRESHOLD)
    f.add_argument("-o", "--output", type=Path)

    s = sub.add_parser("suite", help="run every acceptance criterion")
    s.add_argument("--only", type=str, default=None, help="comma-separated criterion ids")
    s.add_argument("-o", "--output", type=Path, help="also write the reports as JSON")
    return p


def _config(ns: argparse.Namespace) -> RunConfig:
    flags = {k: v for k, v in vars(ns).items() if k not in ("command", "name", "claim_id", "output")}
    name = getattr(ns, "name", None) or getattr(ns, "claim_id", None)
    cfg = RunConfig(ns.command, name, flags, getattr(ns, "output", None))
    given = {k for k, v in flags.items() if v is not None}
    if ns.command == "root":
        extra = (given & ROOT_FLAGS) - ROOTS[name][1]
        if extra:
            raise UsageError(f"root {name} does not take --{', --'.join(sorted(extra))}")
    elif ns.command == "verify":
        extra = (given & VERIFY_FLAGS) - VERIFY[name][1]
        if extra:
            raise UsageError(f"verify {name} does not take --{', --'.join(sorted(extra))}")
        if name == "cesaro-eigen" and flags.get("w") is None:
            raise UsageError("verify cesaro-eigen needs --w")
    for key in ("n", "terms", "quad", "k", "radial", "angular"):
        val = flags.get(key)
        if val is not None and val < 1:
            raise UsageError(f"--{key} must be positive")
    return cfg


def _emit(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        atomic_write_text(path, text)


# ---------------------------------------------------------------- commands

def _cmd_build(cfg: RunConfig) -> int:
    _emit(matrix_to_csv(BUILDERS[cfg.name](cfg.get("n"))), cfg.output)
    return EXIT_OK


def _cmd_root(cfg: RunConfig) -> int:
    builder, allowed = ROOTS[cfg.name]
    mat, residuals = builder(cfg)
    _emit(matrix_to_csv(mat), cfg.output)
    if cfg.output is not None:
        params = {"n": cfg.get("n")}
        params.update({k: cfg.get(k) for k in sorted(allowed)})
        sidecar = {"schema": SCHEMA_VERSION, "name": cfg.name, "params": params, "constraint_residuals": residuals}
        atomic_write_text(cfg.output.with_suffix(".json"), dumps(sidecar))
    return EXIT_OK


def _cmd_verify(cfg: RunConfig) -> int:
    rep = VERIFY[cfg.name][0](cfg)
    _emit(rep.to_json(), cfg.output)
    return EXIT_OK if rep.passed else EXIT_FAIL


def _cmd_figure(cfg: RunConfig) -> int:
    radial, angular = cfg.get("radial"), cfg.get("angular")
    pts = verify.disc_image_points(cfg.name, radial, angular).ravel()
    text = "".join(f"{z.real:.17g},{z.imag:.17g}\n" for z in pts)
    _emit(text, cfg.output)
    low = float(np.min(np.abs(pts)))
    print(f"{cfg.name}: min |f| = {low:.6g} (threshold {cfg.flags['threshold']})", file=sys.stderr)
    return EXIT_OK if low > cfg.flags["threshold"] else EXIT_FAIL


def _cmd_suite(cfg: RunConfig) -> int:
    only = cfg.flags.get("only")
    ids = [s.strip() for s in only.split(",")] if only else list(acceptance.CRITERIA)
    unknown = [i for i in ids if i not in acceptance.CRITERIA]
    if unknown:
        raise UsageError(f"unknown criteria: {', '.join(unknown)}")
    reports = []
    for cid in ids:
        rep = acceptance.run_criterion(cid)
        reports.append(rep)
        print(acceptance.format_line(rep), flush=True)
    n_pass = sum(r.passed for r in reports)
    print(f"{n_pass}/{len(reports)} criteria pass")
    if cfg.output is not None:
        atomic_write_text(cfg.output, dumps({"schema": SCHEMA_VERSION, "reports": [r.to_dict() for r in reports]}))
    return EXIT_OK if n_pass == len(reports) else EXIT_FAIL


COMMANDS = {"build": _cmd_build, "root": _cmd_root, "verify": _cmd_verify, "figure": _cmd_figure, "suite": _cmd_suite}


def parse_and_dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors this way
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = _config(ns)
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"oproot: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"oproot: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(parse_and_dispatch())
