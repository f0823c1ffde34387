"""Residual tables for the constructions whose accuracy depends on a resolution knob.

    python scripts/convergence_tables.py
"""
import numpy as np

from oproot.matrixcore import window_residual
from oproot.operators import cayley_volterra, hilbert_matrix, tcos_matrix, volterra_matrix
from oproot.roots import compressed_shift_root, hilbert_root, lebedev_basis, tcos_root, volterra_abel_root
from oproot.verify import convergence_sweep


def table(title, rows):
    print(f"\n{title}")
    for label, val in rows:
        print(f"  {label:>10}  {val:.3e}")


def main():
    rows = []
    for m in (64, 128, 256, 512, 1024):
        y = volterra_abel_root(m)
        rows.append((f"M={m}", np.linalg.norm(y @ y - volterra_matrix(m), 2)))
    table("||Y^2 - V|| (Abel root, midpoint grid)", rows)

    m = cayley_volterra(volterra_matrix(256))
    rows = []
    for k in (16, 64, 256, 1024):
        r = compressed_shift_root(m, k)
        rows.append((f"K={k}", np.linalg.norm(r @ r - m, 2)))
    table("||R^2 - M|| (compressed shift, grid 256, Fejer means)", rows)

    rows = []
    for n in (8, 16, 32, 64):
        b = tcos_root(n, "principal", max(4096, 8 * n))
        rows.append((f"N={n}", window_residual(b @ b, tcos_matrix(n), n // 4)))
    table("T_cos root, window N/4", rows)

    rows = []
    for n_max in (6, 20, 60, 128, 200):
        t = hilbert_root(lebedev_basis(n_max))
        rows.append((f"n={n_max}", window_residual(t @ t, hilbert_matrix(n_max + 1), 4)))
    table("Hilbert root, window 4 (section tail ~ 1/n)", rows)

    rep = convergence_sweep("cesaro-series", [100, 1000, 10_000, 100_000])
    table("Cesaro series root, N = 64", [(k.split("[")[1][:-1], v) for k, v in rep.metrics.items()])


if __name__ == "__main__":
    main()
