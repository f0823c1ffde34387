"""Where the boundary real parts are smallest, and how close each image gets to 0.

    python scripts/boundary_study.py
"""
import numpy as np

from oproot.verify import PROFILES, BoundaryProfile, boundary_argmin_re, boundary_min_re, boundary_value, direct_value


def main():
    fine = np.linspace(1e-6, 2 * np.pi - 1e-6, 2_000_001)
    for kind, f_id in zip(PROFILES, ("fig2", "fig1")):
        p = BoundaryProfile(kind)
        th = boundary_argmin_re(p)
        mod = np.abs(boundary_value(kind, fine))
        print(f"{kind}: min Re = {boundary_min_re(p):+.5f} at theta = {th:.4f}")
        print(f"  direct value at r = 1 - 1e-6: {direct_value(f_id, (1 - 1e-6) * np.exp(1j * th)):.5f}")
        print(f"  boundary inf |f| = {mod.min():.5f} at theta = {fine[mod.argmin()]:.4f}")


if __name__ == "__main__":
    main()
