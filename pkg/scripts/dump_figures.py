"""Write the disc point clouds for both figures and summarise their distance from 0.

    python scripts/dump_figures.py --out results/
"""
import argparse
from pathlib import Path

import numpy as np

from oproot.io import atomic_write_text
from oproot.verify import disc_image_points, winding_number


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--radial", type=int, default=256)
    ap.add_argument("--angular", type=int, default=720)
    args = ap.parse_args()
    for f_id in ("fig1", "fig2"):
        pts = disc_image_points(f_id, args.radial, args.angular).ravel()
        path = args.out / f"{f_id}_points.csv"
        atomic_write_text(path, "".join(f"{z.real:.17g},{z.imag:.17g}\n" for z in pts))
        winds = [winding_number(f_id, r) for r in (0.9, 0.99, 0.999)]
        print(f"{f_id}: {pts.size} points -> {path}; min |f| = {np.abs(pts).min():.4f}; winding {winds}")


if __name__ == "__main__":
    main()
