"""Write PBM renderings of the three frameless colorings.

    python scripts/render_figures.py --out figures --side 64
"""

import argparse
from pathlib import Path

from frameless.coloring import ADDITIVE, PLANE, QUADRANT, render_pbm, window


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    ap.add_argument("--side", type=int, default=64)
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    half = args.side // 2
    jobs = {
        "quarter_plane.pbm": window(ADDITIVE, 0, args.side - 1, 0, args.side - 1),
        "full_plane.pbm": window(PLANE, -half, half - 1, -half, half - 1),
        "quadrant_plane.pbm": window(QUADRANT, -half, half - 1, -half, half - 1),
    }
    for name, grid in jobs.items():
        (out / name).write_bytes(render_pbm(grid))
        print(f"wrote {out / name} ({grid.rows}x{grid.cols})")


if __name__ == "__main__":
    main()
