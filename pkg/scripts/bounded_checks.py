"""Run the bounded overlap/frame verifications at larger sizes and time them.

    python scripts/bounded_checks.py --scale 2
"""

import argparse
import time

from frameless.coloring import ADDITIVE, PLANE, QUADRANT
from frameless.verifier import verify_frameless, verify_frameless_via_reduction, verify_overlap_free


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scale", type=int, default=1, help="multiplies every bound")
    args = ap.parse_args()
    s = args.scale

    checks = [
        ("overlap-free t", lambda: verify_overlap_free(8192 * s, 4096 * s)),
        ("quarter plane", lambda: verify_frameless(ADDITIVE, (0, 127 * s), (0, 127 * s), 64 * s, 64 * s)),
        ("full plane", lambda: verify_frameless(PLANE, (-64 * s, 63 * s), (-64 * s, 63 * s), 32 * s, 32 * s)),
        ("quadrant plane", lambda: verify_frameless(QUADRANT, (-64 * s, 63 * s), (-64 * s, 63 * s), 32 * s, 32 * s)),
        ("plane via reduction", lambda: verify_frameless_via_reduction(-4096 * s, 4096 * s, 1024 * s)),
    ]
    for name, run in checks:
        start = time.perf_counter()
        verdict = run()
        print(f"{name:22s} {verdict.outcome:4s} {time.perf_counter() - start:7.2f} s  {verdict.bounds}")
        if not verdict.passed:
            print(f"  witness: {verdict.witness}")


if __name__ == "__main__":
    main()
