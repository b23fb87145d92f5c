#!/usr/bin/env python3
"""Compare the compiled and pure-Python visibility kernels.

Generates pseudo-triangles of increasing size and times the full O(n^3)
visibility-graph computation with each kernel, printing CSV and the speedup.
"""

from __future__ import annotations

import argparse
import time

from polyvis import _kernels_py, gen_pseudo_triangle

try:
    from polyvis import _kernels_c
except ImportError:
    _kernels_c = None


def _time(fn, coords, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(coords)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 40, 80, 160])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if _kernels_c is None:
        print("compiled kernel not built; run `python3 setup.py build_ext --inplace`")
        return 1

    print("n,m,pure_ms,compiled_ms,speedup")
    for n in args.sizes:
        coords = gen_pseudo_triangle(n, args.seed).coords()
        pure = _time(_kernels_py.visibility_edges, coords, args.repeat)
        comp = _time(_kernels_c.visibility_edges, coords, args.repeat)
        m = len(_kernels_py.visibility_edges(coords))
        print(f"{n},{m},{pure * 1e3:.2f},{comp * 1e3:.2f},{pure / comp:.1f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
