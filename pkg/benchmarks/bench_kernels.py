"""Compare the compiled and pure-Python per-cell kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Each case is run on both backends; outputs are checked for equality before
timings are reported.
"""

import argparse
import time

import numpy as np

from qpascal import _kernels_py
from qpascal.closed_form import f_m_digit_table

try:
    from qpascal import _kernels
except ImportError:
    _kernels = None

CASES = [
    ("pascal_mod_rows rows=1024 mod=6", "pascal_mod_rows", (1024, 6)),
    ("valuation_rows rows=729 p=3 cap=3", "valuation_rows", (729, 3, 3)),
    ("carpet_mod size=729 m=1 p=3", "carpet_mod", (729, np.array(f_m_digit_table(1, 3)), 3)),
    ("carpet_mod size=625 m=2 p=5", "carpet_mod", (625, np.array(f_m_digit_table(2, 5)), 5)),
]


def best_of(fn, args, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled extension not built; only the pure-Python backend is available")
    print(f"{'case':40s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}")
    for label, name, fargs in CASES:
        tp, outp = best_of(getattr(_kernels_py, name), fargs, args.repeat)
        if _kernels is None:
            print(f"{label:40s} {tp:11.4f} {'-':>11s} {'-':>8s}")
            continue
        tc, outc = best_of(getattr(_kernels, name), fargs, args.repeat)
        if not np.array_equal(outp, outc):
            raise SystemExit(f"backend mismatch in {label}")
        print(f"{label:40s} {tp:11.4f} {tc:11.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
