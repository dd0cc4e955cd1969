#!/usr/bin/env python3
"""Time the compiled kernel against the pure-Python twin.

Runs the same tensor-sum workloads through bivar._kernel (when built)
and bivar._kernel_py, reports per-call medians and the speedup, and
verifies that the values agree before trusting any timing.

Usage: python benchmarks/compare_backends.py [--repeat N]
"""

import argparse
import time
from statistics import median

from bivar import _kernel_py

try:
    from bivar import _kernel
except ImportError:
    _kernel = None

# (label, fn-name, args) -- the BCD cases mirror single-weight queries at
# growing l; the A case exercises the simpler partition product
WORKLOADS = [
    ("BCD n=5 d=3 l=4", "tensor_sum_bcd", (5, 3, 4, 18, (1, 2, 0, 1), 2)),
    ("BCD n=5 d=3 l=6", "tensor_sum_bcd", (5, 3, 6, 20, (1, 1, 1, 0, 1, 0), 2)),
    ("BCD n=7 d=5 l=6", "tensor_sum_bcd", (7, 5, 6, 24, (2, 1, 1, 1, 0, 0), 1)),
    ("BCD n=6 d=4 l=8", "tensor_sum_bcd", (6, 4, 8, 30, (1, 1, 1, 1, 0, 1, 0, 0), 2)),
    ("A   n=6 l=8", "tensor_sum_a", (6, 8, (1, 1, 1, 1, 0, 1, 0, 0))),
]


def time_call(fn, args, repeat):
    runs = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        runs.append(time.perf_counter() - start)
    return median(runs)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=7)
    args = parser.parse_args()

    if _kernel is None:
        print("compiled kernel not built; only the pure backend is available")

    print(f"{'workload':24} {'pure (ms)':>12} {'compiled (ms)':>14} {'speedup':>9}")
    for label, name, call_args in WORKLOADS:
        pure_fn = getattr(_kernel_py, name)
        pure_t = time_call(pure_fn, call_args, args.repeat)
        if _kernel is None:
            print(f"{label:24} {pure_t * 1e3:12.3f} {'-':>14} {'-':>9}")
            continue
        fast_fn = getattr(_kernel, name)
        if pure_fn(*call_args) != fast_fn(*call_args):
            raise SystemExit(f"backend disagreement on {label}: benchmark aborted")
        fast_t = time_call(fast_fn, call_args, args.repeat)
        print(f"{label:24} {pure_t * 1e3:12.3f} {fast_t * 1e3:14.3f} "
              f"{pure_t / fast_t:8.1f}x")


if __name__ == "__main__":
    main()
