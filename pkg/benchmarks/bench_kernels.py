"""Compare the compiled and pure-Python brute-force kernels, and contrast
brute force with the closed form.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from multiway_qubit import kernels
from multiway_qubit.gaussian import ONE
from multiway_qubit.renormalization import QubitTerm
from multiway_qubit.templates import template_closedform

CASES = [(2, 10), (2, 13), (3, 10), (9, 6), (1, 22)]


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"selected backend: {kernels.BACKEND}")
    print(f"{'K':>3} {'k':>3} {'words':>10} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for K, k in CASES:
        py = best_of(lambda: kernels.py_mark_histogram(K, k), args.repeat)
        if kernels.ext_mark_histogram is not None:
            assert kernels.ext_mark_histogram(K, k) == kernels.py_mark_histogram(K, k)
            ext = best_of(lambda: kernels.ext_mark_histogram(K, k), args.repeat)
            ext_s, speedup = f"{ext:10.4f}", f"{py / ext:7.1f}x"
        else:
            ext_s, speedup = f"{'n/a':>10}", f"{'n/a':>8}"
        print(f"{K:>3} {k:>3} {(K + 1) ** k:>10} {py:10.4f} {ext_s} {speedup}")

    print("\nclosed form (K + i)^k, exact:")
    for K, k in [(2, 13), (100, 10**3), (100, 10**4), (100, 10**5)]:
        t = best_of(lambda: template_closedform(K, k, QubitTerm(ONE, 0)), args.repeat)
        print(f"  K={K:<4} k={k:<7} {t:.4f}s")


if __name__ == "__main__":
    main()
