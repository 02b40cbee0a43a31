"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``."""

from __future__ import annotations

import itertools


def mark_histogram(K: int, k: int) -> list[int]:
    if K < 1:
        raise ValueError("K must be >= 1")
    if k < 0:
        raise ValueError("k must be nonnegative")
    hist = [0] * (k + 1)
    for suffix in itertools.product(range(K + 1), repeat=k):
        hist[suffix.count(K)] += 1
    return hist
