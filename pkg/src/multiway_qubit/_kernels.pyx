# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled brute-force kernel: walk every suffix word and tally a_K counts."""

from libc.stdlib cimport calloc, free
from libc.stdint cimport int64_t


def mark_histogram(int K, int k):
    """Return ``hist`` with ``hist[m]`` = number of length-k words over
    a_0..a_K containing exactly ``m`` copies of a_K.

    Every word is visited once through an odometer; the mark count is
    updated incrementally as digits roll over.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    if k < 0:
        raise ValueError("k must be nonnegative")
    cdef int *digits = <int *> calloc(k + 1, sizeof(int))
    cdef int64_t *hist = <int64_t *> calloc(k + 1, sizeof(int64_t))
    if digits == NULL or hist == NULL:
        free(digits)
        free(hist)
        raise MemoryError()
    cdef int m = 0
    cdef int pos
    try:
        with nogil:
            while True:
                hist[m] += 1
                pos = k - 1
                while pos >= 0:
                    if digits[pos] == K:
                        digits[pos] = 0
                        m -= 1
                        pos -= 1
                    else:
                        digits[pos] += 1
                        if digits[pos] == K:
                            m += 1
                        break
                if pos < 0:
                    break
        return [hist[i] for i in range(k + 1)]
    finally:
        free(digits)
        free(hist)
