"""Kernel selection: the compiled extension when built, else pure Python.

Both implementations stay importable so tests and benchmarks can compare
them directly.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _kernels as _ext
except ImportError:  # extension not built
    _ext = None

HAVE_EXTENSION = _ext is not None
BACKEND = "cython" if HAVE_EXTENSION else "python"

py_mark_histogram = _pykernels.mark_histogram
ext_mark_histogram = _ext.mark_histogram if _ext is not None else None
mark_histogram = ext_mark_histogram or py_mark_histogram
