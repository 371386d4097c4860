"""Pick the compiled kernels when available, the numpy twins otherwise."""

import os

from . import _pykernels

pure = _pykernels

if os.environ.get("SYSGRAPH_PURE_PYTHON", "").strip() not in ("", "0"):
    kernels = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as kernels
        BACKEND = "cython"
    except ImportError:
        kernels = _pykernels
        BACKEND = "python"

try:
    from . import _ckernels as compiled
except ImportError:
    compiled = None


def thread_count(threads=None):
    """Resolve the worker count: explicit value, then SYSGRAPH_THREADS, then 1."""
    if threads is None:
        threads = os.environ.get("SYSGRAPH_THREADS") or 1
    threads = int(threads)
    if threads < 1:
        raise ValueError("thread count must be positive")
    return threads
