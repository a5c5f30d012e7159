"""Backend selection for the numeric kernels.

Kernels are written once against numpy arrays.  When numba is importable and
``GAMMAGRAPHS_NO_NUMBA`` is unset (or ``0``), they are compiled with
``numba.njit``; otherwise the same source runs as plain numpy/Python.
"""

import os

_flag = os.environ.get("GAMMAGRAPHS_NO_NUMBA", "").strip().lower()
_disabled = _flag not in ("", "0", "false", "no")

try:
    if _disabled:
        raise ImportError
    import numba
except ImportError:
    numba = None

USE_NUMBA = numba is not None
BACKEND = "numba" if USE_NUMBA else "numpy"


def jit(func):
    """Compile ``func`` with numba when enabled, else return it unchanged.

    The uncompiled function stays reachable as ``.py_func`` in both modes so
    benchmarks and tests can drive the fallback path explicitly.
    """
    if USE_NUMBA:
        return numba.njit(cache=True)(func)
    func.py_func = func
    return func
