"""Kernel backend selection.

Hot loops are compiled with numba when it is available.  Setting
MVMLAB_BACKEND=numpy forces the vectorized / interpreted fallbacks;
MVMLAB_BACKEND=numba asks for the compiled path (silently falling back
to numpy when numba is not importable).
"""

import os

try:
    from numba import njit
    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        # no-op decorator so the same source works uncompiled
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn
        return wrap


def backend():
    """Return the active backend name, 'numba' or 'numpy'."""
    choice = os.environ.get("MVMLAB_BACKEND", "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        return "numba" if HAS_NUMBA else "numpy"
    return "numba" if HAS_NUMBA else "numpy"
