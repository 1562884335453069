"""Select the reduction kernel at import time.

The compiled extension is used when it was built; setting ``RTALG_PURE=1``
forces the pure-Python implementation (handy for debugging and for the
benchmark comparing the two).
"""
import os

BACKEND = "python"

if os.environ.get("RTALG_PURE", "") not in ("1", "true", "yes"):
    try:
        from ._kernel_c import MissingRule, Reducer, add_into  # noqa: F401
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._kernel_py import MissingRule, Reducer, add_into  # noqa: F401

from . import _kernel_py as pure  # noqa: E402,F401
