"""Backend selection for the numeric kernels.

Set ``ONTOMATCH_NUMBA=0`` to force the pure-numpy code paths even when numba
is importable.
"""
import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is optional at runtime
    numba = None

_DISABLED = {"0", "false", "no", "off"}

NUMBA_AVAILABLE = numba is not None
USE_NUMBA = NUMBA_AVAILABLE and os.environ.get("ONTOMATCH_NUMBA", "1").strip().lower() not in _DISABLED


def njit(fn):
    """Compile ``fn`` with numba when it is installed, else return it unchanged."""
    if numba is None:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
