"""Kernel backend selection.

Set COREKIT_BACKEND=numpy to force the pure-numpy kernels, COREKIT_BACKEND=numba
to require the jitted ones; unset, numba is used when importable.  The two
backends produce identical results (tests pin this); only speed differs.
"""

import os

_numba_kernels = None
_numba_error = None


def _load_numba():
    global _numba_kernels, _numba_error
    if _numba_kernels is None and _numba_error is None:
        try:
            from . import _kernels
            _numba_kernels = _kernels
        except ImportError as exc:  # numba missing or broken
            _numba_error = exc
    return _numba_kernels


def backend_name() -> str:
    """Name of the backend that a kernel call would use right now."""
    choice = os.environ.get("COREKIT_BACKEND", "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if _load_numba() is None:
            raise RuntimeError(f"COREKIT_BACKEND=numba but numba is unavailable: {_numba_error}")
        return "numba"
    if choice not in ("", "auto"):
        raise RuntimeError(f"unknown COREKIT_BACKEND value: {choice!r}")
    return "numba" if _load_numba() is not None else "numpy"


def kernels():
    """The active kernel module."""
    if backend_name() == "numba":
        return _numba_kernels
    from . import _kernels_np
    return _kernels_np
