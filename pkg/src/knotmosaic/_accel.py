"""Numba switch for the hot kernels.

Set ``KNOTMOSAIC_DISABLE_NUMBA=1`` to force the pure-numpy code paths. The
flag is read once at import time; tests that compare both paths call the
kernels with an explicit ``backend`` argument instead.
"""
import os

DISABLE_NUMBA = os.environ.get("KNOTMOSAIC_DISABLE_NUMBA", "").strip().lower() in {
    "1",
    "true",
    "yes",
    "on",
}

try:
    if DISABLE_NUMBA:
        raise ImportError("numba disabled by KNOTMOSAIC_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


def default_backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


def resolve_backend(backend: str | None) -> str:
    if backend is None:
        return default_backend()
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}; expected 'numba' or 'numpy'")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is unavailable or disabled")
    return backend
