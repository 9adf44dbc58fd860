"""Numerical core: windowed stencil convolution with constant extension.

Two interchangeable implementations exist: a compiled Cython kernel
(``_speedups``) and a pure NumPy reference (``_reference``).  The compiled
one is preferred when its extension module is importable; set the
environment variable ``IDESPREAD_BACKEND`` to ``numpy`` or ``cython`` to
force a choice (``cython`` raises if the extension is missing).
"""

import os

_requested = os.environ.get("IDESPREAD_BACKEND", "auto").strip().lower()

if _requested in ("auto", "", "cython"):
    try:
        from ._speedups import convolve_ext
        BACKEND = "cython"
    except ImportError:
        if _requested == "cython":
            raise
        from ._reference import convolve_ext
        BACKEND = "numpy"
elif _requested == "numpy":
    from ._reference import convolve_ext
    BACKEND = "numpy"
else:
    raise ImportError(
        f"unknown IDESPREAD_BACKEND={_requested!r}; use 'auto', 'cython' or 'numpy'"
    )


def available_backends():
    """Names of the importable convolution backends."""
    names = ["numpy"]
    try:
        from . import _speedups  # noqa: F401
        names.insert(0, "cython")
    except ImportError:
        pass
    return names


__all__ = ["convolve_ext", "BACKEND", "available_backends"]
