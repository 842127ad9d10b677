"""Kernel backend selection.

The hot numeric kernels (Kraus conjugation sums, Hermitian eigenvalues,
entropy accumulation) exist in two interchangeable implementations: a
numba-jitted one and a pure-numpy fallback.  The environment variable
``PAULIMEM_BACKEND`` picks one at import time:

* ``numba``  -- require the jitted kernels (error if numba is missing),
* ``numpy``  -- force the pure-numpy fallback,
* ``auto``   -- (default) numba when importable, numpy otherwise.
"""

from __future__ import annotations

import os

ENV_VAR = "PAULIMEM_BACKEND"

try:
    import numba  # noqa: F401

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False


def _resolve() -> str:
    requested = os.environ.get(ENV_VAR, "auto").strip().lower()
    if requested not in ("auto", "numba", "numpy"):
        raise ValueError(
            f"{ENV_VAR} must be one of 'numba', 'numpy', 'auto'; got {requested!r}"
        )
    if requested == "numpy":
        return "numpy"
    if requested == "numba" and not HAS_NUMBA:
        raise ImportError(f"{ENV_VAR}=numba was requested but numba is not installed")
    return "numba" if HAS_NUMBA else "numpy"


ACTIVE_BACKEND = _resolve()


def active_backend() -> str:
    """Name of the kernel backend selected at import time ('numba' or 'numpy')."""
    return ACTIVE_BACKEND
