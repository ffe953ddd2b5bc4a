"""Select the clique kernel implementation at import time.

The compiled extension is used when it was built; otherwise the pure-Python
kernels.  ``JOINTSIZE_BACKEND=python`` forces the fallback and
``JOINTSIZE_BACKEND=compiled`` makes a missing extension an import error.
"""

import os

from . import _kernels_py

_choice = os.environ.get("JOINTSIZE_BACKEND", "auto").lower()

if _choice == "python":
    kernels = _kernels_py
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        if _choice == "compiled":
            raise
        kernels = _kernels_py


def available() -> dict:
    """Map backend name to kernel module for every importable backend."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels  # type: ignore[attr-defined]

        out["compiled"] = _kernels
    except ImportError:
        pass
    return out


def get(name=None):
    if name is None:
        return kernels
    try:
        return available()[name]
    except KeyError:
        raise ValueError(f"backend {name!r} is not available") from None
