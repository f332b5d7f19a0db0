"""Kernel backend selection.

The compiled extension ``starcomm._core`` is preferred when importable;
otherwise the NumPy fallback is used. Set ``STARCOMM_PURE_PYTHON=1`` to
force the fallback (useful for benchmarking and debugging).
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py


def load_backend(name: str) -> ModuleType:
    """Load a kernel backend by name: 'compiled' or 'python'."""
    if name == "python":
        return _kernels_py
    if name == "compiled":
        from . import _core

        return _core
    raise ValueError(f"unknown backend {name!r}")


def _select() -> ModuleType:
    if os.environ.get("STARCOMM_PURE_PYTHON"):
        return _kernels_py
    try:
        return load_backend("compiled")
    except ImportError:
        return _kernels_py


kernels = _select()


def backend_name() -> str:
    """Name of the active kernel backend ('compiled' or 'python')."""
    return kernels.BACKEND_NAME
