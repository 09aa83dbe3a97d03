"""Kernel backend selection: compiled extension when available, else pure
Python.  Set CHISIGN_PURE_PYTHON=1 to force the fallback."""

from __future__ import annotations

import os

if os.environ.get("CHISIGN_PURE_PYTHON"):
    from . import _kernel_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _kernel_py as _impl

        BACKEND = "python"

closure = _impl.closure
class_partition = _impl.class_partition
positions = _impl.positions
find_conjugator = _impl.find_conjugator
