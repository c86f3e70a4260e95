"""Select the compiled LR kernel when it is importable, else the Python one.

Set ``GRASSFP_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("GRASSFP_PURE_PYTHON") == "1":
    _impl = None
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = None

BACKEND = "cython" if _impl is not None else "python"
lr_count = _impl.lr_count if _impl is not None else _kernels_py.lr_count
lr_count_python = _kernels_py.lr_count

__all__ = ["BACKEND", "lr_count", "lr_count_python"]
