"""Kernel backend selected at import: compiled if built, else pure Python.

Set ``QPASCAL_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("QPASCAL_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

pascal_mod_rows = _impl.pascal_mod_rows
valuation_rows = _impl.valuation_rows
carpet_mod = _impl.carpet_mod

__all__ = ["BACKEND", "pascal_mod_rows", "valuation_rows", "carpet_mod"]
