"""Select the elimination kernel at import time.

The compiled :mod:`lorentzhom._kernels` is used when it was built; setting
``LORENTZHOM_PURE_PYTHON=1`` forces the pure-Python kernel.
"""
import os

from lorentzhom import _kernels_py

if os.environ.get("LORENTZHOM_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from lorentzhom import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "python"
rref_int = _impl.rref_int
