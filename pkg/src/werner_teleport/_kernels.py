"""Select the eigenvalue kernel at import time.

The compiled extension is preferred; set ``WERNER_TELEPORT_PURE_PYTHON=1`` to
force the pure-Python fallback.
"""
import os

from . import _jacobi_py

if os.environ.get("WERNER_TELEPORT_PURE_PYTHON", "") not in ("", "0"):
    _jacobi_c = None
else:
    try:
        from . import _jacobi_c
    except ImportError:
        _jacobi_c = None

if _jacobi_c is not None:
    jacobi_eigvalsh = _jacobi_c.jacobi_eigvalsh
    BACKEND = "cython"
else:
    jacobi_eigvalsh = _jacobi_py.jacobi_eigvalsh
    BACKEND = "python"

python_jacobi_eigvalsh = _jacobi_py.jacobi_eigvalsh
compiled_jacobi_eigvalsh = None if _jacobi_c is None else _jacobi_c.jacobi_eigvalsh
