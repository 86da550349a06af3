"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``LPCHANGE_PURE=1`` to force the pure-Python kernels.
"""

import os

from . import _pykernels

if os.environ.get("LPCHANGE_PURE", "") not in ("", "0"):
    kernels = _pykernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        kernels = _pykernels

NAME = kernels.NAME
