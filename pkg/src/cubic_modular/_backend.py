"""Select the series-kernel backend at import time.

The compiled ``_ckernels`` extension is preferred; the pure-Python
``_pykernels`` module is used when the extension was not built or when
``CUBIC_MODULAR_PURE_PYTHON`` is set to a non-empty value other than "0".
"""

import os

from . import _pykernels

_force_python = os.environ.get("CUBIC_MODULAR_PURE_PYTHON", "") not in ("", "0")

kernels = _pykernels
BACKEND = "python"

if not _force_python:
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        kernels = _ckernels
        BACKEND = "cython"


def available_backends():
    """Map of backend name to kernel module for every importable backend."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        return out
    out["cython"] = _ckernels
    return out
