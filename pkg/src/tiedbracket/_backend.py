"""Kernel backend selection.

The resolution walk has a compiled implementation (`_kernel_cy`, built from
Cython) and a pure-Python twin (`_kernel_py`).  The compiled one is used
when importable; set TIEDBRACKET_BACKEND=python or =cython to force a
choice (forcing cython raises if the extension is missing).
"""

import os

_choice = os.environ.get("TIEDBRACKET_BACKEND", "auto").lower()

if _choice in ("auto", "", "cython", "compiled"):
    try:
        from . import _kernel_cy as kernel

        BACKEND_NAME = "cython"
    except ImportError:
        if _choice in ("cython", "compiled"):
            raise
        from . import _kernel_py as kernel

        BACKEND_NAME = "python"
elif _choice in ("python", "pure"):
    from . import _kernel_py as kernel

    BACKEND_NAME = "python"
else:
    raise RuntimeError(f"unknown TIEDBRACKET_BACKEND={_choice!r}")
