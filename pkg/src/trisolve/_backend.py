"""Kernel backend selection.

The compiled extension is preferred when present; the pure-Python kernels are
a drop-in replacement. Set TRISOLVE_BACKEND=python (or =compiled) to force a
specific backend, e.g. for benchmarking or debugging.
"""

import os

from . import _kernels_py

_choice = os.environ.get("TRISOLVE_BACKEND", "auto").strip().lower()

if _choice in ("auto", ""):
    try:
        from . import _kernels as kernels
    except ImportError:
        kernels = _kernels_py
elif _choice == "compiled":
    from . import _kernels as kernels
elif _choice == "python":
    kernels = _kernels_py
else:
    raise ImportError(
        f"TRISOLVE_BACKEND={_choice!r} not recognized; "
        "expected 'auto', 'compiled' or 'python'"
    )


def backend_name() -> str:
    """Name of the kernel backend in use: 'compiled' or 'python'."""
    return kernels.BACKEND_NAME
