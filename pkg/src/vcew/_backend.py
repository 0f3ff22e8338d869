"""Kernel backend selection: compiled extension with pure-Python fallback.

Set ``VCEW_PURE_PYTHON=1`` to force the fallback (useful for the
benchmark and for debugging).
"""

from __future__ import annotations

import os

if os.environ.get("VCEW_PURE_PYTHON") == "1":
    from . import _kernel_py as kernel
else:
    try:
        from . import _kernel as kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _kernel_py as kernel  # type: ignore[no-redef]


def backend_name() -> str:
    """'cython' when the compiled kernel is active, else 'python'."""
    return kernel.BACKEND_NAME
