"""Kernel backend selection.

The compiled extension is preferred; the pure-Python module is used when the
extension is missing or when the environment variable GAPPARTS_PURE_PYTHON
is set (useful for benchmarking and for testing both paths).
"""

import os

if os.environ.get("GAPPARTS_PURE_PYTHON"):
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"


def backend_name() -> str:
    """Which kernel implementation is active: 'c' or 'python'."""
    return BACKEND
