"""Backend selection for the state-sum kernel.

The compiled extension is used when it was built; set ``RATKNOT_PURE_PYTHON=1``
to force the pure-Python fallback.
"""

import os

if os.environ.get("RATKNOT_PURE_PYTHON", "") not in ("", "0"):
    from ._kernels_py import state_histogram

    BACKEND = "python"
else:
    try:
        from ._kernels import state_histogram

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import state_histogram

        BACKEND = "python"

__all__ = ["state_histogram", "BACKEND"]
