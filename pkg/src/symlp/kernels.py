"""Kernel selection: compiled extension if importable, pure Python otherwise.

Set SYMLP_PURE_PYTHON=1 to force the pure-Python kernels (useful for
debugging and for the benchmark baseline).
"""

import os

if os.environ.get("SYMLP_PURE_PYTHON"):
    from symlp import _kernels_py as _impl
else:
    try:
        from symlp import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        from symlp import _kernels_py as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION
mat_mul_q = _impl.mat_mul_q
pivot_q = _impl.pivot_q
