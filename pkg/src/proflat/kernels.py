"""Kernel backend selection.

The compiled extension is preferred; the numpy fallback has identical
contracts and scan orders. Set PROFLAT_PURE=1 to force the fallback
(useful for benchmarking and debugging).
"""

import os

if os.environ.get("PROFLAT_PURE", "") not in ("", "0"):
    from . import _kernels_py as _impl

    BACKEND = "pure (forced by PROFLAT_PURE)"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "pure (extension not built)"

closure_bfs = _impl.closure_bfs
distributive_violation = _impl.distributive_violation
modular_violation = _impl.modular_violation
hopcroft_karp = _impl.hopcroft_karp
