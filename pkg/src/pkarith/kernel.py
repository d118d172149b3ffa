"""Scan-kernel backend selection.

Prefers the compiled extension; falls back to the pure-Python kernel
when the extension is missing. Set PKARITH_PURE=1 to force the fallback
(useful for benchmarking and for debugging the compiled path).
"""

import os

if os.environ.get("PKARITH_PURE") == "1":
    from . import _kernel_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernel_py as _impl

        BACKEND = "pure"

scan_core_triplets = _impl.scan_core_triplets
