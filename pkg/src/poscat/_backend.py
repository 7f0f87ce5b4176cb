"""Kernel backend selection.

The compiled extension is preferred; the pure-Python module is the drop-in
fallback. POSCAT_PURE=1 forces the fallback (used by the benchmark and by
tests that exercise both paths).
"""

from __future__ import annotations

import os

if os.environ.get("POSCAT_PURE"):
    from . import _purekernels as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _purekernels as _impl  # type: ignore[no-redef]

BACKEND = _impl.NAME
MAX_ENUM_POINTS = _impl.MAX_ENUM_POINTS
rtclosure = _impl.rtclosure
closed_extensions = _impl.closed_extensions
