"""Select the word-matching backend.

The compiled extension is preferred when it imported cleanly; set
PATHALG_PURE=1 to force the pure-Python kernels (used by the benchmark
and as the fallback when the extension was not built).
"""

import os

if os.environ.get("PATHALG_PURE") == "1":
    from . import _matchpy as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _matchpy as _impl

BACKEND = _impl.BACKEND
find_leftmost = _impl.find_leftmost
find_rightmost = _impl.find_rightmost
contains_tip = _impl.contains_tip
has_tip_suffix = _impl.has_tip_suffix
occurrences = _impl.occurrences
