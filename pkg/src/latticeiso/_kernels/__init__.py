"""Hot loops, compiled when possible.

The Cython module ``_ckernels`` is used if it was built; otherwise the
pure-Python ``_pykernels`` is loaded. Setting ``LATTICEISO_PURE=1`` forces the
fallback. ``BACKEND`` names whichever was picked.
"""

import os

from . import _pykernels as pure

if os.environ.get("LATTICEISO_PURE", "") not in ("", "0"):
    compiled = None
else:
    try:
        from . import _ckernels as compiled
    except ImportError:
        compiled = None

if compiled is not None:
    count_paths = compiled.count_paths
    walk_counts = compiled.walk_counts
    BACKEND = "cython"
else:
    count_paths = pure.count_paths
    walk_counts = pure.walk_counts
    BACKEND = "python"

__all__ = ["count_paths", "walk_counts", "BACKEND", "pure", "compiled"]
