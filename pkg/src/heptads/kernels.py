"""Backend selection for the hot loops.

The compiled extension is used when it imports; set ``HEPTADS_PURE_PYTHON=1``
to force the pure-Python fallback.  Both expose ``closure`` and
``pentagram_search`` with identical signatures and results.
"""

import os

from . import _pykernels

if os.environ.get("HEPTADS_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels
        BACKEND = "python"
    else:
        BACKEND = "cython"

closure = _impl.closure
pentagram_search = _impl.pentagram_search

__all__ = ["BACKEND", "closure", "pentagram_search"]
