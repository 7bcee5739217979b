"""Backend selection for the hot kernels.

The compiled extension is used when it was built and imports cleanly;
otherwise the pure-Python module is used.  Setting ``TILEFORGE_PURE_PYTHON=1``
forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

FOUND = _pykernels.FOUND
NOT_FOUND = _pykernels.NOT_FOUND
EXHAUSTED = _pykernels.EXHAUSTED

MODE_MOORE = _pykernels.MODE_MOORE
MODE_AXIS = _pykernels.MODE_AXIS
MODE_INTERIOR = _pykernels.MODE_INTERIOR


def _load():
    if os.environ.get("TILEFORGE_PURE_PYTHON", "").strip() not in ("", "0"):
        return _pykernels, "python"
    try:
        from . import _ckernels
    except ImportError:
        return _pykernels, "python"
    return _ckernels, "cython"


_impl, BACKEND = _load()

exact_cover = _impl.exact_cover
find_clique = _impl.find_clique
contact_labels = _impl.contact_labels
min_cross_distance = _impl.min_cross_distance
shifted_overlap = _impl.shifted_overlap


def available_backends():
    """Map backend name to kernel module for every importable backend."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
