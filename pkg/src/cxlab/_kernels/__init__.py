"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``CXLAB_PURE_PYTHON=1`` to force the fallback.  Inputs wider than 64 bits
always go to the pure-Python implementation.
"""

import os

from . import _pykernels

try:
    if os.environ.get("CXLAB_PURE_PYTHON"):
        raise ImportError("pure python forced")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "compiled" if _ckernels is not None else "python"


def maximal_cliques(adjacency):
    if _ckernels is not None and len(adjacency) <= 64:
        return _ckernels.maximal_cliques(adjacency)
    return _pykernels.maximal_cliques(adjacency)


def nerve_maximal_families(sets, cap):
    if _ckernels is not None and len(sets) <= 64 and all(s >> 64 == 0 for s in sets):
        return _ckernels.nerve_maximal_families(sets, cap)
    return _pykernels.nerve_maximal_families(sets, cap)
