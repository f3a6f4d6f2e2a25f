"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``THREECOLOR_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os
from typing import Sequence

from threecolor import _pykernels

_c = None
if os.environ.get("THREECOLOR_PURE", "") in ("", "0"):
    try:
        from threecolor import _ckernels as _c
    except ImportError:  # extension not built
        _c = None

BACKEND = "cython" if _c is not None else "python"
_C_MAX_N = 64


def find_coloring(masks: Sequence[int], k, order, fixed, break_symmetry):
    if _c is not None and len(masks) <= _C_MAX_N:
        return _c.find_coloring(masks, k, order, fixed, break_symmetry)
    return _pykernels.find_coloring(masks, k, order, fixed, break_symmetry)


def all_colorings(masks: Sequence[int], k, order, fixed, budget):
    if _c is not None and len(masks) <= _C_MAX_N:
        return _c.all_colorings(masks, k, order, fixed, budget)
    return _pykernels.all_colorings(masks, k, order, fixed, budget)


def canonical_order(n: int, masks: Sequence[int]):
    if _c is not None and n <= _C_MAX_N:
        return _c.canonical_order(n, masks)
    return _pykernels.canonical_order(n, masks)
