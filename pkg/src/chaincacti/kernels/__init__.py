"""Independent-set counting kernels.

The compiled extension is picked at import time when present; setting
CHAINCACTI_PURE=1 in the environment forces the pure-Python fallback.  Both
implement the same contract: given per-vertex neighbor bitmasks, return the
number of independent sets of each size, index 0 (the empty set) through
len(masks).
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _pure

if os.environ.get("CHAINCACTI_PURE"):
    _impl = _pure.count_by_size
    BACKEND = "pure"
else:
    try:
        from . import _speedups

        _impl = _speedups.count_by_size
        BACKEND = "cython"
    except ImportError:
        _impl = _pure.count_by_size
        BACKEND = "pure"


def count_independent_sets(masks: Sequence[int]) -> list[int]:
    """Counts of independent sets grouped by size, smallest size first."""
    return _impl(masks)
