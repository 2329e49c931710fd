"""Pure-Python counting kernel; the reference for the compiled twin.

Backtracking over the lowest remaining vertex: either take it (drop its
closed neighborhood) or skip it.  Every leaf of that tree is a distinct
independent set, so the running time is proportional to the number of
independent sets, not to 2^V.
"""

from __future__ import annotations

from typing import Sequence


def count_by_size(masks: Sequence[int]) -> list[int]:
    n = len(masks)
    if n > 64:
        raise ValueError(f"kernel supports at most 64 vertices, got {n}")
    counts = [0] * (n + 1)
    stack = [((1 << n) - 1, 0)]
    push = stack.append
    while stack:
        allowed, size = stack.pop()
        while allowed:
            low = allowed & -allowed
            v = low.bit_length() - 1
            push((allowed & ~(masks[v] | low), size + 1))
            allowed ^= low
        counts[size] += 1
    return counts
