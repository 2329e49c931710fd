# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled counting kernel over 64-bit adjacency masks.

Same branch-on-lowest-vertex backtracking as the pure twin; counts per size
stay below 2^64 for any graph that fits in the masks.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef void _count(uint64_t allowed, int size, const uint64_t* nbr,
                 uint64_t* counts) noexcept nogil:
    cdef int v
    cdef uint64_t low
    while allowed:
        v = __builtin_ctzll(allowed)
        low = (<uint64_t>1) << v
        _count(allowed & ~(nbr[v] | low), size + 1, nbr, counts)
        allowed ^= low
    counts[size] += 1


def count_by_size(masks):
    """Counts of independent sets by size; masks[i] is vertex i's neighbor bitmask."""
    cdef int n = len(masks)
    if n > 64:
        raise ValueError(f"kernel supports at most 64 vertices, got {n}")
    cdef uint64_t nbr[64]
    cdef uint64_t counts[65]
    cdef int i
    for i in range(n):
        nbr[i] = masks[i]
    for i in range(n + 1):
        counts[i] = 0
    cdef uint64_t full = 0
    if n > 0:
        full = (<uint64_t>0xFFFFFFFFFFFFFFFF) >> (64 - n)
    with nogil:
        _count(full, 0, nbr, counts)
    return [counts[i] for i in range(n + 1)]
