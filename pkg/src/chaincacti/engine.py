"""Three independent evaluators for independence polynomials.

- ``indpoly_bruteforce``: direct enumeration over adjacency bitmasks, capped
  at 32 vertices.  The oracle the other two are measured against.
- ``indpoly_recursive``: the generic deletion identity
  i(G) = i(G - u) + x * i(G - N[u]) with component factorization and
  memoization; works on any graph.
- ``indpoly_chain``: a left-to-right transfer scan that exploits the chain
  structure; linear in the number of cycles.

All three return exact integer-coefficient polynomials and must agree; the
verification module checks that exhaustively at desk scale.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .chain_model import ChainSpec, LabeledGraph, SpecError, validate
from .closed_forms import path_poly
from .kernels import count_independent_sets
from .polynomial import UniPoly

#: Hard ceiling for brute-force enumeration.
BRUTE_FORCE_CAP = 32


class VertexCapError(ValueError):
    """Brute-force request beyond the vertex ceiling."""


def _check_indpoly(p: UniPoly, num_vertices: int) -> UniPoly:
    # Boundary sanity for every finished independence polynomial.
    assert p.coefficient(0) == 1, "empty set must be counted once"
    assert p.coefficient(1) == num_vertices, "singletons must count vertices"
    assert all(c >= 0 for c in p.coeffs), "counts cannot be negative"
    return p


def indpoly_bruteforce(g: LabeledGraph) -> UniPoly:
    """Independence polynomial by direct enumeration (|V| <= 32)."""
    if g.num_vertices > BRUTE_FORCE_CAP:
        raise VertexCapError(
            f"brute force capped at {BRUTE_FORCE_CAP} vertices, got {g.num_vertices}"
        )
    counts = count_independent_sets(g.adjacency_masks())
    return _check_indpoly(UniPoly(counts), g.num_vertices)


def indpoly_recursive(g: LabeledGraph) -> UniPoly:
    """Independence polynomial by pivot recursion with memoization.

    Pivot: a maximum-degree vertex of the current induced subgraph, ties
    broken by smallest id.  Subgraphs are keyed by their surviving-vertex
    bitset; connected components are solved independently and multiplied.
    Coefficients are kept as plain lists internally and boxed once at the end.
    """
    masks = g.adjacency_masks()
    nv = g.num_vertices
    memo: dict[int, list[int]] = {}

    def solve(sub: int) -> list[int]:
        if sub == 0:
            return [1]
        cached = memo.get(sub)
        if cached is not None:
            return cached
        comps = _components(sub, masks)
        if len(comps) > 1:
            result = [1]
            for comp in comps:
                result = _mul(result, solve(comp))
        else:
            v = _pivot(sub, masks)
            bit = 1 << v
            without = solve(sub & ~bit)
            closed = solve(sub & ~(masks[v] | bit))
            result = _add(without, [0] + closed)
        memo[sub] = result
        return result

    return _check_indpoly(UniPoly(solve((1 << nv) - 1)), nv)


def _pivot(sub: int, masks: list[int]) -> int:
    best, best_deg = -1, -1
    rem = sub
    while rem:
        low = rem & -rem
        v = low.bit_length() - 1
        rem ^= low
        deg = (masks[v] & sub).bit_count()
        if deg > best_deg:
            best, best_deg = v, deg
    return best


def _components(sub: int, masks: list[int]) -> list[int]:
    comps = []
    rem = sub
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= masks[low.bit_length() - 1]
                f ^= low
            frontier = reach & rem & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def _add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, c in enumerate(b):
        out[i] += c
    return out


def _mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


# -- transfer scan ----------------------------------------------------------


def arc_poly(a: int, s: int, t: int) -> UniPoly:
    """Weight of one arc of ``a`` interior vertices between two cut vertices.

    s and t say whether the cut vertices at each end are in the independent
    set; an occupied end forbids the adjacent interior vertex, so the arc
    contributes i(P_{a-s-t}).  An empty arc with both ends occupied is the
    impossible case (the cut vertices are adjacent): weight 0.
    """
    if a < 0:
        raise ValueError(f"arc length {a} < 0")
    if s not in (0, 1) or t not in (0, 1):
        raise ValueError("endpoint occupancies must be 0 or 1")
    return path_poly(a - s - t)


class TransferState(NamedTuple):
    """Independence-polynomial mass of a chain prefix, split by its exit vertex.

    ``p`` counts the independent sets of the prefix that avoid the exit cut
    vertex; ``q`` counts those that contain it (with the exit vertex's own x
    factor included, so q is divisible by x and p + q is the prefix's full
    independence polynomial).
    """

    p: UniPoly
    q: UniPoly


def _initial_state(h: int) -> TransferState:
    return TransferState(path_poly(h - 1), path_poly(h - 3).shift(1))


def _transition(state: TransferState, h: int, k: int) -> TransferState:
    # Cross one internal cycle of size h whose exit sits at position k.
    # The cycle contributes two arcs around entry and exit, of k-1 and
    # h-k-1 interior vertices.
    a, b = k - 1, h - k - 1
    p, q = state
    p2 = p * arc_poly(a, 0, 0) * arc_poly(b, 0, 0) + q * arc_poly(a, 1, 0) * arc_poly(b, 1, 0)
    q2 = (p * arc_poly(a, 0, 1) * arc_poly(b, 0, 1) + q * arc_poly(a, 1, 1) * arc_poly(b, 1, 1)).shift(1)
    return TransferState(p2, q2)


@lru_cache(maxsize=4096)
def _scan(spec: ChainSpec, through_cycle: int) -> TransferState:
    state = _initial_state(spec.cycle_sizes[0])
    for j in range(2, through_cycle + 1):
        state = _transition(state, spec.cycle_sizes[j - 1], spec.positions[j - 2])
    return state


def transfer_state(spec: ChainSpec, through_cycle: int) -> TransferState:
    """State after absorbing cycles 1..through_cycle (1 <= through < n).

    The exit vertex is the attachment position on cycle ``through_cycle``:
    position 1 on the first cycle, the spec's position on internal ones.
    Recently scanned prefixes are cached, so the per-position deletion
    queries of the extremal module pay for the scan once per spec.
    """
    spec = validate(spec)
    n = spec.length
    if not 1 <= through_cycle <= n - 1:
        raise SpecError(f"through_cycle {through_cycle} outside 1..{n - 1}")
    return _scan(spec, through_cycle)


def indpoly_chain(spec: ChainSpec) -> UniPoly:
    """Independence polynomial of a chain cactus by the transfer scan."""
    spec = validate(spec)
    n = spec.length
    if n < 1:
        raise SpecError("chain engine requires at least one cycle")
    nv = sum(spec.cycle_sizes) - (n - 1)
    if n == 1:
        state = _initial_state(spec.cycle_sizes[0])
        return _check_indpoly(state.p + state.q, nv)
    state = transfer_state(spec, n - 1)
    h = spec.cycle_sizes[-1]
    result = state.p * path_poly(h - 1) + state.q * path_poly(h - 3)
    return _check_indpoly(result, nv)


def indpoly_chain_minus_last_vertex(spec: ChainSpec, k: int) -> UniPoly:
    """Independence polynomial of the chain with vertex k of the last cycle removed.

    k runs over 1..h_n - 1 (position h_n is the cut vertex shared with the
    previous cycle).  Removing v_k splits the last cycle into two arcs of
    k-1 and h_n-1-k interior vertices around the remaining cut vertex.
    """
    spec = validate(spec)
    n = spec.length
    if n < 2:
        raise SpecError("vertex deletion on the last cycle requires n >= 2")
    h = spec.cycle_sizes[-1]
    if not 1 <= k <= h - 1:
        raise SpecError(f"deleted position {k} outside 1..{h - 1}")
    state = transfer_state(spec, n - 1)
    result = state.p * path_poly(k - 1) * path_poly(h - 1 - k) + state.q * path_poly(
        k - 2
    ) * path_poly(h - 2 - k)
    nv = sum(spec.cycle_sizes) - (n - 1) - 1
    return _check_indpoly(result, nv)
