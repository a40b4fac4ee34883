"""Subgraph-density checks: does every vertex set V' induce fewer than (1-delta)|V'| edges?

``e(V')`` counts edges whose distinct vertices all lie in V'. The flow mode
solves a maximum-closure problem: pick a set of edges and vertices, every
picked edge forcing its vertices, maximising ``q*e(V') - p*|V'|`` where
``p/q = 1 - delta`` in lowest terms. It is decided by one max-flow with
source -> edge capacity q, edge -> vertex capacity "infinite" and vertex ->
sink capacity p.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Optional, Union

import numpy as np
from scipy.sparse import csr_array
from scipy.sparse.csgraph import maximum_flow

from .model import Hypergraph

EXACT_MAX_VERTICES = 20
_INT32_MAX = 2**31 - 1

Number = Union[int, float, Fraction]


class SizeError(ValueError):
    """Instance too large for exhaustive enumeration."""


def as_fraction(x: Number) -> Fraction:
    """Exact rational for x; floats are read through their shortest repr (0.01 -> 1/100)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def _edge_masks(H: Hypergraph) -> np.ndarray:
    masks = np.zeros(H.m, dtype=np.int64)
    for e, verts in enumerate(H.projected):
        for v in verts:
            masks[e] |= 1 << v
    return masks


def induced_edge_counts(H: Hypergraph) -> np.ndarray:
    """``e(S)`` for every vertex bitmask S in ``0 .. 2^n - 1``."""
    if H.n > EXACT_MAX_VERTICES:
        raise SizeError(f"exact enumeration needs n <= {EXACT_MAX_VERTICES}, got {H.n}")
    subsets = np.arange(1 << H.n, dtype=np.int64)
    counts = np.zeros(1 << H.n, dtype=np.int64)
    for mask in _edge_masks(H):
        counts += (subsets & mask) == mask
    return counts


def _mask_to_set(mask: int) -> frozenset:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def _density_exact(H: Hypergraph, ratio: Fraction) -> tuple[bool, Optional[frozenset]]:
    counts = induced_edge_counts(H)
    sizes = np.array([bin(s).count("1") for s in range(1 << H.n)], dtype=np.int64)
    # violation: q*e(S) >= p*|S| for a nonempty S
    bad = ratio.denominator * counts >= ratio.numerator * sizes
    bad[0] = False
    hits = np.flatnonzero(bad)
    if hits.size == 0:
        return True, None
    return False, _mask_to_set(int(hits[0]))


def max_closure(H: Hypergraph, p: int, q: int) -> tuple[int, frozenset]:
    """Maximise ``q*e(V') - p*|V'|`` over vertex sets V' (empty set allowed).

    Returns the optimum and the largest optimal vertex set; the latter is
    nonempty whenever a nonempty set reaches the optimum.
    """
    if p < 0 or q < 0:
        raise ValueError("capacities must be non-negative")
    m, n = H.m, H.n
    if m == 0:
        return 0, frozenset()
    big = q * m + 1
    if big > _INT32_MAX or p * n > _INT32_MAX:
        raise OverflowError("capacities exceed the integer range of the flow solver")

    # nodes: 0 = source, 1..m = edges, m+1..m+n = vertices, m+n+1 = sink
    source, sink = 0, m + n + 1
    size = m + n + 2
    rows, cols, caps = [], [], []
    for e, verts in enumerate(H.projected):
        rows.append(source)
        cols.append(1 + e)
        caps.append(q)
        for v in verts:
            rows.append(1 + e)
            cols.append(1 + m + v)
            caps.append(big)
    for v in range(n):
        rows.append(1 + m + v)
        cols.append(sink)
        caps.append(p)
    cap = csr_array(
        (np.array(caps, dtype=np.int32), (np.array(rows), np.array(cols))),
        shape=(size, size),
    )
    result = maximum_flow(cap, source, sink)
    best = q * m - int(result.flow_value)

    # residual arcs a -> b carry cap(a,b) - flow(a,b) > 0; flow is antisymmetric
    residual = (cap - result.flow).tocoo()
    pos = residual.data > 0
    into: list[list[int]] = [[] for _ in range(size)]
    for a, b in zip(residual.row[pos].tolist(), residual.col[pos].tolist()):
        into[b].append(a)
    # nodes that can still reach the sink lie outside every maximal closure
    reaches_sink = [False] * size
    reaches_sink[sink] = True
    queue = deque([sink])
    while queue:
        b = queue.popleft()
        for a in into[b]:
            if not reaches_sink[a]:
                reaches_sink[a] = True
                queue.append(a)
    chosen = frozenset(v for v in range(n) if not reaches_sink[1 + m + v])
    return best, chosen


def _density_flow(H: Hypergraph, ratio: Fraction) -> tuple[bool, Optional[frozenset]]:
    best, chosen = max_closure(H, ratio.numerator, ratio.denominator)
    # best > 0, or best == 0 attained by a nonempty set, both mean e(V') >= (1-delta)|V'|
    if best > 0 or chosen:
        return False, chosen
    return True, None


def check_density(
    H: Hypergraph, delta: Number, mode: str = "flow"
) -> tuple[bool, Optional[frozenset]]:
    """Test ``e(V') < (1 - delta)|V'|`` for every nonempty V'.

    Returns ``(True, None)`` when it holds, else ``(False, witness)`` with a
    vertex set that violates it.
    """
    d = as_fraction(delta)
    if not 0 <= d < 1:
        raise ValueError(f"delta must lie in [0, 1), got {delta!r}")
    ratio = 1 - d
    if mode == "exact":
        return _density_exact(H, ratio)
    if mode == "flow":
        return _density_flow(H, ratio)
    raise ValueError(f"unknown mode {mode!r}")


def induced_edges(H: Hypergraph, vertices) -> int:
    vs = set(vertices)
    return sum(1 for verts in H.projected if vs.issuperset(verts))


def max_density(H: Hypergraph) -> Fraction:
    """``max e(V')/|V'|`` over nonempty V', exactly.

    Dinkelbach iteration on the closure problem: starting from the density of
    the whole graph, replace the ratio by the density of the best closure
    until no set beats it.
    """
    if H.m == 0:
        return Fraction(0)
    ratio = Fraction(H.m, H.n)
    for _ in range(H.n + 1):
        best, chosen = max_closure(H, ratio.numerator, ratio.denominator)
        if best <= 0:
            return ratio
        ratio = Fraction(induced_edges(H, chosen), len(chosen))
    raise ArithmeticError("Dinkelbach iteration did not converge")

