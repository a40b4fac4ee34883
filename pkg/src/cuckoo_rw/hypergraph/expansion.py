"""Expansion check: small edge sets must span many vertices.

For an edge set E' with s = |E'| edges:

* if ``s <= ln ln n``, require ``|V(E')| >= (k-1) s``;
* if ``ln ln n < s < n/k``, require ``|V(E')| >= (k-1-x_s) s`` where
  ``x_s = log_k((k-1) e^k) / (log_k(n/s) - 1)``;
* larger sets are unconstrained.
"""

from __future__ import annotations

import math
import random
from typing import Optional

import numpy as np

from ..analytics import DomainError
from .density import SizeError
from .model import Hypergraph

EXACT_MAX_EDGES = 20


def expansion_slack(s: int, n: int, k: int) -> float:
    """The slack x_s of the large-set regime."""
    denom = math.log(n / s, k) - 1.0
    if denom <= 0:
        raise DomainError(f"x_s undefined for s={s}, n={n}, k={k}")
    return math.log((k - 1) * math.e**k, k) / denom


def log_log(n: int) -> float:
    if n <= 1:
        return -math.inf
    return math.log(math.log(n))


def required_span(s: int, n: int, k: int) -> Optional[float]:
    """Minimum |V(E')| for an s-edge set, or None when s is outside both regimes."""
    if s <= log_log(n):
        return float((k - 1) * s)
    if s < n / k:
        return (k - 1 - expansion_slack(s, n, k)) * s
    return None


def _violates(span: int, s: int, n: int, k: int) -> bool:
    need = required_span(s, n, k)
    return need is not None and span < need


def _exact(H: Hypergraph) -> tuple[bool, Optional[frozenset]]:
    m = H.m
    if m > EXACT_MAX_EDGES:
        raise SizeError(f"exact enumeration needs |E| <= {EXACT_MAX_EDGES}, got {m}")
    if m == 0:
        return True, None
    # relabel the vertices that occur and pack each edge into 64-bit words
    used = sorted({v for verts in H.projected for v in verts})
    label = {v: i for i, v in enumerate(used)}
    words = (len(used) + 63) // 64
    masks = np.zeros((m, words), dtype=np.uint64)
    for e, verts in enumerate(H.projected):
        for v in verts:
            i = label[v]
            masks[e, i // 64] |= np.uint64(1) << np.uint64(i % 64)

    union = np.zeros((1 << m, words), dtype=np.uint64)
    for e in range(m):
        lo = 1 << e
        union[lo : 2 * lo] = union[:lo] | masks[e]
    spans = np.bitwise_count(union).sum(axis=1)
    sizes = np.bitwise_count(np.arange(1 << m, dtype=np.uint64))

    n, k = H.n, H.k
    need = np.full(1 << m, -1.0)
    for s in range(1, m + 1):
        r = required_span(s, n, k)
        if r is not None:
            need[sizes == s] = r
    bad = np.flatnonzero(spans < need)
    if bad.size == 0:
        return True, None
    mask = int(bad[0])
    return False, frozenset(e for e in range(m) if mask >> e & 1)


def _sampled(
    H: Hypergraph, samples: int, max_size: int, seed: int
) -> tuple[bool, Optional[frozenset]]:
    if H.m == 0:
        return True, None
    rng = random.Random(seed)
    n, k = H.n, H.k
    projected = H.projected
    incidence = H.incidence
    cap = min(max_size, H.m)
    for _ in range(samples):
        target = rng.randint(1, cap)
        e0 = rng.randrange(H.m)
        chosen = [e0]
        in_set = {e0}
        span = set(projected[e0])
        frontier = [f for v in projected[e0] for f in incidence[v] if f != e0]
        if _violates(len(span), 1, n, k):
            return False, frozenset(chosen)
        while len(chosen) < target:
            nxt = -1
            while frontier:
                j = rng.randrange(len(frontier))
                frontier[j], frontier[-1] = frontier[-1], frontier[j]
                f = frontier.pop()
                if f not in in_set:
                    nxt = f
                    break
            if nxt < 0:
                break  # component exhausted
            chosen.append(nxt)
            in_set.add(nxt)
            for v in projected[nxt]:
                if v not in span:
                    span.add(v)
                    frontier.extend(f for f in incidence[v] if f not in in_set)
            if _violates(len(span), len(chosen), n, k):
                return False, frozenset(chosen)
    return True, None


def check_expansion(
    H: Hypergraph,
    mode: str = "exact",
    samples: int = 10_000,
    max_size: int = 128,
    seed: int = 0,
) -> tuple[bool, Optional[frozenset]]:
    """Check the expansion property; on failure also return a violating edge set.

    ``sampled`` mode grows ``samples`` random connected edge sets, each to a
    random size up to ``max_size``, and tests every intermediate set. A
    minimal violating set is always connected, so nothing is lost by growing
    only connected sets; the check is still one-sided.
    """
    if mode == "exact":
        return _exact(H)
    if mode == "sampled":
        return _sampled(H, samples, max_size, seed)
    raise ValueError(f"unknown mode {mode!r}")
