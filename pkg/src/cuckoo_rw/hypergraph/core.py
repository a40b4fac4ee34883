"""2-core extraction by repeatedly deleting the edge at a degree-1 vertex."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .model import Hypergraph


@dataclass(frozen=True)
class CoreResult:
    core_vertices: frozenset
    core_edges: frozenset
    peel_order: tuple  # (vertex, edge) pairs in removal order

    @property
    def empty(self) -> bool:
        return not self.core_edges


def strip_core(H: Hypergraph, rng: Optional[random.Random] = None) -> CoreResult:
    """Peel degree-1 vertices until none remain.

    A vertex repeated inside one edge counts that many times towards its
    degree. Without ``rng`` degree-1 vertices are processed FIFO; with one,
    the next vertex is drawn at random from the current candidates. The core
    is the same either way.
    """
    deg = [0] * H.n
    # sum of ids of live edges over incidences; equals the lone edge id when deg == 1
    edge_sum = [0] * H.n
    rows = H.edges.tolist()
    for e, row in enumerate(rows):
        for v in row:
            deg[v] += 1
            edge_sum[v] += e

    alive = [True] * H.m
    candidates = [v for v in range(H.n) if deg[v] == 1]
    peel_order = []
    head = 0
    while True:
        if rng is None:
            if head >= len(candidates):
                break
            v = candidates[head]
            head += 1
        else:
            if not candidates:
                break
            j = rng.randrange(len(candidates))
            candidates[j], candidates[-1] = candidates[-1], candidates[j]
            v = candidates.pop()
        if deg[v] != 1:
            continue
        e = edge_sum[v]
        alive[e] = False
        peel_order.append((v, e))
        for u in rows[e]:
            deg[u] -= 1
            edge_sum[u] -= e
            if deg[u] == 1:
                candidates.append(u)

    core_edges = frozenset(e for e in range(H.m) if alive[e])
    core_vertices = frozenset(v for v in range(H.n) if deg[v] > 0)
    return CoreResult(core_vertices, core_edges, tuple(peel_order))
