"""Orientability via maximum bipartite matching (edges on the left, vertices on the right)."""

from __future__ import annotations

from collections import deque
from typing import Optional, Sequence

import numpy as np

from .core import strip_core
from .model import Hypergraph, Orientation

_UNMATCHED = -1
_INF = float("inf")


def hopcroft_karp(adj: Sequence[Sequence[int]], n_right: int) -> list[int]:
    """Maximum matching of a bipartite graph.

    ``adj[u]`` lists the right-neighbours of left node u. Returns ``match``
    with ``match[u]`` the right node paired with u, or -1.
    """
    n_left = len(adj)
    match_l = [_UNMATCHED] * n_left
    match_r = [_UNMATCHED] * n_right

    # greedy start: most left nodes match immediately in sparse random instances
    for u in range(n_left):
        for v in adj[u]:
            if match_r[v] == _UNMATCHED:
                match_l[u] = v
                match_r[v] = u
                break

    dist = [0.0] * n_left
    while True:
        # BFS layering from all free left nodes
        queue = deque()
        for u in range(n_left):
            if match_l[u] == _UNMATCHED:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        limit = _INF
        while queue:
            u = queue.popleft()
            du = dist[u]
            if du >= limit:
                continue
            for v in adj[u]:
                w = match_r[v]
                if w == _UNMATCHED:
                    if limit == _INF:
                        limit = du + 1
                elif dist[w] == _INF:
                    dist[w] = du + 1
                    queue.append(w)
        if limit == _INF:
            break

        # vertex-disjoint shortest augmenting paths, by iterative DFS
        pointer = [0] * n_left
        for root in range(n_left):
            if match_l[root] != _UNMATCHED:
                continue
            stack = [root]
            path_right: list[int] = []
            while stack:
                u = stack[-1]
                found = False
                nbrs = adj[u]
                while pointer[u] < len(nbrs):
                    v = nbrs[pointer[u]]
                    pointer[u] += 1
                    w = match_r[v]
                    if w == _UNMATCHED:
                        if dist[u] + 1 == limit:
                            path_right.append(v)
                            found = True
                            break
                    elif dist[w] == dist[u] + 1:
                        path_right.append(v)
                        stack.append(w)
                        break
                else:
                    # dead end: never revisit u in this phase
                    dist[u] = _INF
                    stack.pop()
                    if path_right:
                        path_right.pop()
                    continue
                if found:
                    for uu, vv in zip(stack, path_right):
                        match_l[uu] = vv
                        match_r[vv] = uu
                    break
    return match_l


def _match_edges(H: Hypergraph, edge_ids: Sequence[int]) -> Optional[dict[int, int]]:
    projected = H.projected
    adj = [projected[e] for e in edge_ids]
    match = hopcroft_karp(adj, H.n)
    if any(v == _UNMATCHED for v in match):
        return None
    return {e: v for e, v in zip(edge_ids, match)}


def is_orientable(H: Hypergraph, reduce_core: bool = True) -> tuple[bool, Optional[Orientation]]:
    """Decide whether every edge can be given its own vertex.

    With ``reduce_core`` the 2-core is matched and every peeled edge is sent
    to the degree-1 vertex it was peeled at; H is orientable iff its core is.
    Returns ``(True, witness)`` or ``(False, None)``.
    """
    if H.m > H.n:
        return False, None
    if not reduce_core:
        assigned = _match_edges(H, range(H.m))
        if assigned is None:
            return False, None
        return True, Orientation(H.n, np.array([assigned[e] for e in range(H.m)], dtype=np.int64))

    core = strip_core(H)
    assignment = np.full(H.m, -1, dtype=np.int64)
    for v, e in core.peel_order:
        assignment[e] = v
    if core.core_edges:
        assigned = _match_edges(H, sorted(core.core_edges))
        if assigned is None:
            return False, None
        for e, v in assigned.items():
            assignment[e] = v
    return True, Orientation(H.n, assignment)
