"""h-neighbourhoods: vertices reached by walking backwards along an orientation.

Level 0 is ``{v}``. Level s+1 holds the vertices of the edges oriented to
level-s vertices that were not seen at any earlier level. These are the slots
a random walk started at v can reach in s+1 evictions.
"""

from __future__ import annotations

import math

from .model import Hypergraph, Orientation


def neighborhood_levels(H: Hypergraph, h: Orientation, v: int, t: int) -> list[list[int]]:
    """Levels 0..t (stops early once a level is empty)."""
    if not 0 <= v < H.n:
        raise ValueError(f"vertex {v} out of range")
    if t < 0:
        raise ValueError("t must be >= 0")
    occupant = h.occupant
    projected = H.projected
    seen = {v}
    levels = [[v]]
    for _ in range(t):
        nxt = []
        for u in levels[-1]:
            e = occupant[u]
            if e < 0:
                continue
            for w in projected[e]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if not nxt:
            break
        levels.append(nxt)
    return levels


def h_neighborhood_size(H: Hypergraph, h: Orientation, v: int, t: int) -> int:
    """Number of vertices within h-distance t of v."""
    return sum(len(level) for level in neighborhood_levels(H, h, v, t))


def neighborhood_bound(k: int, t: int) -> int:
    return (k - 1) ** (t + 1)


def distance_to_free(H: Hypergraph, h: Orientation, v: int) -> float:
    """Smallest t whose neighbourhood contains a free vertex; ``math.inf`` if none does."""
    if not 0 <= v < H.n:
        raise ValueError(f"vertex {v} out of range")
    occupant = h.occupant
    projected = H.projected
    if occupant[v] < 0:
        return 0
    seen = {v}
    frontier = [v]
    t = 0
    while frontier:
        t += 1
        nxt = []
        for u in frontier:
            for w in projected[occupant[u]]:
                if w in seen:
                    continue
                if occupant[w] < 0:
                    return t
                seen.add(w)
                nxt.append(w)
        frontier = nxt
    return math.inf


def free_distances(H: Hypergraph, h: Orientation) -> list[float]:
    """``distance_to_free`` for every vertex, by one multi-source BFS from the free set.

    u is one step closer than w when w lies in the edge oriented to u.
    """
    occupant = h.occupant.tolist()
    projected = H.projected
    # reverse arcs: w -> u whenever w is in the edge oriented to u
    into: list[list[int]] = [[] for _ in range(H.n)]
    for u in range(H.n):
        e = occupant[u]
        if e >= 0:
            for w in projected[e]:
                if w != u:
                    into[w].append(u)
    dist = [math.inf] * H.n
    frontier = [u for u in range(H.n) if occupant[u] < 0]
    for u in frontier:
        dist[u] = 0
    d = 0
    while frontier:
        d += 1
        nxt = []
        for w in frontier:
            for u in into[w]:
                if dist[u] == math.inf:
                    dist[u] = d
                    nxt.append(u)
        frontier = nxt
    return dist
