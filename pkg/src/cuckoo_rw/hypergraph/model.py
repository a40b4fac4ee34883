"""Hypergraphs of item choices and their orientations."""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence, TextIO, Union

import numpy as np


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """A k-bounded multi-hypergraph on vertices ``0..n-1``.

    ``edges`` is an ``(m, k)`` integer array of ordered k-tuples. A tuple may
    repeat a vertex, and the same tuple may occur more than once. Wherever set
    semantics are needed the tuple is projected to its distinct vertices.
    """

    n: int
    k: int
    edges: np.ndarray = field(repr=False)

    def __post_init__(self):
        edges = np.asarray(self.edges, dtype=np.int64)
        if edges.size == 0:
            edges = edges.reshape(0, self.k)
        if edges.ndim != 2 or edges.shape[1] != self.k:
            raise ValueError(f"edges must have shape (m, {self.k}), got {edges.shape}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if edges.size and (edges.min() < 0 or edges.max() >= self.n):
            raise ValueError("vertex index out of range")
        edges.setflags(write=False)
        object.__setattr__(self, "edges", edges)

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m}, k={self.k})"

    @property
    def m(self) -> int:
        return int(self.edges.shape[0])

    @cached_property
    def projected(self) -> list[tuple[int, ...]]:
        """Distinct vertices of each edge, in first-occurrence order."""
        return [tuple(dict.fromkeys(row)) for row in self.edges.tolist()]

    @cached_property
    def incidence(self) -> list[list[int]]:
        """For every vertex, the edges containing it (each edge listed once)."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e, verts in enumerate(self.projected):
            for v in verts:
                inc[v].append(e)
        return inc

    def degrees(self) -> np.ndarray:
        """Vertex degrees counting multiplicity within an edge."""
        return np.bincount(self.edges.ravel(), minlength=self.n)

    def edge_subset(self, indices) -> "Hypergraph":
        return Hypergraph(self.n, self.k, self.edges[np.asarray(indices, dtype=np.int64)])

    def prefix(self, m: int) -> "Hypergraph":
        return Hypergraph(self.n, self.k, self.edges[:m])

    def to_text(self) -> str:
        buf = io.StringIO()
        write_hypergraph(self, buf)
        return buf.getvalue()

    @classmethod
    def from_text(cls, text: str) -> "Hypergraph":
        return read_hypergraph(io.StringIO(text))


def sample_hypergraph(n: int, m: int, k: int, seed: int) -> Hypergraph:
    """m i.i.d. uniform ordered k-tuples over ``0..n-1``."""
    if n < 1 or m < 0 or k < 2:
        raise ValueError("need n >= 1, m >= 0, k >= 2")
    rng = np.random.default_rng(int(seed) & ((1 << 64) - 1))
    return Hypergraph(n, k, rng.integers(0, n, size=(m, k), dtype=np.int64))


def write_hypergraph(H: Hypergraph, dest: Union[str, os.PathLike, TextIO]) -> None:
    """Text format: a header line ``n m k`` then one edge per line."""
    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w") as fh:
            write_hypergraph(H, fh)
        return
    dest.write(f"{H.n} {H.m} {H.k}\n")
    for row in H.edges.tolist():
        dest.write(" ".join(map(str, row)) + "\n")


def read_hypergraph(src: Union[str, os.PathLike, TextIO]) -> Hypergraph:
    if isinstance(src, (str, os.PathLike)):
        with open(src) as fh:
            return read_hypergraph(fh)
    lines = [ln for ln in (raw.strip() for raw in src) if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty hypergraph file")
    try:
        n, m, k = (int(tok) for tok in lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad header line: {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"header declares {m} edges, found {len(body)}")
    rows = []
    for lineno, ln in enumerate(body, start=2):
        row = [int(tok) for tok in ln.split()]
        if len(row) != k:
            raise ValueError(f"line {lineno}: expected {k} vertices, got {len(row)}")
        rows.append(row)
    return Hypergraph(n, k, np.array(rows, dtype=np.int64).reshape(m, k))


@dataclass(frozen=True, eq=False)
class Orientation:
    """Injective map from edge index to one of the edge's vertices.

    ``labels`` optionally names the edges (item ids for table snapshots).
    """

    n: int
    assignment: np.ndarray
    labels: Optional[Sequence[int]] = None

    def __post_init__(self):
        a = np.asarray(self.assignment, dtype=np.int64).reshape(-1)
        a.setflags(write=False)
        object.__setattr__(self, "assignment", a)

    @property
    def m(self) -> int:
        return int(self.assignment.shape[0])

    @cached_property
    def occupant(self) -> np.ndarray:
        """``occupant[v]`` is the edge oriented to v, or -1 if v is free."""
        occ = np.full(self.n, -1, dtype=np.int64)
        occ[self.assignment] = np.arange(self.m, dtype=np.int64)
        return occ

    @cached_property
    def free_vertices(self) -> np.ndarray:
        return np.flatnonzero(self.occupant < 0)

    def is_valid_for(self, H: Hypergraph) -> bool:
        """Edges are all oriented, each to a vertex it contains, injectively."""
        if self.m != H.m or self.n != H.n:
            return False
        if self.m == 0:
            return True
        if self.assignment.min() < 0 or self.assignment.max() >= self.n:
            return False
        if len(np.unique(self.assignment)) != self.m:
            return False
        return bool((H.edges == self.assignment[:, None]).any(axis=1).all())
