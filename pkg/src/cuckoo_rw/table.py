"""Cuckoo hash table with random-walk insertion.

Insertion follows the classic random-walk loop: the carried item picks one of
its hash indices uniformly at random, excluding the index the previous
occupant was just evicted from; it takes that slot and, if the slot was
occupied, the evicted item becomes the carried one.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .hashspace import HashFamily
from .hypergraph.model import Hypergraph, Orientation


class DuplicateItemError(KeyError):
    pass


def default_step_cap(n: int) -> int:
    """``ceil(log2(n)^4)``, at least 1."""
    if n < 2:
        return 1
    return max(1, math.ceil(math.log2(n) ** 4))


@dataclass(frozen=True)
class InsertionOutcome:
    steps: int
    success: bool
    displaced: int
    # item left without a slot when the walk hit its cap; None on success
    unplaced: Optional[int] = None


class CuckooTable:
    """n single-item slots addressed by a :class:`HashFamily`.

    ``slots[i]`` is the item in slot i or ``None``. ``active_index[item]`` is
    the (0-based) index of the hash function the item currently uses. The walk
    RNG is seeded independently of the hash family.
    """

    def __init__(self, family: HashFamily, walk_seed: int = 0, step_cap: Optional[int] = None):
        self.family = family
        self.n = family.n
        self.k = family.k
        self.slots: list[Optional[int]] = [None] * self.n
        self.active_index: dict[int, int] = {}
        self.rng = random.Random(walk_seed)
        self.step_cap = default_step_cap(self.n) if step_cap is None else int(step_cap)
        if self.step_cap < 1:
            raise ValueError("step_cap must be >= 1")
        self.total_steps = 0
        self.inserts = 0
        self.failures = 0

    def __len__(self) -> int:
        return len(self.active_index)

    def __contains__(self, item: int) -> bool:
        return self.lookup(item)

    @property
    def load(self) -> float:
        return len(self.active_index) / self.n

    def insert(self, item: int, step_cap: Optional[int] = None) -> InsertionOutcome:
        if item in self.active_index:
            raise DuplicateItemError(item)
        cap = self.step_cap if step_cap is None else int(step_cap)
        if cap < 1:
            raise ValueError("step_cap must be >= 1")

        k = self.k
        slots = self.slots
        active = self.active_index
        positions = self.family.positions
        randrange = self.rng.randrange

        carried = item
        excluded = -1
        steps = 0
        while steps < cap:
            steps += 1
            if excluded < 0:
                i = randrange(k)
            else:
                i = randrange(k - 1)
                if i >= excluded:
                    i += 1
            slot = positions(carried)[i]
            occupant = slots[slot]
            active[carried] = i
            slots[slot] = carried
            if occupant is None:
                self._record(steps, True)
                return InsertionOutcome(steps=steps, success=True, displaced=steps - 1)
            excluded = active.pop(occupant)
            carried = occupant

        self._record(steps, False)
        return InsertionOutcome(steps=steps, success=False, displaced=steps, unplaced=carried)

    def _record(self, steps: int, success: bool) -> None:
        self.total_steps += steps
        self.inserts += 1
        if not success:
            self.failures += 1

    def lookup(self, item: int) -> bool:
        slots = self.slots
        return any(slots[p] == item for p in self.family.positions(item))

    def stored_items(self) -> list[int]:
        return sorted(self.active_index)

    def hypergraph(self) -> Hypergraph:
        """The choice hypergraph of the stored items, one edge per item in sorted id order."""
        items = self.stored_items()
        edges = np.array(
            [self.family.positions(x) for x in items], dtype=np.int64
        ).reshape(len(items), self.k)
        return Hypergraph(self.n, self.k, edges)

    def orientation_snapshot(self) -> Orientation:
        """Orientation mapping each stored item's edge to its slot.

        Edge indices follow :meth:`hypergraph`; ``labels`` carries the item ids.
        """
        items = self.stored_items()
        assignment = np.array(
            [self.family.positions(x)[self.active_index[x]] for x in items],
            dtype=np.int64,
        )
        return Orientation(self.n, assignment, labels=tuple(items))

    def audit(self) -> bool:
        """True iff every structural invariant of the table holds."""
        if len(self.slots) != self.n:
            return False
        occupied = 0
        for slot, item in enumerate(self.slots):
            if item is None:
                continue
            occupied += 1
            i = self.active_index.get(item)
            if i is None or not 0 <= i < self.k:
                return False
            if self.family.positions(item)[i] != slot:
                return False
        if occupied != len(self.active_index):
            return False
        return len(self.active_index) <= self.n


def insert(table: CuckooTable, item: int, step_cap: Optional[int] = None) -> InsertionOutcome:
    return table.insert(item, step_cap)


def lookup(table: CuckooTable, item: int) -> bool:
    return table.lookup(item)


def orientation_snapshot(table: CuckooTable) -> Orientation:
    return table.orientation_snapshot()


def audit(table: CuckooTable) -> bool:
    return table.audit()
