"""Seeded stand-in for k independent truly random hash functions.

Each item's k positions are derived from a keyed BLAKE2b digest of the item
identifier, so a position tuple depends only on ``(seed, item)`` and never on
the order of queries. Results are memoised on first use.
"""

from __future__ import annotations

import hashlib
import threading

MASK64 = (1 << 64) - 1
_WORDS_PER_DIGEST = 8  # 64-byte digest / 8-byte words


class HashFamily:
    """k functions ``U -> {0, ..., n-1}`` over 64-bit item identifiers.

    Tuples are ordered (entry i is the value of the i-th function) and may
    repeat a slot.
    """

    def __init__(self, k: int, n: int, seed: int = 0):
        if k < 2:
            raise ValueError(f"k must be >= 2, got {k}")
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        self.k = int(k)
        self.n = int(n)
        self.seed = int(seed) & MASK64
        self.memo: dict[int, tuple[int, ...]] = {}
        self._key = self.seed.to_bytes(8, "little")
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"HashFamily(k={self.k}, n={self.n}, seed={self.seed})"

    def _derive(self, item: int) -> tuple[int, ...]:
        ident = (int(item) & MASK64).to_bytes(8, "little")
        words: list[int] = []
        block = 0
        while len(words) < self.k:
            digest = hashlib.blake2b(
                ident + block.to_bytes(4, "little"),
                key=self._key,
                digest_size=64,
            ).digest()
            words.extend(
                int.from_bytes(digest[j : j + 8], "little")
                for j in range(0, 64, 8)
            )
            block += 1
        # modulo bias is at most n / 2**64
        return tuple(w % self.n for w in words[: self.k])

    def positions(self, item: int) -> tuple[int, ...]:
        cached = self.memo.get(item)
        if cached is not None:
            return cached
        value = self._derive(item)
        with self._lock:
            # another thread may have stored the same tuple meanwhile; it is identical
            return self.memo.setdefault(item, value)

    def assign(self, item: int, positions) -> None:
        """Pin an item's tuple, overriding the derived one (for hand-built fixtures)."""
        positions = tuple(int(p) for p in positions)
        if len(positions) != self.k:
            raise ValueError(f"expected {self.k} positions, got {len(positions)}")
        if any(not 0 <= p < self.n for p in positions):
            raise ValueError(f"positions out of range for n={self.n}: {positions}")
        self.memo[item] = positions


def new_family(k: int, n: int, seed: int) -> HashFamily:
    return HashFamily(k, n, seed)


def positions(family: HashFamily, item: int) -> tuple[int, ...]:
    return family.positions(item)
