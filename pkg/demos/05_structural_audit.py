"""Structural audit of a subcritical instance.

Checks the density bound, samples edge sets for poor expansion, probes the
neighbourhood growth bound and measures how close vertices are to a free slot.
"""

from cuckoo_rw.analytics import stripping_constant
from cuckoo_rw.hypergraph import (
    check_density,
    check_expansion,
    free_distances,
    is_orientable,
    max_density,
    sample_hypergraph,
)


def main():
    n, c, k = 10_000, 0.85, 3
    H = sample_hypergraph(n, int(c * n), k, seed=11)
    d = max_density(H)
    print(f"max induced density {float(d):.4f}")
    for delta in (0.01, 0.05, 0.1):
        ok, witness = check_density(H, delta)
        print(f"  density bound with delta={delta}: {'holds' if ok else f'fails on {len(witness)} vertices'}")

    ok, witness = check_expansion(H, mode="sampled", samples=2000, seed=1)
    print(f"expansion over 2000 sampled edge sets: {'no violation' if ok else witness}")

    ok, h = is_orientable(H)
    C = stripping_constant(0.1, 1 - float(d))
    dist = free_distances(H, h)
    near = sum(1 for x in dist if x <= C) / n
    print(f"C(0.1, {1 - float(d):.4f}) = {C}; {near:.1%} of vertices within C of a free slot")
    print(f"largest distance to a free slot: {max(dist)}")


if __name__ == "__main__":
    main()
