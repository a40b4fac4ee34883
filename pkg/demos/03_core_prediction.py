"""Predicted vs. observed 2-core size.

Strip degree-1 vertices from random 3-graphs and compare the surviving core
with the fixed-point prediction.
"""

from cuckoo_rw.analytics import core_prediction, lambda_k
from cuckoo_rw.hypergraph import sample_hypergraph, strip_core

K = 3
N = 50_000


def main():
    print(f"nonempty core expected above c = {lambda_k(K) / K:.4f}")
    print(f"{'c':>5}  {'pred V':>8}  {'emp V':>8}  {'pred E':>8}  {'emp E':>8}  density")
    for c in (0.75, 0.8, 0.82, 0.85, 0.88, 0.91):
        H = sample_hypergraph(N, int(c * N), K, seed=3)
        core = strip_core(H)
        pred = core_prediction(c, K)
        print(
            f"{c:5.2f}  {pred.vertex_fraction:8.5f}  {len(core.core_vertices) / N:8.5f}  "
            f"{pred.edge_fraction:8.5f}  {len(core.core_edges) / N:8.5f}  {pred.density:.4f}"
        )


if __name__ == "__main__":
    main()
