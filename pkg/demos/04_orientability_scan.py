"""Where does a full assignment stop existing?

Scan loads around the threshold and count how many sampled hypergraphs admit
an orientation. Loads share nested edge prefixes, so each trial's curve is
monotone.
"""

from cuckoo_rw.analytics import load_threshold
from cuckoo_rw.harness.config import ExperimentConfig
from cuckoo_rw.harness.experiments import run_scan
from cuckoo_rw.harness.output import to_csv


def main():
    print(f"threshold for k=3: {load_threshold(3):.4f}")
    config = ExperimentConfig(kind="scan", k=3, n=5000, c_grid=(0.88, 0.9, 0.91, 0.92, 0.93, 0.95), trials=20, seed=7)
    print(to_csv(run_scan(config)), end="")


if __name__ == "__main__":
    main()
