"""Random-walk insertion at increasing loads.

Fill a table of n slots item by item and watch how the number of walk steps
behaves as the load approaches the threshold.
"""

import numpy as np

from cuckoo_rw.analytics import load_threshold
from cuckoo_rw.harness.config import mix
from cuckoo_rw.harness.experiments import insert_steps

K = 3
N = 20_000


def main():
    print(f"k={K}, n={N}, threshold c*={load_threshold(K):.4f}")
    print(f"{'c':>5}  {'mean':>7}  {'p99':>5}  {'max':>6}  failures")
    for c in (0.5, 0.7, 0.8, 0.85, 0.88, 0.9):
        steps, failures = insert_steps(K, N, int(c * N), seed=mix(1, int(c * 100)), step_cap=100_000)
        arr = np.asarray(steps)
        print(f"{c:5.2f}  {arr.mean():7.3f}  {int(np.percentile(arr, 99)):5d}  {arr.max():6d}  {failures}")


if __name__ == "__main__":
    main()
