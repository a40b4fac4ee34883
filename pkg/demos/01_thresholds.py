"""Load thresholds for k-ary cuckoo hashing.

For each k we solve for xi*, the load threshold c* it implies, the load at
which a nonempty 2-core first appears, and the exponent that governs the
polylogarithmic insertion bound.
"""

from cuckoo_rw.analytics import threshold_report


def main():
    print(f"{'k':>2}  {'xi*':>10}  {'c*':>10}  {'core appears':>12}  {'walk exp':>9}")
    for k in range(3, 9):
        r = threshold_report(k)
        print(f"{k:>2}  {r.xi_star:10.6f}  {r.c_star:10.6f}  {r.lambda_k / k:12.6f}  {r.walk_exponent:9.4f}")
    # the threshold creeps toward 1 - e^{-k} as k grows


if __name__ == "__main__":
    main()
