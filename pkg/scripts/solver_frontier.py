"""How far the exact h(N) solver gets within a wall-clock budget.

Prints one line per N with the cumulative time and node count. Stops after
the first N that finishes past the budget.
"""

import argparse
import time

from sidonlab import _search
from sidonlab.extremal import HSolver


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=float, default=300.0, help="seconds")
    ap.add_argument("--max-n", type=int, default=200)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    _search.warmup()
    solver = HSolver(args.workers)
    t0 = time.perf_counter()
    total = 0
    for N in range(1, args.max_n + 1):
        r = solver.solve(N)
        total += r.nodes
        dt = time.perf_counter() - t0
        print(f"N={N:4d} h={r.h:3d} nodes={total:>14,d} t={dt:8.1f}s witness={','.join(map(str, r.witness))}",
              flush=True)
        if dt > args.budget:
            break


if __name__ == "__main__":
    main()
