"""Write the h(N) bounds table for a range of N to CSV."""

import argparse
import sys
import time

from sidonlab.extremal import HSolver, bounds_csv, bounds_row


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--from", dest="lo", type=int, default=5)
    ap.add_argument("--to", dest="hi", type=int, default=80)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    solver = HSolver()
    t0 = time.perf_counter()
    rows = [bounds_row(N, cap=max(200, args.hi), solver=solver) for N in range(args.lo, args.hi + 1)]
    text = bounds_csv(rows)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    bad = [r.N for r in rows if not r.ok]
    print(f"# {len(rows)} rows, violations={bad}, {time.perf_counter() - t0:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
