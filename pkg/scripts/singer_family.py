"""Build every Singer set for prime powers up to a bound and report timings."""

import argparse
import time

from sidonlab._intmath import prime_power
from sidonlab.singer import MAX_Q, build_singer_set, verify_perfect_difference_set
from sidonlab.transfer import gap_profile, singer_threshold


def prime_powers(limit):
    for q in range(2, limit + 1):
        try:
            prime_power(q)
        except ValueError:
            continue
        yield q


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-q", type=int, default=64)
    args = ap.parse_args()
    if args.max_q > MAX_Q:
        ap.error(f"--max-q must be <= {MAX_Q}")
    print("q,modulus,size,pds,max_gap,threshold,seconds")
    for q in prime_powers(args.max_q):
        t0 = time.perf_counter()
        S = build_singer_set(q)
        ok = verify_perfect_difference_set(S.residues, S.modulus).ok
        dt = time.perf_counter() - t0
        g = gap_profile(S.residues, S.modulus).g_max
        print(f"{q},{S.modulus},{len(S.residues)},{ok},{g},{singer_threshold(q)},{dt:.3f}")


if __name__ == "__main__":
    main()
