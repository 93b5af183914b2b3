"""Smallest recurrence depth found by the miner, next to C(sigma+1, 2) + 1.

Larger sigma grows the unknown count fast; raise --max-unknowns to go further.
"""
import argparse
import time

from giftex.miner import minimal_depth
from giftex.recurrences import conjectured_depth


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sigma-max", type=int, default=3)
    ap.add_argument("--max-depth", type=int, default=8)
    ap.add_argument("--max-unknowns", type=int, default=200)
    args = ap.parse_args()

    print("target sigma  mined  conjectured  seconds")
    for target in ("E", "G"):
        for sigma in range(args.sigma_max + 1):
            t0 = time.perf_counter()
            d = minimal_depth(target, sigma, max_depth=args.max_depth, max_unknowns=args.max_unknowns)
            took = time.perf_counter() - t0
            shown = "-" if d is None else str(d)
            print(f"{target:>6} {sigma:>5}  {shown:>5}  {conjectured_depth(sigma):>11}  {took:7.1f}")


if __name__ == "__main__":
    main()
