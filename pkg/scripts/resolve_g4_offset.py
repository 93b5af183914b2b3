"""Decide between the two readings of the depth-11 G_4 recurrence.

Verifies both registry variants, then mines a fresh depth-11, degree-4
recurrence from G_4 data and reports which variant it coincides with.
Mining takes roughly a minute.
"""
import argparse
import time

from giftex.miner import FitSpec, fit
from giftex.recurrences import registry, verify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=30)
    ap.add_argument("--skip-mining", action="store_true")
    args = ap.parse_args()

    reg = registry()
    for name in ("G4e", "G4e-corrected"):
        print(verify(reg[name], args.nmax).to_text())
    if args.skip_mining:
        return
    t0 = time.perf_counter()
    res = fit(FitSpec("G", 4, 11, 4))
    print(f"mined in {time.perf_counter() - t0:.1f}s: status {res.status}, "
          f"{res.equations} equations, {res.unknowns} unknowns, train n={res.train}")
    if res.status != "ok":
        return
    mined = res.recurrence.coefficients()
    for name in ("G4e", "G4e-corrected"):
        same = mined == reg[name].coefficients()
        print(f"  mined recurrence {'equals' if same else 'differs from'} {name}")
    print(f"  offsets: {sorted(mined)}")


if __name__ == "__main__":
    main()
