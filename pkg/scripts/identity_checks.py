"""Run the certificate and factored 2F1 checks over wider ranges than the tests."""
import argparse
from fractions import Fraction

from giftex.hypergeom import phi_identity_check
from giftex.recurrences import celine_certificate, celine_check, celine_grid


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--celine-nmax", type=int, default=20)
    ap.add_argument("--phi-nmax", type=int, default=10)
    ap.add_argument("--z", nargs="+", default=["2/5", "-1", "7/2", "13/9", "8/3", "-11/4"])
    args = ap.parse_args()

    grid = celine_grid(4, args.celine_nmax)
    print(f"{len(grid)} grid points")
    print(celine_check(celine_certificate(), grid, collapse_n_max=args.celine_nmax + 5).to_text())

    zs = [Fraction(z) for z in args.z]
    bad = [(n, eta, z) for n in range(1, args.phi_nmax + 1) for eta in range(n + 1, 2 * n + 1) for z in zs
           if not phi_identity_check(n, eta, z)]
    total = sum(n for n in range(1, args.phi_nmax + 1)) * len(zs)
    print(f"factored form: {total - len(bad)}/{total} checks hold")
    for n, eta, z in bad[:10]:
        print(f"  fails at n={n} eta={eta} z={z}")


if __name__ == "__main__":
    main()
