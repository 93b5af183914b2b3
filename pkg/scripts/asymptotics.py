"""Print G_sigma(n) n! ((sigma+1)!)^n / ((sigma+1)n)! and its distance to e."""
import argparse

from giftex.hypergeom import asym_ratio_exact, e_approx, to_decimal


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sigmas", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--ns", type=int, nargs="+", default=[5, 10, 20, 50, 100, 200])
    ap.add_argument("--digits", type=int, default=8)
    args = ap.parse_args()

    e = e_approx(args.digits + 10)
    print("sigma     n  ratio" + " " * (args.digits + 1) + "|ratio - e|")
    for sigma in args.sigmas:
        for n in args.ns:
            r = asym_ratio_exact(sigma, n)
            print(f"{sigma:>5} {n:>5}  {to_decimal(r, args.digits)}  {to_decimal(abs(r - e), args.digits)}")


if __name__ == "__main__":
    main()
