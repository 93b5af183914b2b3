"""Command-line interface.

Exit codes: 0 success, 1 mathematical mismatch, 2 usage error, 3 budget exceeded.
All numbers are written as decimal strings.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import fixtures as fx
from .core import BudgetExceeded, build_e_table, g, g_sequence, h
from .hypergeom import asym_ratio, phi_identity_check
from .miner import FitSpec, UnderdeterminedFit, fit
from .recurrences import (Recurrence2D, celine_certificate, celine_check, celine_grid,
                          registry, structure_check, verify)
from .scenarios import DEFAULT_BUDGET, iter_scenarios, scenario_to_partition

OK, MISMATCH, USAGE, BUDGET = 0, 1, 2, 3

# default verification ranges, one per registry entry
VERIFY_NMAX = {"G1d": 300, "E1d": 60, "E2d": 40, "G2d": 60, "G2e": 60, "G3e": 40,
               "G4e": 30, "G4e-corrected": 30, "E3app": 25}


class UsageError(Exception):
    pass


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


# ---------------------------------------------------------------------------


def table_entries(kind: str, sigma: int, n_max: int) -> list[dict]:
    if kind == "E":
        t = build_e_table(sigma, n_max)
        return [{"n": str(n), "k": str(k), "value": str(v)} for n, k, v in t.items()]
    if kind == "G":
        return [{"n": str(n), "value": str(v)} for n, v in enumerate(g_sequence(sigma, n_max))]
    return [{"n": str(n), "value": str(h(sigma, n))} for n in range(1, n_max + 1)]


def cmd_table(args, out) -> int:
    entries = table_entries(args.kind, args.sigma, args.nmax)
    if args.format == "json":
        json.dump({"kind": args.kind, "sigma": str(args.sigma), "entries": entries}, out, indent=1)
        out.write("\n")
        return OK
    fields = ["n", "k", "value"] if args.kind == "E" else ["n", "value"]
    w = csv.DictWriter(out, fields, lineterminator="\n")
    w.writeheader()
    w.writerows(entries)
    return OK


def read_table(text: str, fmt: str) -> dict:
    """Parse the output of ``table`` back into {(n,) or (n, k): int}."""
    if fmt == "json":
        rows = json.loads(text)["entries"]
    else:
        rows = list(csv.DictReader(text.splitlines()))
    return {tuple(int(r[c]) for c in ("n", "k") if c in r): int(r["value"]) for r in rows}


def cmd_verify(args, out) -> int:
    recs = registry()
    names = list(recs) if args.name == "all" else [args.name]
    for nm in names:
        if nm not in recs:
            raise UsageError(f"unknown recurrence {nm!r}; choose from {', '.join(recs)} or all")
    status = OK
    for nm in names:
        rec = recs[nm]
        n_max = args.nmax if args.nmax is not None else VERIFY_NMAX[nm]
        if n_max < rec.n_min:
            raise UsageError(f"--nmax {n_max} is below {nm}'s starting index {rec.n_min}")
        rep = verify(rec, n_max, jobs=args.jobs)
        if args.format == "json":
            out.write(json.dumps(rep.to_json()) + "\n")
        else:
            out.write(rep.to_text() + "\n")
        if not rep.passed:
            status = MISMATCH
    return status


def cmd_oracle(args, out) -> int:
    if args.gifts < 1:
        raise UsageError("--gifts must be >= 1")
    count = 0
    hist: dict[int, int] = {}
    for s in iter_scenarios(args.sigma, args.gifts):
        count += 1
        if count > args.budget:
            raise BudgetExceeded(f"more than {args.budget} scenarios")
        hist[len(s.gammas)] = hist.get(len(s.gammas), 0) + 1
        if args.emit_sequences:
            line = str(s)
            if args.gifts > 1:
                line += f"  ->  {scenario_to_partition(s)}"
            out.write(line + "\n")
    expected = g(args.sigma, args.gifts - 1)
    out.write(f"count {count}\n")
    out.write("by length " + ", ".join(f"{k}:{v}" for k, v in sorted(hist.items())) + "\n")
    ok = count == expected
    out.write(f"G_{args.sigma}({args.gifts - 1}) = {expected}: {'match' if ok else 'MISMATCH'}\n")
    return OK if ok else MISMATCH


def cmd_mine(args, out) -> int:
    try:
        spec = FitSpec(args.target, args.sigma, args.depth, args.degree, train=args.train,
                       holdout=args.holdout, prune=args.prune, generalized=args.generalized)
    except ValueError as e:
        raise UsageError(str(e))
    if spec.unknowns() > args.budget:
        raise BudgetExceeded(f"{spec.unknowns()} unknowns exceeds --budget {args.budget}")
    try:
        res = fit(spec)
    except UnderdeterminedFit as e:
        raise UsageError(f"infeasible spec: {e}")
    if res.status == "ok":
        doc = res.recurrence.to_json()
        doc["train"] = [str(x) for x in res.train]
        doc["holdout"] = [str(x) for x in res.holdout]
        out.write(json.dumps(doc, indent=1) + "\n")
        return OK
    if res.status == "non-unique":
        out.write(f"non-unique (solution space dimension {res.dimension})\n")
    else:
        out.write("none\n")
    return MISMATCH


def cmd_fixtures(args, out) -> int:
    recs = fx.load_fixtures()
    bad = fx.compare_all(recs)
    cross = fx.row_sum_checks(recs) + fx.column_checks(recs)
    for m in bad:
        out.write(f"- {m}\n")
    for c in cross:
        out.write(f"- cross-check: {c}\n")
    out.write(f"{len(recs) - len(bad)}/{len(recs)} fixture values match; "
              f"{len(cross)} cross-check failures\n")
    status = OK if not bad and not cross else MISMATCH
    if args.oeis_snapshot:
        if args.sigma is None:
            raise UsageError("--oeis-snapshot needs --sigma")
        try:
            snap = fx.read_bfile(args.oeis_snapshot)
        except (OSError, ValueError) as e:
            raise UsageError(f"cannot read snapshot: {e}")
        diffs = fx.compare_bfile(snap, args.sigma)
        for d in diffs:
            out.write(f"- {d}\n")
        out.write(f"snapshot: {len(snap) - len(diffs)}/{len(snap)} values match G_{args.sigma}\n")
        if diffs:
            status = MISMATCH
    return status


def cmd_celine(args, out) -> int:
    rep = celine_check(celine_certificate(), celine_grid(args.nmin, args.nmax), collapse_n_max=args.collapse_nmax)
    out.write(rep.to_text() + "\n")
    return OK if rep.passed else MISMATCH


def cmd_phi(args, out) -> int:
    zs = [Fraction(z) for z in args.z] + [Fraction(8, 3)]
    total = fails = 0
    for n in range(1, args.nmax + 1):
        for eta in range(n + 1, 2 * n + 1):
            for z in zs:
                total += 1
                if not phi_identity_check(n, eta, z):
                    fails += 1
                    out.write(f"- fails at n={n} eta={eta} z={z}\n")
    out.write(f"{total - fails}/{total} identity checks hold\n")
    return OK if not fails else MISMATCH


def cmd_structure(args, out) -> int:
    recs = registry()
    names = [nm for nm, r in recs.items() if isinstance(r, Recurrence2D)] if args.name == "all" else [args.name]
    status = OK
    for nm in names:
        rec = recs.get(nm)
        if not isinstance(rec, Recurrence2D):
            raise UsageError(f"{nm!r} is not a two-dimensional registry recurrence")
        rep = structure_check(rec)
        out.write(rep.to_text() + "\n")
        if not rep.conforms:
            status = MISMATCH
    return status


def cmd_asym(args, out) -> int:
    for n in args.n:
        out.write(f"sigma={args.sigma} n={n} ratio={asym_ratio(args.sigma, n, args.precision)}\n")
    return OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="giftex", description="Exact counts and recurrences for the gift-stealing game.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="emit E, G or H values")
    t.add_argument("--kind", choices=["E", "G", "H"], required=True)
    t.add_argument("--sigma", type=_nonneg, required=True)
    t.add_argument("--nmax", type=_nonneg, required=True)
    t.add_argument("--format", choices=["csv", "json"], default="csv")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="check registry recurrences against computed data")
    v.add_argument("--name", required=True, help="registry name or 'all'")
    v.add_argument("--nmax", type=_nonneg)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="enumerate scenarios and compare with G")
    o.add_argument("--sigma", type=_nonneg, required=True)
    o.add_argument("--gifts", type=int, required=True)
    o.add_argument("--emit-sequences", action="store_true")
    o.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    o.set_defaults(func=cmd_oracle)

    m = sub.add_parser("mine", help="fit a recurrence to computed data")
    m.add_argument("--target", choices=["G", "E"], required=True)
    m.add_argument("--sigma", type=_nonneg, required=True)
    m.add_argument("--depth", type=int, required=True)
    m.add_argument("--degree", type=_nonneg, required=True)
    m.add_argument("--train", type=_range, help="LO:HI")
    m.add_argument("--holdout", type=_range, help="LO:HI")
    m.add_argument("--prune", action="store_true", help="restrict shifts and degrees to the conjectured pattern")
    m.add_argument("--generalized", action="store_true", help="allow a polynomial leading coefficient (G only)")
    m.add_argument("--budget", type=int, default=100, help="maximum number of unknowns")
    m.set_defaults(func=cmd_mine)

    f = sub.add_parser("fixtures", help="recompute the shipped table values")
    f.add_argument("--oeis-snapshot", help="b-file style 'index value' file of G_sigma(n)")
    f.add_argument("--sigma", type=_nonneg)
    f.set_defaults(func=cmd_fixtures)

    c = sub.add_parser("celine", help="check the E_2 summand certificate")
    c.add_argument("--nmin", type=int, default=4)
    c.add_argument("--nmax", type=int, default=15)
    c.add_argument("--collapse-nmax", type=int, default=20)
    c.set_defaults(func=cmd_celine)

    ph = sub.add_parser("phi", help="check the factored 2F1 identity for E_2")
    ph.add_argument("--nmax", type=int, default=8)
    ph.add_argument("--z", nargs="+", default=["2/5", "-1", "7/2", "13/9"])
    ph.set_defaults(func=cmd_phi)

    s = sub.add_parser("structure", help="check depth, zero pattern and degrees of E recurrences")
    s.add_argument("--name", default="all")
    s.set_defaults(func=cmd_structure)

    a = sub.add_parser("asym", help="G_sigma(n) n! ((sigma+1)!)^n / ((sigma+1)n)!")
    a.add_argument("--sigma", type=_nonneg, required=True)
    a.add_argument("--n", type=int, nargs="+", required=True)
    a.add_argument("--precision", type=_nonneg, default=30)
    a.set_defaults(func=cmd_asym)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.func(args, out)
    except UsageError as e:
        sys.stderr.write(f"error: {e}\n")
        return USAGE
    except BudgetExceeded as e:
        sys.stderr.write(f"budget exceeded: {e}\n")
        return BUDGET


if __name__ == "__main__":
    sys.exit(main())
