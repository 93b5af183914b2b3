"""Polynomial-coefficient recurrences for G_sigma(n) and E_sigma(n, k).

One-dimensional recurrences are written

    c_0(n) T(n) = sum_i c_i(n) T(n - i)            (c_0 = 1 unless generalized)

and two-dimensional ones

    E(n, k) = sum_{(i, j) != (0, 0)} c_ij(n) E(n - i, k - j).

Terms are kept as (offset, coefficient) pairs in printed order, so a
transcription that repeats an offset is preserved as-is.  Values at negative
indices are 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Sequence

from .core import ETable, build_e_table, factorial, g_sequence
from .poly import PolyCoeff

P = PolyCoeff.parse


@dataclass(frozen=True)
class Recurrence1D:
    name: str
    sigma: int
    terms: tuple[tuple[int, PolyCoeff], ...]
    n_min: int
    leading: PolyCoeff = field(default_factory=lambda: PolyCoeff.const(1))
    seeds: tuple[int, ...] = ()

    @property
    def depth(self) -> int:
        return max(i for i, _ in self.terms)

    @property
    def monic(self) -> bool:
        return self.leading == PolyCoeff.const(1)

    def coefficients(self) -> dict[int, PolyCoeff]:
        """Offsets with repeated entries merged."""
        out: dict[int, PolyCoeff] = {}
        for i, c in self.terms:
            out[i] = out.get(i, PolyCoeff()) + c
        return dict(sorted(out.items()))

    def residual(self, values: Sequence[int], n: int) -> Fraction:
        def T(m):
            return values[m] if m >= 0 else 0
        r = self.leading(n) * T(n)
        for i, c in self.terms:
            r -= c(n) * T(n - i)
        return r

    def extend(self, seeds: Sequence[int], n_max: int) -> list[Fraction]:
        """Run the recurrence forward from ``seeds`` (values for n < len(seeds))."""
        vals = [Fraction(v) for v in seeds]
        for n in range(len(vals), n_max + 1):
            lead = self.leading(n)
            if lead == 0:
                raise ZeroDivisionError(f"leading coefficient vanishes at n={n}")
            acc = sum((c(n) * (vals[n - i] if n - i >= 0 else 0) for i, c in self.terms), Fraction(0))
            vals.append(acc / lead)
        return vals

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "kind": "1d",
            "sigma": str(self.sigma),
            "depth": str(self.depth),
            "n_min": str(self.n_min),
            "leading": _poly_json(self.leading),
            "shifts": [str(i) for i, _ in self.terms],
            "coefficients": [_poly_json(c) for _, c in self.terms],
        }


@dataclass(frozen=True)
class Recurrence2D:
    name: str
    sigma: int
    terms: tuple[tuple[tuple[int, int], PolyCoeff], ...]
    n_min: int

    def __post_init__(self):
        for (i, j), _ in self.terms:
            if i < 0 or j < 0 or (i, j) == (0, 0):
                raise ValueError(f"bad shift {(i, j)} in {self.name}")

    @property
    def depth(self) -> int:
        return max(max(i, j) for (i, j), _ in self.terms)

    def coefficients(self) -> dict[tuple[int, int], PolyCoeff]:
        out: dict[tuple[int, int], PolyCoeff] = {}
        for s, c in self.terms:
            out[s] = out.get(s, PolyCoeff()) + c
        return dict(sorted(out.items()))

    def residual(self, E: Callable[[int, int], int], n: int, k: int) -> Fraction:
        r = Fraction(E(n, k))
        for (i, j), c in self.terms:
            v = E(n - i, k - j)
            if v:
                r -= c(n) * v
        return r

    def summed_over_k(self, name: str | None = None) -> Recurrence1D:
        """The G-level recurrence obtained by summing on k."""
        out: dict[int, PolyCoeff] = {}
        for (i, _), c in self.terms:
            out[i] = out.get(i, PolyCoeff()) + c
        if 0 in out and not out[0].is_zero():
            raise ValueError("summing on k leaves a T(n) term on the right; not monic at G level")
        out.pop(0, None)
        return Recurrence1D(name or f"sum_k({self.name})", self.sigma,
                            tuple(sorted(out.items())), self.n_min)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "kind": "2d",
            "sigma": str(self.sigma),
            "depth": str(self.depth),
            "n_min": str(self.n_min),
            "shifts": [[str(i), str(j)] for (i, j), _ in self.terms],
            "coefficients": [_poly_json(c) for _, c in self.terms],
        }


def _poly_json(p: PolyCoeff) -> dict:
    nums, den = p.to_integer_form()
    return {"numerators": [str(x) for x in nums], "denominator": str(den)}


def poly_from_json(d: dict) -> PolyCoeff:
    return PolyCoeff.from_integer_form([int(x) for x in d["numerators"]], int(d["denominator"]))


def recurrence_from_json(d: dict):
    coeffs = [poly_from_json(c) for c in d["coefficients"]]
    sigma, n_min = int(d["sigma"]), int(d["n_min"])
    if d["kind"] == "1d":
        shifts = [int(i) for i in d["shifts"]]
        return Recurrence1D(d["name"], sigma, tuple(zip(shifts, coeffs)), n_min, poly_from_json(d["leading"]))
    shifts = [(int(i), int(j)) for i, j in d["shifts"]]
    return Recurrence2D(d["name"], sigma, tuple(zip(shifts, coeffs)), n_min)


def _r1(name, sigma, n_min, terms, leading="1", seeds=()):
    return Recurrence1D(name, sigma, tuple((i, P(c)) for i, c in terms), n_min, P(leading), tuple(seeds))


def _r2(name, sigma, n_min, terms):
    return Recurrence2D(name, sigma, tuple(((i, j), P(c)) for (i, j), c in terms), n_min)


_G4_HEAD = [
    (1, "(625 n^4 - 1250 n^3 + 625 n^2 - 300 n - 543)/24"),
    (2, "(27500 n^4 - 184000 n^3 + 447500 n^2 - 473075 n + 180003)/72"),
    (3, "(336875 n^4 - 2546500 n^3 + 7679675 n^2 - 12016800 n + 8048577)/864"),
    (4, "(4833125 n^4 - 77581625 n^3 + 476892700 n^2 - 1304291160 n + 1325759504)/2592"),
    (5, "(1700625 n^4 + 28316750 n^3 - 605973450 n^2 + 3123850885 n - 5033477363)/7776"),
    (6, "(2670000 n^4 - 64380500 n^3 + 704577200 n^2 - 3610058445 n + 6818722190)/7776"),
    (7, "(2002500 n^4 - 51976000 n^3 + 517392050 n^2 - 2252744530 n + 3561765885)/7776"),
    (8, "(9078000 n^3 - 209915400 n^2 + 1640828980 n - 4301927039)/7776"),
    (9, "(5393400 n^2 - 91413680 n + 390747263)/2592"),
]
_G4_PENULTIMATE = "(1593990 n - 14522219)/972"
_G4_LAST = "310343/648"


def _build_registry() -> dict[str, Recurrence1D | Recurrence2D]:
    recs: list[Recurrence1D | Recurrence2D] = [
        _r1("G1d", 1, 2, [(1, "2n - 1"), (2, "1")], seeds=(1, 2)),
        _r2("E1d", 1, 2, [((1, 2), "2n - 1"), ((2, 2), "1")]),
        _r2("E2d", 2, 4, [
            ((1, 3), "(9n^2 - 9n + 2)/2"),
            ((1, 1), "-5/2"),
            ((2, 4), "(9n^2 - 36n + 35)/2"),
            ((2, 3), "6(n - 1)"),
            ((2, 2), "-3/2"),
            ((3, 4), "3(2n - 5)"),
            ((3, 3), "5/2"),
            ((4, 4), "5/2"),
        ]),
        _r1("G2d", 2, 4, [
            (1, "(9n^2 - 9n - 3)/2"),
            (2, "(9n^2 - 24n + 20)/2"),
            (3, "6n - 25/2"),
            (4, "5/2"),
        ], seeds=(1, 3, 31, 842)),
        _r1("G2e", 2, 3, [
            (1, "n(9n^2 - 27n + 17)/2"),
            (2, "6n^2 - 15n + 13/2"),
            (3, "(5n - 5)/2"),
        ], leading="n - 2", seeds=(1, 3, 31)),
        _r1("G3e", 3, 7, [
            (1, "32n^3/3 - 16n^2 + 10n/3 - 49/6"),
            (2, "48n^3 - 236n^2 + 1157n/3 - 650/3"),
            (3, "(80n^3 - 382n^2 + 641n - 511)/3"),
            (4, "64n^3/3 - 218n^2 + 2696n/3 - 7915/6"),
            (5, "56n^2 - 490n + 6853/6"),
            (6, "56n - 1703/6"),
            (7, "58/3"),
        ]),
        # offsets exactly as printed: two terms at n-11, none at n-10
        _r1("G4e", 4, 11, _G4_HEAD + [(11, _G4_PENULTIMATE), (11, _G4_LAST)]),
        _r1("G4e-corrected", 4, 11, _G4_HEAD + [(10, _G4_PENULTIMATE), (11, _G4_LAST)]),
        _r2("E3app", 3, 7, [
            ((1, 4), "32n^3/3 - 16n^2 + 22n/3 - 1"),
            ((1, 2), "-(4n + 3/2)"),
            ((1, 1), "-17/3"),
            ((2, 6), "16n^3 - 88n^2 + 159n - 189/2"),
            ((2, 5), "32n^3 - 176n^2 + 914n/3 - 497/3"),
            ((2, 4), "28n^2 - 66n + 46"),
            ((2, 3), "-12n + 29/2"),
            ((2, 2), "-17"),
            ((3, 7), "-16n^3/3 + 152n^2/3 - 479n/3 + 1001/6"),
            ((3, 6), "32n^3 - 262n^2 + 2218n/3 - 4255/6"),
            ((3, 5), "84n^2 - 382n + 1247/3"),
            ((3, 4), "16n - 47/3"),
            ((3, 3), "-28"),
            ((4, 7), "64n^3/3 - 302n^2 + 4154n/3 - 12427/6"),
            ((4, 6), "84n^2 - 562n + 2858/3"),
            ((4, 5), "76n - 187"),
            ((4, 4), "-41/3"),
            ((5, 7), "56n^2 - 574n + 4352/3"),
            ((5, 6), "84n - 651/2"),
            ((5, 5), "17"),
            ((6, 7), "56n - 1877/6"),
            ((6, 6), "29"),
            ((7, 7), "58/3"),
        ]),
    ]
    return {r.name: r for r in recs}


_REGISTRY = _build_registry()


def registry() -> dict[str, Recurrence1D | Recurrence2D]:
    return dict(_REGISTRY)


@dataclass(frozen=True)
class VerificationReport:
    name: str
    n_range: tuple[int, int]
    passed: bool
    first_failure: tuple[int, ...] | None = None
    residual: Fraction | None = None
    checked: int = 0

    def to_text(self) -> str:
        lo, hi = self.n_range
        head = f"{self.name} n={lo}..{hi}"
        if self.passed:
            return f"{head} PASS ({self.checked} identities)"
        where = ",".join(map(str, self.first_failure or ()))
        return f"{head} FAIL at ({where}) residual={self.residual}"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "range": [str(x) for x in self.n_range],
            "pass": self.passed,
            "first_failure": [str(x) for x in self.first_failure] if self.first_failure is not None else None,
            "residual": str(self.residual) if self.residual is not None else None,
        }


def merge_reports(name: str, reports: Iterable[VerificationReport]) -> VerificationReport:
    """Combine reports over disjoint ranges; the smallest failing index wins."""
    reports = list(reports)
    lo = min(r.n_range[0] for r in reports)
    hi = max(r.n_range[1] for r in reports)
    fails = sorted((r for r in reports if not r.passed), key=lambda r: r.first_failure)
    checked = sum(r.checked for r in reports)
    if fails:
        f = fails[0]
        return VerificationReport(name, (lo, hi), False, f.first_failure, f.residual, checked)
    return VerificationReport(name, (lo, hi), True, checked=checked)


def verify_1d(rec: Recurrence1D, n_range: tuple[int, int],
              provider: Callable[[int, int], Sequence[int]] = g_sequence) -> VerificationReport:
    """Check the residual is exactly 0 for every n in [lo, hi].

    ``provider(sigma, n_max)`` supplies T(0..n_max); by default the row sums
    of the E table.
    """
    lo, hi = n_range
    values = provider(rec.sigma, hi)
    if len(values) <= hi:
        raise ValueError(f"provider returned {len(values)} values, need {hi + 1}")
    for n in range(lo, hi + 1):
        r = rec.residual(values, n)
        if r != 0:
            return VerificationReport(rec.name, (lo, hi), False, (n,), r, n - lo)
    return VerificationReport(rec.name, (lo, hi), True, checked=hi - lo + 1)


def verify_2d(rec: Recurrence2D, table: ETable, n_range: tuple[int, int]) -> VerificationReport:
    """Check every (n, k) with lo <= n <= hi and 0 <= k <= (sigma+1)n + depth."""
    lo, hi = n_range
    if table.n_max < hi:
        raise ValueError(f"table covers n <= {table.n_max}, need {hi}")
    if table.sigma != rec.sigma:
        raise ValueError(f"table is for sigma={table.sigma}, recurrence for sigma={rec.sigma}")
    checked = 0
    for n in range(lo, hi + 1):
        for k in range(0, (rec.sigma + 1) * n + rec.depth + 1):
            r = rec.residual(table, n, k)
            checked += 1
            if r != 0:
                return VerificationReport(rec.name, (lo, hi), False, (n, k), r, checked)
    return VerificationReport(rec.name, (lo, hi), True, checked=checked)


def _verify_range(rec, lo: int, hi: int) -> VerificationReport:
    if isinstance(rec, Recurrence2D):
        return verify_2d(rec, build_e_table(rec.sigma, hi), (lo, hi))
    return verify_1d(rec, (lo, hi))


def verify(rec: Recurrence1D | Recurrence2D, n_max: int, n_min: int | None = None,
           jobs: int = 1) -> VerificationReport:
    """Verify on [n_min, n_max]; with jobs > 1 the range is split into
    contiguous chunks checked in separate processes."""
    lo = rec.n_min if n_min is None else n_min
    if jobs <= 1 or n_max - lo < 2 * jobs:
        return _verify_range(rec, lo, n_max)
    from concurrent.futures import ProcessPoolExecutor

    bounds = [lo + (n_max - lo + 1) * t // jobs for t in range(jobs + 1)]
    chunks = [(bounds[t], bounds[t + 1] - 1) for t in range(jobs)]
    with ProcessPoolExecutor(jobs) as ex:
        reports = list(ex.map(_verify_range, [rec] * jobs, *zip(*chunks)))
    return merge_reports(rec.name, reports)


# ---------------------------------------------------------------------------
# Sister Celine certificate for the E_2 summand


def d2_summand(n: int, k: int, c: int) -> Fraction:
    """k! / ((2n-k+c)! (k-n-2c)! c! 2^(k-n-c) 3^c); 0 if a factorial argument is negative."""
    a, b = 2 * n - k + c, k - n - 2 * c
    if a < 0 or b < 0 or c < 0 or k < 0:
        return Fraction(0)
    return Fraction(factorial(k), factorial(a) * factorial(b) * factorial(c)) / (Fraction(2) ** (k - n - c) * 3**c)


@dataclass(frozen=True)
class CelineCertificate:
    """Coefficients C(r, s, t) (polynomials in n) with
    sum C(r,s,t) D_2(n+r, k+s, c+t) = 0."""

    entries: tuple[tuple[tuple[int, int, int], PolyCoeff], ...]

    def as_dict(self) -> dict[tuple[int, int, int], PolyCoeff]:
        return dict(self.entries)

    def __getitem__(self, key: tuple[int, int, int]) -> PolyCoeff:
        return self.as_dict().get(key, PolyCoeff())

    def __len__(self) -> int:
        return sum(1 for _, c in self.entries if not c.is_zero())

    def replace(self, key, value) -> "CelineCertificate":
        d = self.as_dict()
        d[key] = value if isinstance(value, PolyCoeff) else PolyCoeff.const(value)
        return CelineCertificate(tuple(sorted(d.items())))

    def collapsed(self) -> dict[tuple[int, int], PolyCoeff]:
        """sum_t C(r, s, t): the (r, s) coefficients after summing on c."""
        out: dict[tuple[int, int], PolyCoeff] = {}
        for (r, s, _), c in self.entries:
            out[(r, s)] = out.get((r, s), PolyCoeff()) + c
        return {k: v for k, v in sorted(out.items()) if not v.is_zero()}


_CELINE_CONSTANTS = {
    (0, 0, 1): "-8", (0, 0, 2): "7", (0, 0, 3): "-3/2",
    (1, 0, 1): "-18", (1, 0, 2): "15", (1, 0, 3): "-3",
    (1, 1, 1): "-4", (1, 1, 2): "3/2",
    (2, 0, 0): "-9", (2, 0, 1): "9",
    (2, 1, 1): "-9", (2, 1, 2): "3",
    (2, 2, 1): "6", (2, 2, 2): "-6", (2, 2, 3): "3/2",
    (3, 1, 0): "-9",
    (3, 3, 1): "5", (3, 3, 2): "-5/2",
    (4, 4, 1): "1",
}

# Same 19 positions; entries that grow with n carry their n-dependence.  The
# constant entries coincide with the table above.
_CELINE_POLYS = {
    **_CELINE_CONSTANTS,
    (1, 0, 1): "-9(2n + 3)",
    (1, 0, 2): "15(2n + 3)/2",
    (1, 0, 3): "-3(2n + 3)/2",
    (2, 0, 0): "-(3n + 5)(3n + 7)",
    (2, 0, 1): "(3n + 5)(3n + 7)/2",
    (2, 1, 1): "-9(n + 3)",
    (2, 1, 2): "3(n + 3)",
    (3, 1, 0): "-(3n + 10)(3n + 11)/2",
}


def printed_celine_constants() -> CelineCertificate:
    """The 19 values as constants, without n-dependence."""
    return CelineCertificate(tuple(sorted((k, P(v)) for k, v in _CELINE_CONSTANTS.items())))


def celine_certificate() -> CelineCertificate:
    return CelineCertificate(tuple(sorted((k, P(v)) for k, v in _CELINE_POLYS.items())))


def _d2_args_ok(n: int, k: int, c: int) -> bool:
    return 2 * n - k + c >= 0 and k - n - 2 * c >= 0 and c >= 0


def celine_grid(n_lo: int, n_hi: int) -> list[tuple[int, int, int]]:
    """Points with n+2 <= k <= 3n-2 and every c where D_2(n, k, c) is defined.
    Shifted summands outside their range count as 0."""
    pts = []
    for n in range(n_lo, n_hi + 1):
        for k in range(n + 2, 3 * n - 1):
            for c in range(0, n + 1):
                if _d2_args_ok(n, k, c):
                    pts.append((n, k, c))
    return pts


def shifted_e2d() -> dict[tuple[int, int], PolyCoeff]:
    """E2d rewritten as sum_{(r,s)} a_rs(n) E_2(n+r, k+s) = 0 with a_44 = 1."""
    rec = _REGISTRY["E2d"]
    out = {(4, 4): PolyCoeff.const(1)}
    for (i, j), c in rec.coefficients().items():
        out[(4 - i, 4 - j)] = -c.shift(4)
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class CelineReport:
    annihilates: VerificationReport
    collapse_matches: bool
    collapse_identity: VerificationReport

    @property
    def passed(self) -> bool:
        return self.annihilates.passed and self.collapse_matches and self.collapse_identity.passed

    def to_text(self) -> str:
        return "\n".join([
            self.annihilates.to_text(),
            f"collapsed coefficients equal shifted E2d: {'yes' if self.collapse_matches else 'NO'}",
            self.collapse_identity.to_text(),
        ])


def celine_check(cert: CelineCertificate, grid: Sequence[tuple[int, int, int]],
                 collapse_n_max: int = 20) -> CelineReport:
    """(a) the certificate kills D_2 at each grid point; (b) its c-sum is the
    shifted E2d recurrence and that identity holds on the E_2 table."""
    if not grid:
        raise ValueError("empty grid")
    entries = cert.as_dict()
    ns = [p[0] for p in grid]
    a_report = VerificationReport("celine-annihilation", (min(ns), max(ns)), True, checked=len(grid))
    for n, k, c in grid:
        r = sum((coef(n) * d2_summand(n + dr, k + ds, c + dt) for (dr, ds, dt), coef in entries.items()),
                Fraction(0))
        if r != 0:
            a_report = VerificationReport("celine-annihilation", (min(ns), max(ns)), False, (n, k, c), r)
            break

    collapsed = cert.collapsed()
    matches = collapsed == shifted_e2d()
    table = build_e_table(2, collapse_n_max + 4)
    b_report = VerificationReport("celine-collapse", (0, collapse_n_max), True)
    checked = 0
    for n in range(0, collapse_n_max + 1):
        for k in range(0, 3 * n + 1):
            r = sum((coef(n) * table(n + dr, k + ds) for (dr, ds), coef in collapsed.items()), Fraction(0))
            checked += 1
            if r != 0:
                b_report = VerificationReport("celine-collapse", (0, collapse_n_max), False, (n, k), r, checked)
                break
        if not b_report.passed:
            break
    else:
        b_report = VerificationReport("celine-collapse", (0, collapse_n_max), True, checked=checked)
    return CelineReport(a_report, matches, b_report)


# ---------------------------------------------------------------------------
# Structural conjectures on E-level recurrences


def conjectured_depth(sigma: int) -> int:
    return comb(sigma + 1, 2) + 1


def zero_pattern_allows(sigma: int, i: int, j: int) -> bool:
    """True unless (i, j) lies in the region where c_ij is conjectured to vanish
    (reading the bound with sigma in place of n)."""
    delta = conjectured_depth(sigma)
    if j > delta or j < i:
        return False
    if i < sigma and Fraction(j) > delta - Fraction((sigma + 1 - i) ** 2 - sigma - i - 1, 2):
        return False
    return True


def degree_bound(sigma: int, i: int, j: int) -> int:
    return min(sigma, j - i)


@dataclass
class StructureReport:
    name: str
    sigma: int
    depth: int
    expected_depth: int
    zero_violations: list[tuple[int, int]]
    degree_violations: list[tuple[int, int, int, int]]
    notes: list[str]

    @property
    def depth_ok(self) -> bool:
        return self.depth == self.expected_depth

    @property
    def conforms(self) -> bool:
        return self.depth_ok and not self.zero_violations and not self.degree_violations

    def to_text(self) -> str:
        lines = [f"{self.name} sigma={self.sigma}: depth {self.depth} (expected {self.expected_depth})"
                 f" {'ok' if self.depth_ok else 'MISMATCH'}"]
        lines.append(f"  zero-pattern violations: {self.zero_violations or 'none'}")
        lines.append(f"  degree violations: {self.degree_violations or 'none'}")
        lines += [f"  note: {s}" for s in self.notes]
        return "\n".join(lines)


def structure_check(rec: Recurrence2D, sigma: int | None = None) -> StructureReport:
    sigma = rec.sigma if sigma is None else sigma
    zero_v, deg_v = [], []
    for (i, j), c in rec.coefficients().items():
        if c.is_zero():
            continue
        if not zero_pattern_allows(sigma, i, j):
            zero_v.append((i, j))
        if j < i:
            continue
        bound = degree_bound(sigma, i, j)
        if c.degree > bound:
            deg_v.append((i, j, c.degree, bound))
    notes = ["depth and zero-pattern bounds read as C(sigma+1, 2) + 1"]
    return StructureReport(rec.name, sigma, rec.depth, conjectured_depth(sigma), zero_v, deg_v, notes)
