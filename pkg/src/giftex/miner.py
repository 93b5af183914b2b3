"""Guess polynomial-coefficient recurrences from exact data.

Unknowns are the coefficients a_{s,p} of c_s(n) = sum_p a_{s,p} n^p.  Each
training index gives one linear equation; the augmented matrix [A | -T] is
reduced by fraction-free (Bareiss) elimination and its kernel read off
exactly.  A fit is accepted only when the kernel is one-dimensional with a
nonzero last coordinate (the monic normalization), and only if it then holds
exactly on a disjoint holdout block.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Literal, Sequence

from .core import build_e_table, g_sequence
from .poly import PolyCoeff
from .recurrences import (Recurrence1D, Recurrence2D, verify_1d, verify_2d,
                          zero_pattern_allows, degree_bound)


class UnderdeterminedFit(ValueError):
    """Fewer training equations than unknowns."""


class NonUniqueFit(ValueError):
    def __init__(self, dimension: int):
        super().__init__(f"solution space has dimension {dimension}")
        self.dimension = dimension


# ---------------------------------------------------------------------------
# exact linear algebra


def _clear_row(row: Sequence) -> list[int]:
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    return [int(x * den) for x in row]


def echelon(rows: Sequence[Sequence]) -> tuple[list[list[int]], list[int]]:
    """Bareiss elimination to row echelon form.

    Pivot choice: columns left to right, first row (in current order) with a
    nonzero entry.  Returns the nonzero echelon rows and their pivot columns.
    """
    m = [_clear_row(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        prow = m[r]
        for i in range(r + 1, len(m)):
            row = m[i]
            f = row[c]
            if f:
                m[i] = [(piv * row[j] - f * prow[j]) // prev if j > c else 0 for j in range(ncols)]
                # entries left of c are already zero
            else:
                m[i] = [(piv * row[j]) // prev if j > c else 0 for j in range(ncols)]
        prev = piv
        pivots.append(c)
        r += 1
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Exact kernel basis; one vector per free column, with that column = 1."""
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    ncols = len(rows[0])
    ech, pivots = echelon(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(reversed(ech), reversed(pivots)):
            s = sum((row[j] * x[j] for j in range(pc + 1, ncols) if row[j] and x[j]), Fraction(0))
            x[pc] = -s / row[pc]
        basis.append(x)
    return basis


def primitive(v: Sequence[Fraction]) -> list[int]:
    """Scale a rational vector to coprime integers with a positive last nonzero entry."""
    ints = _clear_row(v)
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints] if g else ints
    last = next((x for x in reversed(ints) if x), 0)
    return [-x for x in ints] if last < 0 else ints


# ---------------------------------------------------------------------------
# fitting


@dataclass(frozen=True)
class FitSpec:
    """What to fit and where.

    ``train`` and ``holdout`` are inclusive n-ranges.  Leaving them unset
    picks the smallest training block with at least twice as many equations as
    unknowns (plus ``margin``) and a holdout block twice its size.
    """

    target: Literal["G", "E"]
    sigma: int
    depth: int
    degree: int
    train: tuple[int, int] | None = None
    holdout: tuple[int, int] | None = None
    margin: int = 6
    prune: bool = False
    generalized: bool = False

    def __post_init__(self):
        if self.target not in ("G", "E"):
            raise ValueError(f"target must be G or E, got {self.target!r}")
        if self.sigma < 0 or self.depth < 1 or self.degree < 0:
            raise ValueError("need sigma >= 0, depth >= 1, degree >= 0")
        if self.generalized and self.target != "G":
            raise ValueError("generalized fits are 1D only")

    def shifts(self) -> list:
        d = self.depth
        if self.target == "G":
            return list(range(1, d + 1))
        out = []
        for i in range(0, d + 1):
            for j in range(i, d + 1):
                if (i, j) == (0, 0):
                    continue
                if self.prune and not zero_pattern_allows(self.sigma, i, j):
                    continue
                out.append((i, j))
        return out

    def degree_of(self, shift) -> int:
        if self.prune and self.target == "E":
            i, j = shift
            return min(self.degree, degree_bound(self.sigma, i, j))
        return self.degree

    def unknowns(self) -> int:
        n = sum(self.degree_of(s) + 1 for s in self.shifts())
        if self.generalized:
            n += self.degree  # c_0 has degree + 1 coefficients, one fixed by scaling
        return n


@dataclass(frozen=True)
class FitResult:
    status: Literal["ok", "none", "non-unique"]
    recurrence: Recurrence1D | Recurrence2D | None = None
    dimension: int = 0
    train: tuple[int, int] | None = None
    holdout: tuple[int, int] | None = None
    equations: int = 0
    unknowns: int = 0


def _e_train_points(sigma: int, depth: int, n: int) -> list[tuple[int, int]]:
    # k < n gives 0 = 0; k < depth would reference negative indices
    return [(n, k) for k in range(max(depth, n), (sigma + 1) * n + depth + 1)]


def _auto_train(spec: FitSpec) -> tuple[int, int]:
    need = 2 * spec.unknowns() + spec.margin
    lo = spec.depth
    if spec.target == "G":
        return lo, lo + need - 1
    hi, have = lo - 1, 0
    while have < need:
        hi += 1
        have += len(_e_train_points(spec.sigma, spec.depth, hi))
    return lo, hi


def _columns(spec: FitSpec):
    cols = [(s, p) for s in spec.shifts() for p in range(spec.degree_of(s) + 1)]
    if spec.generalized:
        cols += [(0, p) for p in range(spec.degree + 1)]
    return cols


def _assemble(spec: FitSpec, train: tuple[int, int]):
    """Rows of the homogeneous system.  For monic fits the last column holds
    -T(n); for generalized fits the trailing columns are c_0's coefficients."""
    cols = _columns(spec)
    rows = []
    if spec.target == "G":
        vals = g_sequence(spec.sigma, train[1])
        T = lambda m: vals[m] if m >= 0 else 0  # noqa: E731
        for n in range(train[0], train[1] + 1):
            row = [-(n**p) * T(n) if s == 0 else n**p * T(n - s) for s, p in cols]
            rows.append(row if spec.generalized else row + [-T(n)])
    else:
        table = build_e_table(spec.sigma, train[1])
        for n in range(train[0], train[1] + 1):
            for _, k in _e_train_points(spec.sigma, spec.depth, n):
                row = [n**p * table(n - i, k - j) for (i, j), p in cols]
                rows.append(row + [-table(n, k)])
    return cols, rows


def _build(spec: FitSpec, cols, sol: Sequence[Fraction], n_min: int):
    coeffs: dict = {}
    lead = [Fraction(1)]
    if spec.generalized:
        lead = [Fraction(0)] * (spec.degree + 1)
    for (s, p), v in zip(cols, sol):
        if s == 0 and spec.target == "G":
            lead[p] = v
            continue
        coeffs.setdefault(s, [Fraction(0)] * (spec.degree_of(s) + 1))[p] = v
    polys = {s: PolyCoeff(tuple(c)) for s, c in coeffs.items()}
    terms = tuple((s, c) for s, c in sorted(polys.items()) if not c.is_zero())
    name = f"mined-{spec.target}{spec.sigma}-d{spec.depth}"
    if spec.target == "G":
        return Recurrence1D(name, spec.sigma, terms, n_min, PolyCoeff(tuple(lead)))
    return Recurrence2D(name, spec.sigma, terms, n_min)


def _normalize(spec: FitSpec, v: Sequence[Fraction]) -> list[Fraction] | None:
    """Scale a kernel vector so c_0 is monic; None if c_0 vanishes."""
    if not spec.generalized:
        return [x / v[-1] for x in v[:-1]] if v[-1] else None
    top = next((x for x in reversed(v[-(spec.degree + 1):]) if x), None)
    return [x / top for x in v] if top else None


def fit(spec: FitSpec) -> FitResult:
    train = spec.train or _auto_train(spec)
    cols, rows = _assemble(spec, train)
    if len(rows) < len(cols):
        raise UnderdeterminedFit(f"{len(rows)} equations for {len(cols)} unknowns")
    size = train[1] - train[0] + 1
    holdout = spec.holdout or (train[1] + 1, train[1] + 2 * size)
    basis = nullspace(rows)
    common = dict(train=train, holdout=holdout, equations=len(rows), unknowns=len(cols))
    if len(basis) > 1:
        return FitResult("non-unique", dimension=len(basis), **common)
    sol = _normalize(spec, basis[0]) if basis else None
    if sol is None:
        return FitResult("none", dimension=len(basis), **common)
    rec = _build(spec, cols, sol, train[0])
    if spec.target == "G":
        report = verify_1d(rec, holdout)
    else:
        report = verify_2d(rec, build_e_table(spec.sigma, holdout[1]), holdout)
    if not report.passed:
        return FitResult("none", dimension=1, **common)
    return FitResult("ok", rec, 1, **common)


def fit_1d(spec: FitSpec) -> Recurrence1D | None:
    if spec.target != "G":
        raise ValueError("fit_1d needs target G")
    res = fit(spec)
    if res.status == "non-unique":
        raise NonUniqueFit(res.dimension)
    return res.recurrence


def fit_2d(spec: FitSpec) -> Recurrence2D | None:
    if spec.target != "E":
        raise ValueError("fit_2d needs target E")
    res = fit(spec)
    if res.status == "non-unique":
        raise NonUniqueFit(res.dimension)
    return res.recurrence


def minimal_depth(target: Literal["G", "E"], sigma: int, degree: int | None = None,
                  max_depth: int = 8, max_unknowns: int = 200) -> int | None:
    """Smallest depth at which a unique monic fit survives holdout.

    Degree bound defaults to sigma.  Returns None ("unresolved") once the
    search exceeds ``max_depth`` or the system would exceed ``max_unknowns``.
    Non-unique fits at a depth count as failure there: a larger depth is
    tried, matching the convention that depth is where a unique recurrence
    first appears.
    """
    d = sigma if degree is None else degree
    for depth in range(1, max_depth + 1):
        spec = FitSpec(target, sigma, depth, d)
        if spec.unknowns() > max_unknowns:
            return None
        if fit(spec).status == "ok":
            return depth
    return None
