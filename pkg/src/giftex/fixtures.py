"""Published table values shipped with the package, and exact re-checks."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .core import build_e_table, g_sequence, h


@dataclass(frozen=True)
class FixtureRecord:
    kind: str  # "E", "G" or "H"
    sigma: int
    indices: tuple[int, ...]
    value: int
    source: str

    @property
    def label(self) -> str:
        return f"{self.kind}_{self.sigma}({','.join(map(str, self.indices))})"


@dataclass(frozen=True)
class Mismatch:
    record: FixtureRecord
    computed: int

    def __str__(self) -> str:
        return f"{self.record.label} [{self.record.source}]: printed {self.record.value}, computed {self.computed}"


@lru_cache(maxsize=None)
def load_fixtures() -> tuple[FixtureRecord, ...]:
    raw = json.loads(resources.files("giftex").joinpath("data/fixtures.json").read_text())
    return tuple(
        FixtureRecord(r["kind"], r["sigma"], tuple(r["indices"]), int(r["value"]), r["source"])
        for r in raw["records"]
    )


def compute(rec: FixtureRecord) -> int:
    if rec.kind == "E":
        n, k = rec.indices
        return build_e_table(rec.sigma, n)(n, k)
    if rec.kind == "G":
        return g_sequence(rec.sigma, rec.indices[0])[rec.indices[0]]
    if rec.kind == "H":
        return h(rec.sigma, rec.indices[0])
    raise ValueError(f"unknown fixture kind {rec.kind!r}")


def compare_all(records=None) -> list[Mismatch]:
    records = load_fixtures() if records is None else records
    out = []
    for rec in records:
        v = compute(rec)
        if v != rec.value:
            out.append(Mismatch(rec, v))
    return out


def _printed(records):
    e, g = {}, {}
    for r in records:
        if r.kind == "E":
            e[(r.sigma,) + r.indices] = r.value
        elif r.kind == "G":
            g[(r.sigma, r.indices[0])] = r.value
    return e, g


def row_sum_checks(records=None) -> list[str]:
    """Printed E rows that are complete (all of k <= (sigma+1)n shown) must
    sum to the printed G value.  Returns a list of failures."""
    records = load_fixtures() if records is None else records
    e, g = _printed(records)
    k_max = max(k for (_, _, k) in e)
    fails = []
    for (sigma, n), gv in sorted(g.items()):
        if (sigma + 1) * n > k_max or (sigma, n, 0) not in e:
            continue
        s = sum(e[(sigma, n, k)] for k in range(k_max + 1))
        if s != gv:
            fails.append(f"row sum E_{sigma}({n},.) = {s} but G_{sigma}({n}) = {gv}")
    return fails


def column_checks(records=None) -> list[str]:
    """Blocks only exceed sigma+1 elements once k - n > sigma, so neighbouring
    tables agree there: E_s(n,k) = E_{s+1}(n,k) for k - n <= s."""
    records = load_fixtures() if records is None else records
    e, _ = _printed(records)
    fails = []
    for (sigma, n, k), v in sorted(e.items()):
        w = e.get((sigma + 1, n, k))
        if w is not None and k - n <= sigma and v != w:
            fails.append(f"E_{sigma}({n},{k}) = {v} but E_{sigma + 1}({n},{k}) = {w}")
    return fails


def read_bfile(path: str | Path) -> dict[int, int]:
    """'index value' pairs, one per line; '#' starts a comment."""
    out = {}
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        i, v = line.split()[:2]
        out[int(i)] = int(v)
    return out


def compare_bfile(values: dict[int, int], sigma: int) -> list[str]:
    """Compare a snapshot of G_sigma(n) against the computed sequence."""
    if not values:
        return []
    seq = g_sequence(sigma, max(values))
    return [f"G_{sigma}({n}): snapshot {v}, computed {seq[n]}" for n, v in sorted(values.items()) if seq[n] != v]
