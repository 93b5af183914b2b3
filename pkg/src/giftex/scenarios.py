"""Brute-force play-outs of the gift game and their set-partition images.

A scenario with ``gifts`` gifts (pool order normalized to 1, 2, ...) is the
sequence of gift labels chosen at each action.  It starts with 1, ends with
the single occurrence of ``gifts``, uses every label below ``gifts`` between
1 and sigma+1 times, and introduces labels in increasing order.

Deleting the final label and recording the positions of each label gives a
partition of {1..k} into gifts-1 blocks of size <= sigma+1, and back.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .core import BudgetExceeded

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class ScenarioSequence:
    gifts: int
    gammas: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "gammas", tuple(self.gammas))

    def __str__(self) -> str:
        if self.gifts <= 9:
            return "".join(map(str, self.gammas))
        return ",".join(map(str, self.gammas))

    @classmethod
    def parse(cls, text: str) -> "ScenarioSequence":
        text = text.strip()
        labels = [int(t) for t in text.split(",")] if "," in text else [int(c) for c in text]
        return cls(max(labels), tuple(labels))

    def validate(self, sigma: int | None = None) -> None:
        """Raise ValueError unless this is a legal normalized scenario
        (for steal limit ``sigma`` when given)."""
        s, m = self.gammas, self.gifts
        if m < 1 or not s:
            raise ValueError("empty scenario")
        if s[0] != 1 or s[-1] != m:
            raise ValueError(f"{self}: must start with 1 and end with {m}")
        counts = Counter(s)
        if counts[m] != 1:
            raise ValueError(f"{self}: label {m} must appear exactly once")
        seen = 0
        for x in s:
            if not 1 <= x <= m:
                raise ValueError(f"{self}: label {x} out of range")
            if x > seen + 1:
                raise ValueError(f"{self}: label {x} appears before {x - 1}")
            seen = max(seen, x)
        for i in range(1, m):
            if counts[i] < 1:
                raise ValueError(f"{self}: label {i} never appears")
            if sigma is not None and counts[i] > sigma + 1:
                raise ValueError(f"{self}: label {i} taken {counts[i]} times, limit {sigma + 1}")


@dataclass(frozen=True)
class SetPartition:
    """Partition of {1..ground_size}; ``blocks`` are tuples in label order."""

    ground_size: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        elems = [x for b in blocks for x in b]
        if any(not b for b in blocks):
            raise ValueError("empty block")
        if sorted(elems) != list(range(1, self.ground_size + 1)):
            raise ValueError(f"blocks {blocks} do not partition 1..{self.ground_size}")

    @classmethod
    def from_blocks(cls, blocks) -> "SetPartition":
        """Build from any iterable of blocks, labelled by ascending minimum."""
        blocks = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])
        return cls(sum(len(b) for b in blocks), tuple(blocks))

    def __str__(self) -> str:
        return ", ".join("".join(map(str, b)) if self.ground_size <= 9 else "{" + ",".join(map(str, b)) + "}"
                         for b in self.blocks)


def iter_scenarios(sigma: int, gifts: int) -> Iterator[ScenarioSequence]:
    """Depth-first generation in lexicographic order."""
    if sigma < 0:
        raise ValueError("sigma must be >= 0")
    if gifts < 1:
        raise ValueError("gifts must be >= 1")
    cap = sigma + 1
    counts = [0] * (gifts + 1)
    seq: list[int] = []

    def extend(top: int) -> Iterator[ScenarioSequence]:
        # top = largest label used so far
        for x in range(1, top + 2):
            if x == gifts:
                yield ScenarioSequence(gifts, tuple(seq) + (gifts,))
                continue
            if x > gifts or counts[x] >= cap:
                continue
            counts[x] += 1
            seq.append(x)
            yield from extend(max(top, x))
            seq.pop()
            counts[x] -= 1

    if gifts == 1:
        yield ScenarioSequence(1, (1,))
        return
    counts[1] = 1
    seq.append(1)
    yield from extend(1)


def enumerate_scenarios(sigma: int, gifts: int, budget: int = DEFAULT_BUDGET) -> list[ScenarioSequence]:
    out = []
    for s in iter_scenarios(sigma, gifts):
        if len(out) >= budget:
            raise BudgetExceeded(f"more than {budget} scenarios for sigma={sigma}, gifts={gifts}")
        out.append(s)
    return out


def count_by_length(sigma: int, gifts: int, budget: int = DEFAULT_BUDGET) -> dict[int, int]:
    hist: Counter[int] = Counter()
    seen = 0
    for s in iter_scenarios(sigma, gifts):
        seen += 1
        if seen > budget:
            raise BudgetExceeded(f"more than {budget} scenarios for sigma={sigma}, gifts={gifts}")
        hist[len(s.gammas)] += 1
    return dict(sorted(hist.items()))


def scenario_to_partition(s: ScenarioSequence) -> SetPartition:
    s.validate()
    short = s.gammas[:-1]
    blocks: list[list[int]] = [[] for _ in range(s.gifts - 1)]
    for pos, label in enumerate(short, start=1):
        blocks[label - 1].append(pos)
    return SetPartition(len(short), tuple(map(tuple, blocks)))


def partition_to_scenario(p: SetPartition, sigma: int) -> ScenarioSequence:
    """Inverse of :func:`scenario_to_partition`; block i gets label i."""
    mins = [b[0] for b in p.blocks]
    if mins != sorted(mins):
        raise ValueError(f"blocks of {p} are not in first-occurrence order")
    gammas = [0] * p.ground_size
    for label, block in enumerate(p.blocks, start=1):
        if len(block) > sigma + 1:
            raise ValueError(f"block {block} larger than sigma+1={sigma + 1}")
        for pos in block:
            gammas[pos - 1] = label
    n = len(p.blocks)
    return ScenarioSequence(n + 1, tuple(gammas) + (n + 1,))
