"""Exact counts E_sigma(n, k), G_sigma(n) and H_sigma(n).

E_sigma(n, k) is the number of partitions of {1..k} into exactly n blocks,
each of size at most sigma + 1 (a restricted Stirling number of the second
kind).  G_sigma(n) is its row sum and H_sigma(n) = n! * G_sigma(n - 1) counts
complete play-outs of the gift game with n gifts.

Everything here is plain Python ``int``/``Fraction`` arithmetic.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would exceed the caller's work budget."""


_FACTORIALS = [1]


def factorial(m: int) -> int:
    # memoized table, grown on demand
    if m < 0:
        raise ValueError(f"factorial of negative number {m}")
    while len(_FACTORIALS) <= m:
        _FACTORIALS.append(_FACTORIALS[-1] * len(_FACTORIALS))
    return _FACTORIALS[m]


def binomial(k: int, i: int) -> int:
    """C(k, i), with C(k, i) = 0 when i > k or i < 0."""
    if i < 0 or k < 0 or i > k:
        return 0
    return factorial(k) // (factorial(i) * factorial(k - i))


def _check_sigma(sigma: int) -> None:
    if sigma < 0:
        raise ValueError(f"steal limit must be >= 0, got {sigma}")


@dataclass(frozen=True)
class ETable:
    """Dense table of E_sigma(n, k) for 0 <= n <= n_max.

    ``rows[n][k]`` holds E_sigma(n, k) for 0 <= k <= (sigma+1)*n.  Lookups
    outside the stored trapezoid (including negative indices) return 0.
    """

    sigma: int
    n_max: int
    rows: tuple[tuple[int, ...], ...]

    def __call__(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or n > self.n_max:
            if n > self.n_max and n <= k <= (self.sigma + 1) * n:
                raise IndexError(f"E table has n_max={self.n_max}, asked for n={n}")
            return 0
        row = self.rows[n]
        return row[k] if k < len(row) else 0

    @property
    def k_max(self) -> int:
        return (self.sigma + 1) * self.n_max

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]

    def items(self) -> Iterator[tuple[int, int, int]]:
        """Yield (n, k, value) over the nonzero band n <= k <= (sigma+1)n."""
        for n, row in enumerate(self.rows):
            for k in range(n, len(row)):
                yield n, k, row[k]


@lru_cache(maxsize=32)
def build_e_table(sigma: int, n_max: int) -> ETable:
    """Fill E_sigma(n, k) row by row with the vertical recurrence

        E(n, k) = sum_{i=0}^{sigma} C(k-1, i) E(n-1, k-1-i).
    """
    _check_sigma(sigma)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    h = sigma + 1
    rows: list[tuple[int, ...]] = [(1,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        width = h * n + 1
        row = [0] * width
        for k in range(n, width):
            total = 0
            for i in range(h):
                j = k - 1 - i
                if 0 <= j < len(prev) and prev[j]:
                    total += binomial(k - 1, i) * prev[j]
            row[k] = total
        rows.append(tuple(row))
    return ETable(sigma, n_max, tuple(rows))


def compositions(sigma: int, n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Block-size profiles (a_1, ..., a_{sigma+1}) with sum a_i = n, sum i a_i = k.

    Iterates (a_2, ..., a_{sigma+1}) lexicographically; a_1 is forced.
    """
    _check_sigma(sigma)
    h = sigma + 1
    if n < 0 or k < 0:
        return

    def rest(i: int, blocks_left: int, excess_left: int) -> Iterator[tuple[int, ...]]:
        # choose a_i for i = 2..h; each block of size i uses i-1 units of excess k-n
        if i > h:
            if excess_left == 0:
                yield ()
            return
        top = min(blocks_left, excess_left // (i - 1))
        for a in range(top + 1):
            for tail in rest(i + 1, blocks_left - a, excess_left - a * (i - 1)):
                yield (a,) + tail

    if h == 1:
        if n == k:
            yield (n,)
        return
    for tail in rest(2, n, k - n):
        a1 = n - sum(tail)
        if a1 >= 0:
            yield (a1,) + tail


def e_multinomial(sigma: int, n: int, k: int) -> int:
    """E_sigma(n, k) as a sum over block-size profiles of
    k! / (prod a_i! * prod (i!)^{a_i})."""
    total = 0
    kf = factorial(k) if k >= 0 else 0
    for parts in compositions(sigma, n, k):
        den = 1
        for i, a in enumerate(parts, start=1):
            den *= factorial(a) * factorial(i) ** a
        total += kf // den
    return total


def e1_closed(n: int, k: int) -> int:
    """E_1(n, k) = k! / ((2n-k)! (k-n)! 2^(k-n)), zero off n <= k <= 2n."""
    if n < 0 or not n <= k <= 2 * n:
        return 0
    return factorial(k) // (factorial(2 * n - k) * factorial(k - n) * 2 ** (k - n))


def g(sigma: int, n: int) -> int:
    """G_sigma(n): number of scenarios with n+1 gifts taken from the pool in order."""
    _check_sigma(sigma)
    if n < 0:
        return 0
    return sum(build_e_table(sigma, n).row(n))


def g_sequence(sigma: int, n_max: int) -> list[int]:
    """[G_sigma(0), ..., G_sigma(n_max)] from one table build."""
    return build_e_table(sigma, n_max).row_sums()


def h(sigma: int, n: int) -> int:
    """H_sigma(n) = n! G_sigma(n-1), the total number of scenarios with n gifts."""
    if n < 1:
        raise ValueError("H_sigma(n) is defined for n >= 1")
    return factorial(n) * g(sigma, n - 1)


def multinomial(parts) -> int:
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def g_ordered_multinomial(sigma: int, n: int, budget: int = 10**6) -> int:
    """G_sigma(n) as (1/n!) * sum over ordered block sizes (i_1..i_n) in
    {1..sigma+1}^n of the multinomial (i_1+...+i_n; i_1, ..., i_n).

    This is exponential in n; ``budget`` caps the number of tuples visited.
    """
    _check_sigma(sigma)
    if (sigma + 1) ** n > budget:
        raise BudgetExceeded(f"{(sigma + 1) ** n} tuples exceeds budget {budget}")
    total = 0
    for sizes in itertools.product(range(1, sigma + 2), repeat=n):
        total += multinomial(sizes)
    q, r = divmod(total, factorial(n))
    assert r == 0
    return q


def bessel_y(n: int, z) -> Fraction:
    """Bessel polynomial y_n(z) = sum_{i=0}^n (n+i)! z^i / ((n-i)! i! 2^i)."""
    z = Fraction(z)
    total = Fraction(0)
    for i in range(n + 1):
        total += Fraction(factorial(n + i), factorial(n - i) * factorial(i) * 2**i) * z**i
    return total
