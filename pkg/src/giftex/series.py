"""Truncated power series with exact rational coefficients.

An :class:`ExactSeries` of order N stores c_0..c_N; results of binary
operations are truncated to the smaller order of the operands.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import factorial


@dataclass(frozen=True)
class ExactSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_list(cls, coeffs: Sequence, order: int | None = None) -> "ExactSeries":
        coeffs = list(coeffs)
        if order is not None:
            coeffs = (coeffs + [0] * (order + 1))[: order + 1]
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c, order: int) -> "ExactSeries":
        return cls.from_list([c], order)

    @classmethod
    def x(cls, order: int) -> "ExactSeries":
        return cls.from_list([0, 1], order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i <= self.order else Fraction(0)

    def truncate(self, order: int) -> "ExactSeries":
        return ExactSeries.from_list(self.coeffs, order)

    def __add__(self, other):
        if not isinstance(other, ExactSeries):
            other = ExactSeries.constant(other, self.order)
        N = min(self.order, other.order)
        return ExactSeries(tuple(self[i] + other[i] for i in range(N + 1)))

    __radd__ = __add__

    def __neg__(self):
        return ExactSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ExactSeries):
            other = Fraction(other)
            return ExactSeries(tuple(c * other for c in self.coeffs))
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, ExactSeries):
            other = Fraction(other)
            return ExactSeries(tuple(c / other for c in self.coeffs))
        return series_mul(self, series_inverse(other))

    def __eq__(self, other):
        if not isinstance(other, ExactSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def series_mul(a: ExactSeries, b: ExactSeries) -> ExactSeries:
    N = min(a.order, b.order)
    out = [Fraction(0)] * (N + 1)
    for i in range(N + 1):
        ai = a.coeffs[i]
        if ai:
            for j in range(N + 1 - i):
                out[i + j] += ai * b.coeffs[j]
    return ExactSeries(tuple(out))


def series_derivative(a: ExactSeries) -> ExactSeries:
    """Order drops by one (order 0 gives the zero series of order 0)."""
    if a.order == 0:
        return ExactSeries((Fraction(0),))
    return ExactSeries(tuple(i * a.coeffs[i] for i in range(1, a.order + 1)))


def series_integral(a: ExactSeries, constant=0) -> ExactSeries:
    """Antiderivative with the given constant term; order rises by one."""
    return ExactSeries((Fraction(constant),) + tuple(c / (i + 1) for i, c in enumerate(a.coeffs)))


def series_inverse(a: ExactSeries) -> ExactSeries:
    c0 = a.coeffs[0]
    if c0 == 0:
        raise ValueError("series with zero constant term has no inverse")
    out = [1 / c0]
    for n in range(1, a.order + 1):
        s = sum(a.coeffs[i] * out[n - i] for i in range(1, n + 1))
        out.append(-s / c0)
    return ExactSeries(tuple(out))


def series_exp(f: ExactSeries) -> ExactSeries:
    """exp(f) for f(0) = 0, from g' = f' g:  n g_n = sum_{i=1}^n i f_i g_{n-i}."""
    if f.coeffs[0] != 0:
        raise ValueError("series_exp needs zero constant term")
    g = [Fraction(1)]
    for n in range(1, f.order + 1):
        s = sum(i * f.coeffs[i] * g[n - i] for i in range(1, n + 1))
        g.append(s / n)
    return ExactSeries(tuple(g))


def series_sqrt(f: ExactSeries) -> ExactSeries:
    """Square root with constant term 1, for f(0) = 1."""
    if f.coeffs[0] != 1:
        raise ValueError("series_sqrt needs constant term 1")
    s = [Fraction(1)]
    for n in range(1, f.order + 1):
        acc = sum(s[i] * s[n - i] for i in range(1, n))
        s.append((f.coeffs[n] - acc) / 2)
    return ExactSeries(tuple(s))


def egf_from_integers(values: Sequence[int]) -> ExactSeries:
    return ExactSeries(tuple(Fraction(v, factorial(i)) for i, v in enumerate(values)))


def integers_from_egf(s: ExactSeries) -> list[int]:
    out = []
    for n, c in enumerate(s.coeffs):
        v = c * factorial(n)
        if v.denominator != 1:
            raise ArithmeticError(f"coefficient {n} of EGF is not an integer: {v}")
        out.append(v.numerator)
    return out


def g1_egf_series(N: int) -> ExactSeries:
    """exp(1 - sqrt(1-2x)) / sqrt(1-2x), to order N."""
    if N < 0:
        raise ValueError("order must be >= 0")
    root = series_sqrt(ExactSeries.from_list([1, -2], N))
    return series_exp(1 - root) / root


def egf_g1_closed(N: int) -> list[int]:
    """n! [x^n] of the closed-form EGF for n <= N."""
    return integers_from_egf(g1_egf_series(N))


def ode_residual_g1(G: ExactSeries) -> ExactSeries:
    """G'' - 3G' - 2x G'' - G, truncated to order N - 2."""
    d1 = series_derivative(G)
    d2 = series_derivative(d1)
    N2 = d2.order
    x = ExactSeries.x(N2) if N2 >= 1 else ExactSeries.constant(0, 0)
    return d2 - 3 * d1.truncate(N2) - 2 * x * d2 - G.truncate(N2)


def ode_check_g1(N: int, series: ExactSeries | None = None) -> bool:
    """True iff the residual of the G_1 differential equation vanishes through
    order N-2.  ``series`` defaults to the closed-form expansion."""
    if N < 2:
        raise ValueError("need N >= 2")
    G = g1_egf_series(N) if series is None else series.truncate(N)
    return ode_residual_g1(G).is_zero()


@dataclass(frozen=True)
class BivariateSeries:
    """Series in x whose coefficients are ExactSeries in y.

    ``rows[n]`` is the y-series multiplying x^n; all rows share order_y.
    """

    rows: tuple[ExactSeries, ...]

    @property
    def order_x(self) -> int:
        return len(self.rows) - 1

    @property
    def order_y(self) -> int:
        return self.rows[0].order

    def coeff(self, n: int, k: int) -> Fraction:
        if not 0 <= n <= self.order_x:
            return Fraction(0)
        return self.rows[n][k]


def bivariate_exp(f: BivariateSeries) -> BivariateSeries:
    """exp(f) for f with zero x^0 row, by the same recurrence as series_exp."""
    if not f.rows[0].is_zero():
        raise ValueError("bivariate exp needs a zero x^0 coefficient")
    Ny = f.order_y
    g = [ExactSeries.constant(1, Ny)]
    for n in range(1, f.order_x + 1):
        acc = ExactSeries.constant(0, Ny)
        for i in range(1, n + 1):
            if not f.rows[i].is_zero():
                acc = acc + i * series_mul(f.rows[i], g[n - i])
        g.append(acc / n)
    return BivariateSeries(tuple(g))


def egf_bivariate_e(sigma: int, n_max: int, k_max: int) -> list[list[int]]:
    """k! [x^n y^k] exp(x (y + y^2/2! + ... + y^(sigma+1)/(sigma+1)!)),
    as a (n_max+1) x (k_max+1) integer table."""
    if sigma < 0:
        raise ValueError("sigma must be >= 0")
    inner = ExactSeries.from_list([0] + [Fraction(1, factorial(i)) for i in range(1, sigma + 2)], k_max)
    zero = ExactSeries.constant(0, k_max)
    f = BivariateSeries((zero, inner) + (zero,) * (n_max - 1)) if n_max >= 1 else BivariateSeries((zero,))
    e = bivariate_exp(f)
    table = []
    for n in range(n_max + 1):
        row = []
        for k in range(k_max + 1):
            v = e.coeff(n, k) * factorial(k)
            if v.denominator != 1:
                raise ArithmeticError(f"non-integer coefficient at x^{n} y^{k}: {v}")
            row.append(v.numerator)
        table.append(row)
    return table
