"""Terminating hypergeometric sums over the rationals.

Covers the 2F0 form of G_1, the two 2F1 forms of E_2 (split on the excess
eta = k - n), the contiguity identity behind the E_2 recurrence for k >= 2n+1,
and the exact ratio G_sigma(n) / (((sigma+1)n)! / (n! ((sigma+1)!)^n)) whose
limit is e.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import factorial, g
from .poly import exact_eval


class NonTerminating(ValueError):
    pass


@dataclass(frozen=True)
class HypParams:
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    z: Fraction

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(Fraction(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(Fraction(b) for b in self.lower))
        object.__setattr__(self, "z", Fraction(self.z))

    def termination_index(self) -> int:
        stops = [int(-a) for a in self.upper if a.denominator == 1 and a <= 0]
        if not stops:
            raise NonTerminating(f"no nonpositive integer upper parameter in {self.upper}")
        return min(stops)


def hyp_terminating(upper: Sequence, lower: Sequence, z) -> Fraction:
    """sum_{i=0}^T prod (a)_i / prod (b)_i * z^i / i!, T the termination index."""
    p = HypParams(tuple(upper), tuple(lower), z)
    T = p.termination_index()
    for b in p.lower:
        if b.denominator == 1 and b <= 0 and -b < T:
            raise ZeroDivisionError(f"lower parameter {b} hits a pole before term {T}")
    total = Fraction(0)
    term = Fraction(1)
    for i in range(T + 1):
        total += term
        num = Fraction(1)
        for a in p.upper:
            num *= a + i
        den = Fraction(i + 1)
        for b in p.lower:
            den *= b + i
        if num == 0:
            break
        term = term * num * p.z / den
    return total


def g1_via_2f0(n: int) -> int:
    v = hyp_terminating([n + 1, -n], [], Fraction(-1, 2))
    assert v.denominator == 1
    return v.numerator


def _e2_low(n: int, eta: int) -> Fraction:
    # eta <= n
    pre = Fraction(factorial(n + eta), factorial(eta) * factorial(n - eta) * 2**eta)
    return pre * hyp_terminating([Fraction(-eta, 2), Fraction(-eta, 2) + Fraction(1, 2)],
                                 [n - eta + 1], Fraction(8, 3))


def _e2_high(n: int, eta: int) -> Fraction:
    # eta >= n
    pre = Fraction(factorial(eta + n), factorial(2 * n - eta) * factorial(eta - n) * 2**n * 3 ** (eta - n))
    return pre * hyp_terminating([-n + Fraction(eta, 2), -n + Fraction(eta, 2) + Fraction(1, 2)],
                                 [eta - n + 1], Fraction(8, 3))


def e2_via_2f1(n: int, k: int, branch: str | None = None) -> int:
    """E_2(n, k) from the 2F1 form chosen by comparing eta = k-n with n.

    ``branch`` may force "low" (needs eta <= n) or "high" (eta >= n).
    """
    if n < 0 or not n <= k <= 3 * n:
        raise ValueError(f"(n, k) = ({n}, {k}) outside n <= k <= 3n")
    eta = k - n
    if branch is None:
        branch = "low" if eta <= n else "high"
    if branch == "low":
        if eta > n:
            raise ValueError("low branch needs eta <= n")
        v = _e2_low(n, eta)
    elif branch == "high":
        if eta < n:
            raise ValueError("high branch needs eta >= n")
        v = _e2_high(n, eta)
    else:
        raise ValueError(f"unknown branch {branch!r}")
    assert v.denominator == 1, v
    return v.numerator


def g2_via_2f1(n: int) -> int:
    total = sum(_e2_low(n, eta) for eta in range(0, n))
    total += sum(_e2_high(n, eta) for eta in range(n, 2 * n + 1))
    assert total.denominator == 1
    return total.numerator


# Coefficient polynomials of the two surviving 2F1 terms after contiguity
# reduction, in z with coefficients in n and eta.  phi1 has degree 6, phi2 degree 5.
PHI1 = (
    "7680 + 7680 n^2 + 14080 eta - 15360 eta n - 3840 eta^2 n + 1280 eta^3"
    " - 14080 n - 1280 n^3 + 7680 eta^2 + 3840 n^2 eta",
    "11200 eta^2 n - 20160 eta^2 - 3200 eta^3 - 21120 - 24320 n^2 + 45760 eta n"
    " + 4160 n^3 - 38080 eta + 42560 n - 12160 n^2 eta",
    "-35572 n - 36712 eta n - 4092 n^3 + 13512 eta^2 + 2572 eta^3 + 14952"
    " + 25892 eta + 11164 n^2 eta - 9244 eta^2 n + 22472 n^2",
    "341 n^3 + 948 eta^2 n + 8614 eta - 3359 n + 261 n^2 eta + 984 eta^2"
    " - 6081 eta n - 484 eta^3 + 3270",
    "3441 n^3 - 4023 n^2 eta + 24621 n - 348 eta^3 - 16884 n^2 + 1260 eta^2 n"
    " - 10650 eta - 1800 eta^2 + 13203 eta n - 9054",
    "-45 n + 306 eta - 1080 n^2 + 207 n^3 + 180 eta^3 - 216 eta^2 - 324 eta^2 n"
    " - 1539 eta n + 1647 n^2 eta - 54",
    "486 + 729 eta n - 2349 n + 2916 n^2 - 162 eta - 729 n^3 - 729 n^2 eta",
)

PHI2 = (
    "-320 eta^2 + 640 eta n - 1600 eta - 320 n^2 - 1920 + 1600 n",
    "560 eta^2 - 1360 eta n + 3040 eta - 3440 n + 720 n^2 + 3840",
    "-243 eta^2 + 408 eta n - 555 eta - 303 n^2 - 978 + 1155 n",
    "-15 eta^2 + 600 eta n - 1191 eta - 789 n^2 - 3672 + 3399 n",
    "-9 eta^2 - 9 n^2 - 504 eta n + 495 eta + 9 n + 486",
    "27 eta^2 + 216 eta n - 189 eta + 324 + 189 n^2 - 675 n",
)


def eval_phi(table: Sequence[str], n, eta, z) -> Fraction:
    z = Fraction(z)
    return sum((exact_eval(c, n=n, eta=eta) * z**p for p, c in enumerate(table)), Fraction(0))


# The nine E_2 terms of the recurrence written through the eta >= n 2F1 form,
# as (coefficient, numerator factorial, denominator factorials, power of 2,
# power of 3, upper parameters, lower parameter).  Everything is in n, eta.
NINE_TERMS = (
    ("1", "eta+n", ("eta-n", "2n-eta"), "n", "eta-n",
     ("eta/2-n", "eta/2-n+1/2"), "eta-n+1"),
    ("-(9n^2-9n+2)/2", "eta+n-3", ("eta-n-1", "2n-eta"), "n-1", "eta-n-1",
     ("eta/2-n", "eta/2-n+1/2"), "eta-n"),
    ("5/2", "eta+n-1", ("eta-n+1", "2n-eta-2"), "n-1", "eta-n+1",
     ("eta/2-n+1", "eta/2-n+3/2"), "eta-n+2"),
    ("-(9n^2-36n+35)/2", "eta+n-4", ("eta-n", "2n-eta-2"), "n-2", "eta-n",
     ("eta/2-n+1", "eta/2-n+3/2"), "eta-n+1"),
    ("-6(n-1)", "eta+n-3", ("eta-n+1", "2n-eta-3"), "n-2", "eta-n+1",
     ("eta/2-n+3/2", "eta/2-n+2"), "eta-n+2"),
    ("3/2", "eta+n-2", ("eta-n+2", "2n-eta-4"), "n-2", "eta-n+2",
     ("eta/2-n+2", "eta/2-n+5/2"), "eta-n+3"),
    ("-3(2n-5)", "eta+n-4", ("eta-n+2", "2n-eta-5"), "n-3", "eta-n+2",
     ("eta/2-n+5/2", "eta/2-n+3"), "eta-n+3"),
    ("-5/2", "eta+n-3", ("eta-n+3", "2n-eta-6"), "n-3", "eta-n+3",
     ("eta/2-n+3", "eta/2-n+7/2"), "eta-n+4"),
    ("-5/2", "eta+n-4", ("eta-n+4", "2n-eta-8"), "n-4", "eta-n+4",
     ("eta/2-n+4", "eta/2-n+9/2"), "eta-n+5"),
)


def _int(expr: str, n, eta) -> int:
    v = exact_eval(expr, n=n, eta=eta)
    if v.denominator != 1:
        raise ValueError(f"{expr} is not an integer at n={n}, eta={eta}")
    return v.numerator


def _factorial_ratio(num: int, dens: Sequence[int]) -> Fraction | None:
    """num! / prod dens!, with 1/(negative)! = 0.  None if num < 0 and no
    denominator vanishes (a genuine pole)."""
    if any(d < 0 for d in dens):
        return Fraction(0)
    if num < 0:
        return None
    den = 1
    for d in dens:
        den *= factorial(d)
    return Fraction(factorial(num), den)


def nine_term_sum(n: int, eta: int, z) -> Fraction:
    """The recurrence residual with each E_2 written as prefactor * 2F1(z)."""
    z = Fraction(z)
    total = Fraction(0)
    for coef, num, dens, p2, p3, ups, low in NINE_TERMS:
        ratio = _factorial_ratio(_int(num, n, eta), [_int(d, n, eta) for d in dens])
        if ratio is None:
            raise ValueError(f"pole in term with {num}! at n={n}, eta={eta}")
        if ratio == 0:
            continue
        pre = exact_eval(coef, n=n, eta=eta) * ratio / (Fraction(2) ** _int(p2, n, eta) * Fraction(3) ** _int(p3, n, eta))
        F = hyp_terminating([exact_eval(a, n=n, eta=eta) for a in ups], [exact_eval(low, n=n, eta=eta)], z)
        total += pre * F
    return total


# The phi2 term needs this extra weight for the identity to hold; without it
# (weight "1") the two sides differ for every eta <= 2n-2.
PHI2_WEIGHT = "4(eta-n+1)"


def factored_form(n: int, eta: int, z, phi1: Sequence[str] = PHI1, phi2: Sequence[str] = PHI2,
                  phi2_weight: str = PHI2_WEIGHT) -> Fraction:
    """(eta+n-4)! (3z-8) / (324 (eta-n+1)! (2n-eta-2)! 2^n 3^(eta-n) z^3 (z-1)^3)
    * (phi1 F[eta/2-n+1, eta/2-n+3/2; eta-n+2] + w phi2 F[eta/2-n, eta/2-n+1/2; eta-n+1])

    with w = ``phi2_weight`` evaluated at (n, eta)."""
    z = Fraction(z)
    if z in (0, 1):
        raise ZeroDivisionError("factored form has poles at z = 0 and z = 1")
    ratio = _factorial_ratio(eta + n - 4, [eta - n + 1, 2 * n - eta - 2])
    if ratio is None:
        raise ValueError(f"pole in factored form at n={n}, eta={eta}")
    if ratio == 0:
        return Fraction(0)
    pre = ratio * (3 * z - 8) / (324 * Fraction(2) ** n * Fraction(3) ** (eta - n) * z**3 * (z - 1) ** 3)
    half = Fraction(eta, 2)
    F1 = hyp_terminating([half - n + 1, half - n + Fraction(3, 2)], [eta - n + 2], z)
    F2 = hyp_terminating([half - n, half - n + Fraction(1, 2)], [eta - n + 1], z)
    w = exact_eval(phi2_weight, n=n, eta=eta)
    return pre * (eval_phi(phi1, n, eta, z) * F1 + w * eval_phi(phi2, n, eta, z) * F2)


def phi_identity_check(n: int, eta: int, z, phi1: Sequence[str] = PHI1, phi2: Sequence[str] = PHI2,
                       phi2_weight: str = PHI2_WEIGHT) -> bool:
    """Nine-term combination == factored form at z (and both vanish at z = 8/3).

    Only the case k = n + eta >= 2n + 1 is covered.
    """
    if n + eta < 2 * n + 1:
        raise ValueError("only the case k >= 2n+1 (eta >= n+1) is covered")
    z = Fraction(z)
    lhs = nine_term_sum(n, eta, z)
    rhs = factored_form(n, eta, z, phi1, phi2, phi2_weight)
    if z == Fraction(8, 3) and lhs != 0:
        return False
    return lhs == rhs


def asym_ratio_exact(sigma: int, n: int) -> Fraction:
    """G_sigma(n) n! ((sigma+1)!)^n / ((sigma+1)n)!."""
    if n < 1:
        raise ValueError("n must be >= 1")
    h = sigma + 1
    return Fraction(g(sigma, n) * factorial(n) * factorial(h) ** n, factorial(h * n))


def e_approx(digits: int) -> Fraction:
    """Partial sum of sum 1/j! within 10^-(digits+5) of e."""
    bound = Fraction(1, 10 ** (digits + 5))
    total, term, j = Fraction(0), Fraction(1), 0
    while term > bound:
        total += term
        j += 1
        term /= j
    return total


def to_decimal(x: Fraction, digits: int) -> str:
    """Round x to ``digits`` places after the point (half away from zero)."""
    scale = 10**digits
    q, r = divmod(abs(x) * scale, 1)
    q = int(q) + (1 if r >= Fraction(1, 2) else 0)
    sign = "-" if x < 0 else ""
    whole, frac = divmod(q, scale)
    return f"{sign}{whole}" + (f".{frac:0{digits}d}" if digits > 0 else "")


def asym_ratio(sigma: int, n: int, precision: int = 30) -> str:
    return to_decimal(asym_ratio_exact(sigma, n), precision)
