"""Polynomials in n with rational coefficients, and an exact expression reader.

``PolyCoeff.parse("(9*n**2 - 9*n + 2)/2")`` reads an arithmetic expression in
one variable with every integer literal promoted to ``Fraction`` so that
``49/6`` stays exact.  :func:`exact_eval` does the same with numeric
bindings for several variables.
"""
from __future__ import annotations

import ast
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm


@dataclass(frozen=True)
class PolyCoeff:
    """c_0 + c_1 n + ... + c_d n^d; trailing zero coefficients are stripped."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def const(cls, c) -> "PolyCoeff":
        return cls((c,))

    @classmethod
    def n(cls) -> "PolyCoeff":
        return cls((0, 1))

    @classmethod
    def parse(cls, text: str) -> "PolyCoeff":
        return _coerce(_eval_expr(text, {"n": cls.n()}))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, n) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def __add__(self, other):
        other = _coerce(other)
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (m - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (m - len(other.coeffs))
        return PolyCoeff(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return PolyCoeff(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return PolyCoeff()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyCoeff(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PolyCoeff):
            if other.degree != 0:
                raise TypeError("can only divide a PolyCoeff by a constant")
            other = other.coeffs[0]
        other = Fraction(other)
        return PolyCoeff(tuple(c / other for c in self.coeffs))

    def __pow__(self, e: int):
        if isinstance(e, PolyCoeff):
            e = e.coeffs[0] if e.coeffs else 0
        if Fraction(e).denominator != 1 or e < 0:
            raise ValueError("nonnegative integer powers only")
        return reduce(lambda a, b: a * b, [self] * int(e), PolyCoeff.const(1))

    def shift(self, s: int) -> "PolyCoeff":
        """p(n + s)."""
        out = PolyCoeff()
        for c in reversed(self.coeffs):
            out = out * PolyCoeff((s, 1)) + c
        return out

    def to_integer_form(self) -> tuple[list[int], int]:
        """(numerators, common denominator) with p = sum num_i n^i / den."""
        den = reduce(lcm, (c.denominator for c in self.coeffs), 1)
        return [int(c * den) for c in self.coeffs], den

    @classmethod
    def from_integer_form(cls, nums, den: int) -> "PolyCoeff":
        return cls(tuple(Fraction(x, den) for x in nums))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        nums, den = self.to_integer_form()
        terms = []
        for i in range(len(nums) - 1, -1, -1):
            c = nums[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("n" if i == 1 else f"n^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+") + body)
        s = " ".join(terms).lstrip("+")
        s = s.replace(" +", " + ").replace(" -", " - ")
        if s.startswith("-"):
            s = "-" + s[1:]
        if den != 1:
            s = f"({s})/{den}" if len(terms) > 1 else f"{s}/{den}"
        return s


def _coerce(x) -> PolyCoeff:
    if isinstance(x, PolyCoeff):
        return x
    return PolyCoeff.const(x)


class _PromoteInts(ast.NodeTransformer):
    def visit_Constant(self, node):
        if isinstance(node.value, int) and not isinstance(node.value, bool):
            return ast.Call(ast.Name("Fraction", ast.Load()), [node], [])
        return node


_ALLOWED = (ast.Expression, ast.BinOp, ast.UnaryOp, ast.Constant, ast.Name, ast.Load, ast.Call,
            ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow, ast.USub, ast.UAdd)


def _eval_expr(text: str, names: dict):
    text = text.replace("^", "**")
    # implicit products: "10 n", "3(2n-5)", ")("
    text = re.sub(r"(\d)\s*([A-Za-z_(])", r"\1*\2", text)
    text = re.sub(r"\)\s*([A-Za-z_(\d])", r")*\1", text)
    text = re.sub(r"([A-Za-z_]\w*)\s+(?=[A-Za-z_(\d])", r"\1*", text)
    text = re.sub(r"([A-Za-z_]\w*)\(", r"\1*(", text)
    tree = ast.parse(text, mode="eval")
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED):
            raise ValueError(f"unsupported syntax in {text!r}: {type(node).__name__}")
        if isinstance(node, ast.Name) and node.id not in names:
            raise ValueError(f"unknown name {node.id!r} in {text!r}")
    tree = ast.fix_missing_locations(_PromoteInts().visit(tree))
    return eval(compile(tree, "<expr>", "eval"), {"__builtins__": {}, "Fraction": Fraction}, dict(names))


def exact_eval(text: str, **values) -> Fraction:
    """Evaluate an arithmetic expression exactly with the given variable values."""
    return Fraction(_eval_expr(text, {k: Fraction(v) for k, v in values.items()}))


def content_gcd(values) -> int:
    return reduce(gcd, (abs(int(v)) for v in values), 0)
