"""The ring Int[t] of integer-valued polynomials.

Elements are stored in the binomial basis ``sum c_k * C(t, k)``; integer
coefficients in that basis are exactly the integer-valued polynomials.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence


class IntegralityError(ArithmeticError):
    """A computation that must stay in Int[t] produced a non-integer."""


def binom(n: int, k: int) -> int:
    """C(n, k) for any integer n and k >= 0 (generalised for negative n)."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    return (-1) ** k * comb(k - n - 1, k)


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _forward_differences(values: Sequence[int]) -> list[int]:
    row = list(values)
    out = []
    while row:
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return out


class IntPoly:
    """An element of Int[t] in the binomial basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _strip(coeffs)
        if not all(isinstance(x, int) for x in c):
            raise TypeError("binomial-basis coefficients must be integers")
        self.coeffs = c

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def t(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def binomial(cls, k: int, shift: int = 0) -> "IntPoly":
        """C(t - shift, k)."""
        return interpolate(shift, [binom(j, k) for j in range(k + 1)])

    @classmethod
    def coerce(cls, x) -> "IntPoly":
        if isinstance(x, IntPoly):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to IntPoly")

    # -- queries -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for zero."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coeffs[0] if self.coeffs else 0

    def __call__(self, n: int) -> int:
        return evaluate(self, n)

    def monomial_coefficients(self) -> list[Fraction]:
        """Coefficients in the power basis 1, t, t^2, ..."""
        out = [Fraction(0)] * max(len(self.coeffs), 1)
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            # C(t,k) = t(t-1)...(t-k+1)/k!
            ff = [Fraction(1)]
            for j in range(k):
                ff = [Fraction(0)] + ff
                for i in range(len(ff) - 1):
                    ff[i] -= j * ff[i + 1]
            for i, a in enumerate(ff):
                out[i] += c * a / factorial(k)
        return out

    # -- arithmetic --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other):
        return arith("add", self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return arith("sub", self, other)

    def __rsub__(self, other):
        return arith("sub", other, self)

    def __mul__(self, other):
        return arith("mul", self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def shifted(self, k: int) -> "IntPoly":
        """The polynomial t -> self(t - k)."""
        if not self.coeffs:
            return self
        return interpolate(k, [evaluate(self, j) for j in range(len(self.coeffs))])

    # -- text --------------------------------------------------------------

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        return self.pretty()

    def pretty(self, var: str = "t") -> str:
        """Binomial-basis text, e.g. ``3 + 2*C(t,2)``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            term = var if k == 1 else f"C({var},{k})"
            parts.append(term if c == 1 else f"-{term}" if c == -1 else f"{c}*{term}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def shifted_binomial_form(self, shift: int, var: str = "t") -> str:
        """Render as ``sum a_k C(var - shift, k)``; ``a_k`` are integers."""
        coeffs = _forward_differences([evaluate(self, shift + j) for j in range(len(self.coeffs))])
        if not any(coeffs):
            return "0"
        base = var if shift == 0 else f"{var}{'-' if shift > 0 else '+'}{abs(shift)}"
        parts = []
        for k, a in enumerate(coeffs):
            if not a:
                continue
            term = str(a) if k == 0 else (f"C({base},{k})" if a == 1 else f"{a}*C({base},{k})")
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"binomial": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> "IntPoly":
        return cls(int(c) for c in obj["binomial"])


def interpolate(base: int, values: Sequence[int]) -> IntPoly:
    """The polynomial of degree < len(values) with p(base + i) = values[i].

    Newton forward differences give p(t) = sum_k D_k C(t - base, k); the
    shift to the C(t, k) basis uses Vandermonde's identity
    C(t - b, k) = sum_j C(t, j) C(-b, k - j).
    """
    if not values:
        raise ValueError("need at least one sample")
    diffs = _forward_differences([int(v) for v in values])
    out = [0] * len(diffs)
    for k, d in enumerate(diffs):
        if not d:
            continue
        for j in range(k + 1):
            out[j] += d * binom(-base, k - j)
    return IntPoly(out)


def evaluate(p: IntPoly, n: int) -> int:
    total = 0
    b = 1  # C(n, k), updated incrementally
    for k, c in enumerate(p.coeffs):
        if k:
            b = b * (n - k + 1) // k
        total += c * b
    return total


def arith(op: str, p, q) -> IntPoly:
    p, q = IntPoly.coerce(p), IntPoly.coerce(q)
    if op in ("add", "sub"):
        sign = 1 if op == "add" else -1
        size = max(len(p.coeffs), len(q.coeffs))
        a = p.coeffs + (0,) * (size - len(p.coeffs))
        b = q.coeffs + (0,) * (size - len(q.coeffs))
        return IntPoly(x + sign * y for x, y in zip(a, b))
    if op != "mul":
        raise ValueError(f"unknown op {op!r}")
    if p.is_zero() or q.is_zero():
        return IntPoly()
    if p.is_constant():
        return IntPoly(p.coeffs[0] * c for c in q.coeffs)
    if q.is_constant():
        return IntPoly(q.coeffs[0] * c for c in p.coeffs)
    # Product of rational power-basis coefficients, then back to the
    # binomial basis by sampling at 0..deg; integrality is asserted.
    a, b = p.monomial_coefficients(), q.monomial_coefficients()
    prod = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    samples = []
    for n in range(len(prod)):
        v = sum(c * n**k for k, c in enumerate(prod))
        if v.denominator != 1:
            raise IntegralityError(f"non-integral value {v} at t={n}")
        samples.append(int(v))
    out = interpolate(0, samples)
    # cross-check against the direct evaluation product
    for n in (len(prod), -1):
        if evaluate(out, n) != evaluate(p, n) * evaluate(q, n):
            raise IntegralityError("binomial re-expansion disagrees with product")
    return out


ZERO = IntPoly()
ONE = IntPoly.constant(1)
