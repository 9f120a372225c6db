"""The algebra FH_m over Int[t], with products from interpolated structure polynomials."""
from __future__ import annotations

from collections import defaultdict
from math import comb, prod
from typing import Iterable

from . import symfunc
from .grpalg import GroupAlgebraElement, class_sum, structure_constants
from .intpoly import ZERO, IntPoly, interpolate
from .perm import Permutation
from .shapes import (
    MarkedCycleShape,
    ShapeError,
    class_size,
    lift_shape,
    parse_shape,
    product,
    shape_of,
)


class StructurePolynomialError(ArithmeticError):
    """An interpolated structure polynomial failed its validation check."""


class FHElement:
    """A finite Int[t]-combination of basis elements K(shape) of FH_m."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: dict | None = None):
        self.m = m
        out = {}
        for shape, p in (terms or {}).items():
            if shape.m != m:
                raise ShapeError(f"shape {shape} has m={shape.m}, expected {m}")
            p = IntPoly.coerce(p)
            if p:
                out[shape] = p
        self.terms = out

    @classmethod
    def K(cls, shape: MarkedCycleShape | str, m: int | None = None, coeff=1) -> "FHElement":
        if isinstance(shape, str):
            shape = parse_shape(shape, m)
        return cls(shape.m, {shape: coeff})

    @classmethod
    def identity(cls, m: int) -> "FHElement":
        return cls.K(MarkedCycleShape.empty(m))

    @classmethod
    def zero(cls, m: int) -> "FHElement":
        return cls(m)

    def __eq__(self, other):
        if not isinstance(other, FHElement):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: "FHElement"):
        if self.m != other.m:
            raise ShapeError(f"FH_{self.m} vs FH_{other.m}")

    def __add__(self, other: "FHElement") -> "FHElement":
        self._check(other)
        out = dict(self.terms)
        for s, p in other.terms.items():
            out[s] = out.get(s, ZERO) + p
        return FHElement(self.m, out)

    def __neg__(self):
        return FHElement(self.m, {s: -p for s, p in self.terms.items()})

    def __sub__(self, other: "FHElement") -> "FHElement":
        return self + (-other)

    def scale(self, c) -> "FHElement":
        c = IntPoly.coerce(c)
        return FHElement(self.m, {s: c * p for s, p in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, IntPoly)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, IntPoly)):
            return self.scale(other)
        return fh_mul(self, other)

    def __pow__(self, k: int) -> "FHElement":
        out = FHElement.identity(self.m)
        for _ in range(k):
            out = out * self
        return out

    @property
    def degree(self) -> int:
        """Largest deg_m over the support; -1 for zero."""
        return max((s.degree for s in self.terms), default=-1)

    def coefficient(self, shape: MarkedCycleShape | str) -> IntPoly:
        if isinstance(shape, str):
            shape = parse_shape(shape, self.m)
        return self.terms.get(shape, ZERO)

    def sorted_terms(self) -> list[tuple[MarkedCycleShape, IntPoly]]:
        return sorted(self.terms.items(), key=lambda kv: str(kv[0]))

    def __repr__(self):
        return f"FHElement(m={self.m}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for s, p in self.sorted_terms():
            c = str(p)
            parts.append(f"K{s}" if c == "1" else f"[{c}]*K{s}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "terms": [{"shape": str(s), "poly": p.to_json()} for s, p in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FHElement":
        m = int(obj["m"])
        return cls(m, {parse_shape(t["shape"], m): IntPoly.from_json(t["poly"]) for t in obj["terms"]})


# -- structure polynomials --------------------------------------------------------------

_TABLE: dict = {}


def _sample_constants(lam: MarkedCycleShape, mu: MarkedCycleShape, n: int) -> dict:
    if n < lam.degree or n < mu.degree:
        return {}
    return structure_constants(lam, mu, n)


def product_table(lam: MarkedCycleShape, mu: MarkedCycleShape) -> dict[MarkedCycleShape, IntPoly]:
    """Every nonzero structure polynomial f_{lam,mu}^nu, keyed by nu.

    For each nu, a_{lam,mu}^nu(n) agrees with a polynomial of degree at most
    D = ||lam||^m + ||mu||^m - ||nu||^m for all n >= deg_m(nu), so the D+1
    samples n = deg_m(nu), ..., deg_m(lam mu) determine it.  One extra point
    is held out and checked, and the summed identity
    sum_nu f(n) |CL_n(nu)| = |CL_n(lam)| |CL_n(mu)| is checked for every
    n from m up to the held-out point.
    """
    if lam.m != mu.m:
        raise ShapeError(f"cannot multiply shapes with m={lam.m} and m={mu.m}")
    key = (lam.m, lam.key, mu.key)
    cached = _TABLE.get(key)
    if cached is not None:
        return cached
    m = lam.m
    top = m + lam.norm_upper + mu.norm_upper
    held_out = top + 1
    samples = {n: _sample_constants(lam, mu, n) for n in range(m, held_out + 1)}
    candidates = {nu for table in samples.values() for nu in table}
    out = {}
    for nu in candidates:
        if nu.degree > top:
            raise StructurePolynomialError(f"{nu} exceeds the degree bound of {lam} * {mu}")
        values = [samples[n].get(nu, 0) for n in range(nu.degree, top + 1)]
        f = interpolate(nu.degree, values)
        if f(held_out) != samples[held_out].get(nu, 0):
            raise StructurePolynomialError(f"held-out check failed for {lam} * {mu} -> {nu}")
        if f:
            out[nu] = f
    for n in range(m, held_out + 1):
        lhs = class_size(lam, n) * class_size(mu, n)
        rhs = sum(f(n) * class_size(nu, n) for nu, f in out.items())
        if lhs != rhs:
            raise StructurePolynomialError(f"summed identity fails for {lam} * {mu} at n={n}")
    _TABLE[key] = out
    return out


def structure_polynomial(lam: MarkedCycleShape, mu: MarkedCycleShape, nu: MarkedCycleShape) -> IntPoly:
    """f_{lam,mu}^nu: the coefficient of K(nu) in K(lam) K(mu)."""
    if not lam.m == mu.m == nu.m:
        raise ShapeError("shapes must share m")
    return product_table(lam, mu).get(nu, ZERO)


def clear_cache():
    _TABLE.clear()
    _M_CACHE.clear()


def fh_mul(X: FHElement, Y: FHElement) -> FHElement:
    X._check(Y)
    acc: dict = defaultdict(lambda: ZERO)
    for lam, p in X.terms.items():
        for mu, q in Y.terms.items():
            pq = p * q
            for nu, f in product_table(lam, mu).items():
                acc[nu] = acc[nu] + pq * f
    return FHElement(X.m, acc)


def commutator(X: FHElement, Y: FHElement) -> FHElement:
    return X * Y - Y * X


def project(X: FHElement, n: int) -> GroupAlgebraElement:
    """pr_{n,m}: K(shape) -> K_n(shape), coefficients evaluated at t = n."""
    if n < X.m:
        raise ShapeError(f"n={n} < m={X.m}")
    out = GroupAlgebraElement.zero(n)
    for shape, p in X.sorted_terms():
        c = p(n)
        if c and shape.degree <= n:
            out = out + c * class_sum(shape, n)
    return out


def leading_term(lam: MarkedCycleShape, mu: MarkedCycleShape) -> tuple[MarkedCycleShape, int]:
    """(lam mu, c) where c = prod over star lengths of C(l + k, l)."""
    top = product(lam, mu)
    a, b = dict(lam.star_cycles), dict(mu.star_cycles)
    c = prod(comb(a.get(length, 0) + b.get(length, 0), a.get(length, 0)) for length in a.keys() | b.keys())
    return top, c


# -- distinguished elements --------------------------------------------------------------


def _lift(X: FHElement, m: int) -> FHElement:
    # K_n(lam) in S_n corresponds to K_{n+m}(lam_m) in S_{n+m}, so
    # coefficients move from t to t - m.
    if X.m != 0:
        raise ShapeError("only FH_0 elements can be lifted")
    return FHElement(m, {lift_shape(s, m): p.shifted(m) for s, p in X.terms.items()})


def shape_from_partition(alpha: Iterable[int]) -> MarkedCycleShape:
    """The 0-marked shape with one star cycle of length a+1 per part a."""
    lengths = [a + 1 for a in symfunc.as_partition(alpha)]
    counts: dict = defaultdict(int)
    for length in lengths:
        counts[length] += 1
    return MarkedCycleShape(0, star_cycles=counts)


def elem_E(k: int, m: int = 0) -> FHElement:
    """E_k: the sum of K(lam) over 0-marked shapes of reduced degree k, lifted to FH_m."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    E0 = FHElement(0, {shape_from_partition(alpha): 1 for alpha in symfunc.partitions_of(k)})
    return _lift(E0, m) if m else E0


_M_CACHE: dict = {}


def elem_M(alpha: Iterable[int], m: int = 0) -> FHElement:
    """M_alpha: m_alpha written in the e-basis with E_k substituted for e_k.

    The product is formed in FH_0 and carried to FH_m by the lift.
    """
    alpha = symfunc.as_partition(alpha)
    M0 = _M_CACHE.get(alpha)
    if M0 is None:
        expr = symfunc.monomial_to_e(alpha)
        M0 = FHElement.zero(0)
        for factors, c in sorted(expr.terms.items()):
            term = FHElement.identity(0)
            for k in factors:
                term = term * elem_E(k, 0)
            M0 = M0 + c * term
        _M_CACHE[alpha] = M0
    return _lift(M0, m) if m else M0


def mark_shape(m: int, pi: Permutation | None = None, d: Iterable[int] | None = None) -> MarkedCycleShape:
    return MarkedCycleShape(m, pi, tuple(d) if d is not None else None)


def elem_Y(i: int, m: int) -> FHElement:
    """Y_i = K(u_i) + sum over j < i of K((j,i))."""
    if not 1 <= i <= m:
        raise ValueError(f"Y index {i} outside [1, {m}]")
    u = [0] * m
    u[i - 1] = 1
    out = FHElement.K(mark_shape(m, d=u))
    for j in range(1, i):
        out = out + FHElement.K(mark_shape(m, Permutation.transposition(j, i)))
    return out


def elem_s(i: int, m: int) -> FHElement:
    """K(s_i) for the simple transposition (i, i+1)."""
    if not 1 <= i < m:
        raise ValueError(f"s index {i} outside [1, {m - 1}]")
    return FHElement.K(mark_shape(m, Permutation.transposition(i, i + 1)))


def elem_perm(pi: Permutation, m: int) -> FHElement:
    return FHElement.K(mark_shape(m, pi))


def embed(x, m: int) -> FHElement:
    """ZS_m -> FH_m (pi -> K(pi)) or FH_0 -> FH_m.

    The second map adjoins the trivial mark cycles and substitutes t - m for
    t in every coefficient; it is a ring homomorphism.
    """
    if isinstance(x, GroupAlgebraElement):
        if x.n != m:
            raise ShapeError(f"expected an element of ZS_{m}, got ZS_{x.n}")
        return FHElement(m, {shape_of(p, m): c for p, c in x.items()})
    if isinstance(x, FHElement):
        return _lift(x, m)
    raise TypeError(f"cannot embed {type(x).__name__}")
