"""The integral group algebra ZS_n and the centraliser algebras Z_{n,m}.

Elements are sparse maps from 0-based one-line tuples to Python ints.
Products use ``(g*h)(x) = g(h(x))``.
"""
from __future__ import annotations

import os
from collections import Counter, defaultdict
from typing import Iterable

from . import symfunc
from .perm import Permutation
from .shapes import (
    MarkedCycleShape,
    ShapeError,
    class_images,
    class_size,
    representative_images,
    shape_from_key,
    shape_key,
)

DEFAULT_TERM_CAP = 10**7


class AmbientMismatch(ValueError):
    pass


class NotInCentraliser(ValueError):
    """The element is not constant on some Stab_n(m)-class."""


class TermCapExceeded(RuntimeError):
    """A class sum would exceed the configured term cap."""


def term_cap() -> int:
    return int(os.environ.get("FHM_TERM_CAP", DEFAULT_TERM_CAP))


def _mul_images(p: tuple, q: tuple) -> tuple:
    return tuple([p[x] for x in q])


def _inverse_images(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


class GroupAlgebraElement:
    """A finite integer combination of permutations in S_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms = {p: c for p, c in (terms or {}).items() if c}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "GroupAlgebraElement":
        return cls(n)

    @classmethod
    def identity(cls, n: int) -> "GroupAlgebraElement":
        return cls(n, {tuple(range(n)): 1})

    @classmethod
    def from_perm(cls, p: Permutation, n: int, coeff: int = 1) -> "GroupAlgebraElement":
        return cls(n, {p.zero_based(n): coeff})

    @classmethod
    def from_perms(cls, items: Iterable[tuple[Permutation, int]], n: int) -> "GroupAlgebraElement":
        out: dict = defaultdict(int)
        for p, c in items:
            out[p.zero_based(n)] += c
        return cls(n, out)

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def _check(self, other: "GroupAlgebraElement"):
        if self.n != other.n:
            raise AmbientMismatch(f"S_{self.n} vs S_{other.n}")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return GroupAlgebraElement(self.n, out)

    def __neg__(self):
        return GroupAlgebraElement(self.n, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-other)

    def __rmul__(self, c: int) -> "GroupAlgebraElement":
        if not isinstance(c, int):
            return NotImplemented
        return GroupAlgebraElement(self.n, {p: c * v for p, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return ga_mul(self, other)

    def __repr__(self):
        return f"GroupAlgebraElement(n={self.n}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for p, c in sorted(self.terms.items()):
            s = str(Permutation.from_zero_based(p))
            parts.append(s if c == 1 else f"{c}*{s}")
        return " + ".join(parts)

    def items(self) -> list[tuple[Permutation, int]]:
        return [(Permutation.from_zero_based(p), c) for p, c in sorted(self.terms.items())]

    def coefficient(self, p: Permutation) -> int:
        return self.terms.get(p.zero_based(self.n), 0)

    def conjugate_by(self, t: Permutation) -> "GroupAlgebraElement":
        """``t A t^-1`` term by term."""
        ti = t.zero_based(self.n)
        out = {}
        for p, c in self.terms.items():
            q = [0] * self.n
            for x in range(self.n):
                q[ti[x]] = ti[p[x]]
            out[tuple(q)] = c
        return GroupAlgebraElement(self.n, out)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"perm": str(p), "coeff": str(c)} for p, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GroupAlgebraElement":
        n = int(obj["n"])
        return cls.from_perms(((Permutation.parse(t["perm"]), int(t["coeff"])) for t in obj["terms"]), n)


def ga_mul(A: GroupAlgebraElement, B: GroupAlgebraElement) -> GroupAlgebraElement:
    A._check(B)
    out: dict = defaultdict(int)
    for p, a in A.terms.items():
        for q, b in B.terms.items():
            out[tuple([p[x] for x in q])] += a * b
    return GroupAlgebraElement(A.n, out)


def commutator(A: GroupAlgebraElement, B: GroupAlgebraElement) -> GroupAlgebraElement:
    return A * B - B * A


# -- class sums ---------------------------------------------------------------


def class_sum(shape: MarkedCycleShape, n: int) -> GroupAlgebraElement:
    """K_n(shape): the sum over the Stab_n(m)-class of the shape."""
    if n < shape.m:
        raise ShapeError(f"n={n} < m={shape.m}")
    size = class_size(shape, n)
    if size > term_cap():
        raise TermCapExceeded(f"K_{n}({shape}) has {size} terms (cap {term_cap()})")
    return GroupAlgebraElement(n, {img: 1 for img in class_images(shape, n)})


def decompose(A: GroupAlgebraElement, m: int) -> dict[MarkedCycleShape, int]:
    """Coefficients of A in the class-sum basis of Z_{n,m}."""
    if A.n < m:
        raise ShapeError(f"n={A.n} < m={m}")
    coeff: dict = {}
    seen: Counter = Counter()
    for p, c in A.terms.items():
        key = shape_key(p, m)
        if coeff.setdefault(key, c) != c:
            raise NotInCentraliser(f"coefficients differ on the class of {shape_from_key(m, key)}")
        seen[key] += 1
    out = {}
    for key, c in coeff.items():
        shape = shape_from_key(m, key)
        if seen[key] != class_size(shape, A.n):
            raise NotInCentraliser(f"class of {shape} is only partially present")
        out[shape] = c
    return out


def from_class_sums(coeffs: dict[MarkedCycleShape, int], n: int) -> GroupAlgebraElement:
    out = GroupAlgebraElement.zero(n)
    for shape, c in coeffs.items():
        if c and n >= shape.degree:
            out = out + c * class_sum(shape, n)
    return out


def centralises(A: GroupAlgebraElement, m: int) -> bool:
    """Whether A commutes with Stab_n(m), tested on its generators (i, i+1), m < i < n."""
    for i in range(m + 1, A.n):
        if A.conjugate_by(Permutation.transposition(i, i + 1)) != A:
            return False
    return True


# -- Jucys-Murphy elements ------------------------------------------------------------


def jm(i: int, n: int) -> GroupAlgebraElement:
    """L_i = sum of the transpositions (j, i) with 1 <= j < i."""
    if not 1 <= i <= n:
        raise ValueError(f"JM index {i} outside [1, {n}]")
    return GroupAlgebraElement.from_perms(((Permutation.transposition(j, i), 1) for j in range(1, i)), n)


def eval_sym_at_jm(expr, n: int) -> GroupAlgebraElement:
    """Evaluate an EPolynomial or monomial m_alpha (partition tuple) at L_1..L_n."""
    values = [jm(i, n) for i in range(1, n + 1)]
    return symfunc.evaluate_at(expr, values, GroupAlgebraElement.identity(n), GroupAlgebraElement.zero(n))


# -- structure constants ---------------------------------------------------------------


def _check_shared(*shapes: MarkedCycleShape) -> int:
    ms = {s.m for s in shapes}
    if len(ms) != 1:
        raise ShapeError(f"shapes must share m, got {sorted(ms)}")
    return ms.pop()


def pair_count(lam: MarkedCycleShape, mu: MarkedCycleShape, nu: MarkedCycleShape, n: int) -> int:
    """#{(g, h) in CL(lam) x CL(mu) : g h = omega} for the canonical omega in CL(nu)."""
    m = _check_shared(lam, mu, nu)
    if n < m:
        raise ShapeError(f"n={n} < m={m}")
    if nu.degree > n:
        raise ShapeError(f"class of {nu} is empty in S_{n}")
    omega = representative_images(nu, n)
    target = mu.key
    count = 0
    for g in class_images(lam, n):
        h = _mul_images(_inverse_images(g), omega)
        if shape_key(h, m) == target:
            count += 1
    return count


def structure_constants(lam: MarkedCycleShape, mu: MarkedCycleShape, n: int) -> dict[MarkedCycleShape, int]:
    """All a^nu(n) with K_n(lam) K_n(mu) = sum_nu a^nu(n) K_n(nu).

    One factor is pinned to a class representative and the other runs over
    its class; Stab_n(m)-equivariance turns the resulting tally into the
    coefficients: a^nu = |CL(fixed)| * tally(nu) / |CL(nu)|.
    """
    m = _check_shared(lam, mu)
    if n < m:
        raise ShapeError(f"n={n} < m={m}")
    if n < lam.degree or n < mu.degree:
        return {}
    tally: Counter = Counter()
    if class_size(lam, n) <= class_size(mu, n):
        h0 = representative_images(mu, n)
        fixed = mu
        for g in class_images(lam, n):
            tally[shape_key(_mul_images(g, h0), m)] += 1
    else:
        g0 = representative_images(lam, n)
        fixed = lam
        for h in class_images(mu, n):
            tally[shape_key(_mul_images(g0, h), m)] += 1
    scale = class_size(fixed, n)
    out = {}
    for key, t in tally.items():
        nu = shape_from_key(m, key)
        value, rem = divmod(scale * t, class_size(nu, n))
        if rem:
            raise ArithmeticError(f"non-integral structure constant for {lam} * {mu} -> {nu} at n={n}")
        out[nu] = value
    return out


# -- the sigma_{n,m} twist ---------------------------------------------------------------


def twist_permutation(n: int, m: int) -> Permutation:
    """sigma_{n,m}: sends i -> n+i for i in [m] and {m+1, ..., n+m} onto [n].

    For m <= n this is the involution prod_i (i, n+i); for m > n no such
    involution exists and the rotation x -> x+n (mod n+m, on [n+m]) is used.
    """
    if m <= n:
        return Permutation({**{i: n + i for i in range(1, m + 1)}, **{n + i: i for i in range(1, m + 1)}})
    return Permutation({x: (x - 1 + n) % (n + m) + 1 for x in range(1, n + m + 1)})


def twist(A: GroupAlgebraElement, n: int, m: int) -> GroupAlgebraElement:
    """Conjugation by sigma_{n,m}, mapping Z_{n+m,m} onto the S'_m-centraliser."""
    if A.n < n + m:
        raise AmbientMismatch(f"twist needs ambient S_{n + m}, got S_{A.n}")
    return A.conjugate_by(twist_permutation(n, m))


def untwist(A: GroupAlgebraElement, n: int, m: int) -> GroupAlgebraElement:
    if A.n < n + m:
        raise AmbientMismatch(f"twist needs ambient S_{n + m}, got S_{A.n}")
    return A.conjugate_by(twist_permutation(n, m).inverse())
