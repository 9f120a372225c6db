"""The degenerate affine Hecke algebra H_m tensored with Sym, and the map phi to FH_m.

Basis labels are ``(w, d, alpha)`` for ``w y_1^d_1 ... y_m^d_m (x) m_alpha``,
group element on the left.  The defining relations, rewritten for moving a
``y`` rightwards past ``s_i``, are

    y_{i+1} s_i = s_i y_i + 1,    y_i s_i = s_i y_{i+1} - 1,
    y_j s_i = s_i y_j  (j != i, i+1).
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Sequence

from . import symfunc
from .fh import FHElement, elem_M, elem_perm, elem_Y, fh_mul
from .intpoly import ZERO, IntPoly
from .perm import Permutation, compose, simple_word
from .shapes import MarkedCycleShape, enumerate_shapes


class PhiInverseError(ArithmeticError):
    """Triangular elimination stopped making progress."""


Label = tuple  # (Permutation, tuple[int, ...], Partition)


def _check_label(m: int, w: Permutation, d: tuple, alpha: tuple):
    if w.degree > m:
        raise ValueError(f"{w} is not in S_{m}")
    if len(d) != m or any(x < 0 for x in d):
        raise ValueError(f"y-exponents must be {m} nonnegative integers, got {d!r}")
    if not symfunc.is_partition(alpha):
        raise ValueError(f"not a partition: {alpha!r}")


class HSElement:
    """A finite Int[t]-combination of PBW (x) monomial basis labels."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: dict | None = None):
        self.m = m
        out = {}
        for (w, d, alpha), p in (terms or {}).items():
            d, alpha = tuple(d), tuple(alpha)
            _check_label(m, w, d, alpha)
            p = IntPoly.coerce(p)
            if p:
                key = (w, d, alpha)
                out[key] = out.get(key, ZERO) + p
        self.terms = {k: p for k, p in out.items() if p}

    @classmethod
    def basis(cls, m: int, w: Permutation | None = None, d: Sequence[int] | None = None,
              alpha: Sequence[int] = (), coeff=1) -> "HSElement":
        w = w or Permutation()
        d = tuple(d) if d is not None else (0,) * m
        return cls(m, {(w, d, tuple(alpha)): coeff})

    @classmethod
    def identity(cls, m: int) -> "HSElement":
        return cls.basis(m)

    @classmethod
    def s(cls, i: int, m: int) -> "HSElement":
        if not 1 <= i < m:
            raise ValueError(f"s index {i} outside [1, {m - 1}]")
        return cls.basis(m, Permutation.transposition(i, i + 1))

    @classmethod
    def y(cls, j: int, m: int) -> "HSElement":
        if not 1 <= j <= m:
            raise ValueError(f"y index {j} outside [1, {m}]")
        d = [0] * m
        d[j - 1] = 1
        return cls.basis(m, d=d)

    @classmethod
    def e(cls, k: int, m: int) -> "HSElement":
        """1 (x) e_k."""
        return cls.basis(m, alpha=(1,) * k)

    def __eq__(self, other):
        if isinstance(other, int):
            other = other * HSElement.identity(self.m)
        if not isinstance(other, HSElement):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: "HSElement"):
        if self.m != other.m:
            raise ValueError(f"H_{self.m} vs H_{other.m}")

    def __add__(self, other) -> "HSElement":
        if isinstance(other, int):
            other = other * HSElement.identity(self.m)
        self._check(other)
        out = dict(self.terms)
        for k, p in other.terms.items():
            out[k] = out.get(k, ZERO) + p
        return HSElement(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return HSElement(self.m, {k: -p for k, p in self.terms.items()})

    def __sub__(self, other) -> "HSElement":
        return self + (-other)

    def __rsub__(self, other) -> "HSElement":
        return (-self) + other

    def scale(self, c) -> "HSElement":
        c = IntPoly.coerce(c)
        return HSElement(self.m, {k: c * p for k, p in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, IntPoly)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, IntPoly)):
            return self.scale(other)
        return hs_mul(self, other)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (str(kv[0][0]), kv[0][1], kv[0][2]))

    def __repr__(self):
        return f"HSElement(m={self.m}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (w, d, alpha), p in self.sorted_terms():
            factors = [] if w.is_identity() else [str(w)]
            factors += [f"y{j + 1}" + (f"^{a}" if a > 1 else "") for j, a in enumerate(d) if a]
            if alpha:
                factors.append("m" + str(list(alpha)).replace(" ", ""))
            mono = "*".join(factors) or "1"
            c = str(p)
            parts.append(mono if c == "1" else f"[{c}]*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "terms": [
                {"w": str(w), "y": list(d), "alpha": list(alpha), "poly": p.to_json()}
                for (w, d, alpha), p in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "HSElement":
        m = int(obj["m"])
        terms = {}
        for t in obj["terms"]:
            key = (Permutation.parse(t["w"]), tuple(t["y"]), tuple(t["alpha"]))
            terms[key] = IntPoly.from_json(t["poly"])
        return cls(m, terms)


# -- rewriting in H_m ---------------------------------------------------------------
# An H_m element is a dict (w, d) -> int in PBW order.


def _add_into(acc: dict, items: dict, c: int = 1):
    for k, v in items.items():
        acc[k] = acc.get(k, 0) + c * v


@lru_cache(maxsize=None)
def _y_times_s(d: tuple, i: int) -> tuple:
    """y^d s_i in PBW form, as a tuple of ((w, d'), coeff)."""
    s = Permutation.transposition(i, i + 1)
    if not d[i - 1] and not d[i]:
        return (((s, d), 1),)
    # peel the rightmost factor y_j (j = i or i+1): y^d s_i = y^{d - e_j} (y_j s_i)
    j = i if d[i - 1] else i + 1
    rest = list(d)
    rest[j - 1] -= 1
    rest = tuple(rest)
    out: dict = {}
    # y_j s_i = s_i y_{s_i(j)} + delta
    target = s(j) - 1
    for (w, e), c in _y_times_s(rest, i):
        e2 = list(e)
        e2[target] += 1
        _add_into(out, {(w, tuple(e2)): c})
    delta = 1 if j == i + 1 else -1
    _add_into(out, {(Permutation(), rest): delta})
    return tuple((k, v) for k, v in out.items() if v)


def _h_right_mul_s(x: dict, i: int) -> dict:
    out: dict = {}
    for (w, d), c in x.items():
        for (w2, e), v in _y_times_s(d, i):
            key = (compose(w, w2), e)
            out[key] = out.get(key, 0) + c * v
    return {k: v for k, v in out.items() if v}


def _h_right_mul_y(x: dict, j: int) -> dict:
    out = {}
    for (w, d), c in x.items():
        e = list(d)
        e[j - 1] += 1
        out[(w, tuple(e))] = c
    return out


@lru_cache(maxsize=None)
def _h_basis_mul(w1: Permutation, d1: tuple, w2: Permutation, d2: tuple) -> tuple:
    """(w1 y^d1)(w2 y^d2) in PBW form."""
    x = {(w1, d1): 1}
    for i in simple_word(w2):
        x = _h_right_mul_s(x, i)
    out = {}
    for (w, d), c in x.items():
        key = (w, tuple(a + b for a, b in zip(d, d2)))
        out[key] = out.get(key, 0) + c
    return tuple((k, v) for k, v in out.items() if v)


def hs_mul(X: HSElement, Y: HSElement) -> HSElement:
    X._check(Y)
    acc: dict = defaultdict(lambda: ZERO)
    for (w1, d1, a1), p in X.terms.items():
        for (w2, d2, a2), q in Y.terms.items():
            pq = p * q
            sym = symfunc.m_product(a1, a2)
            for (w, d), c in _h_basis_mul(w1, d1, w2, d2):
                for gamma, v in sym.items():
                    acc[(w, d, gamma)] = acc[(w, d, gamma)] + (c * v) * pq
    return HSElement(X.m, acc)


def commutator(X: HSElement, Y: HSElement) -> HSElement:
    return X * Y - Y * X


def _check_generator(g, m: int):
    kind, i = g
    if kind == "s" and not 1 <= i < m:
        raise ValueError(f"s_{i} is not a generator of H_{m}")
    if kind == "y" and not 1 <= i <= m:
        raise ValueError(f"y_{i} is not a generator of H_{m}")
    if kind not in ("s", "y", "e"):
        raise ValueError(f"unknown generator kind {kind!r}")


def normal_form(word: Iterable, m: int) -> HSElement:
    """PBW form of a word in s_i, y_j, e_k and integer scalars.

    Letters are ``("s", i)``, ``("y", j)``, ``("e", k)`` (meaning 1 (x) e_k)
    or plain ints.  The word is reduced left to right by right multiplication.
    """
    h = {(Permutation(), (0,) * m): 1}
    scalar = 1
    sym = {(): 1}
    for g in word:
        if isinstance(g, int):
            scalar *= g
            continue
        _check_generator(g, m)
        kind, i = g
        if kind == "s":
            h = _h_right_mul_s(h, i)
        elif kind == "y":
            h = _h_right_mul_y(h, i)
        else:
            prod_sym: dict = defaultdict(int)
            for a, c in sym.items():
                for b, v in symfunc.m_product(a, (1,) * i).items():
                    prod_sym[b] += c * v
            sym = {k: v for k, v in prod_sym.items() if v}
    terms: dict = {}
    for (w, d), c in h.items():
        for a, v in sym.items():
            terms[(w, d, a)] = scalar * c * v
    return HSElement(m, terms)


def _h_left_mul_s(i: int, x: dict) -> dict:
    s = Permutation.transposition(i, i + 1)
    return {(compose(s, w), d): c for (w, d), c in x.items()}


def _h_left_mul_y(j: int, x: dict, m: int) -> dict:
    # y_j w = (y_j s_a1 ... s_ak) pushed through one letter at a time
    out: dict = {}
    for (w, d), c in x.items():
        e = [0] * m
        e[j - 1] = 1
        for (w2, d2), v in _h_basis_mul(Permutation(), tuple(e), w, d):
            out[(w2, d2)] = out.get((w2, d2), 0) + c * v
    return {k: v for k, v in out.items() if v}


def normal_form_right_to_left(word: Sequence, m: int) -> HSElement:
    """The same PBW form reduced right to left by left multiplication."""
    h = {(Permutation(), (0,) * m): 1}
    scalar = 1
    ks: list[int] = []
    for g in reversed(list(word)):
        if isinstance(g, int):
            scalar *= g
            continue
        _check_generator(g, m)
        kind, i = g
        if kind == "s":
            h = _h_left_mul_s(i, h)
        elif kind == "y":
            h = _h_left_mul_y(i, h, m)
        else:
            ks.append(i)
    # e-factors are central: expand prod e_k directly in enough variables
    nvars = sum(ks)
    sym = symfunc.poly_to_monomial_basis(symfunc.expand_elementary(ks, nvars)) if ks else {(): 1}
    terms = {(w, d, a): scalar * c * v for (w, d), c in h.items() for a, v in sym.items()}
    return HSElement(m, terms)


# -- the isomorphism phi -------------------------------------------------------------

_PHI_CACHE: dict = {}


def phi_basis(w: Permutation, d: Sequence[int], alpha: Sequence[int], m: int) -> FHElement:
    """phi(w y^d (x) m_alpha) = K(w) Y_1^d_1 ... Y_m^d_m M_alpha."""
    key = (m, w, tuple(d), tuple(alpha))
    out = _PHI_CACHE.get(key)
    if out is None:
        out = elem_perm(w, m)
        for j, a in enumerate(d, start=1):
            for _ in range(a):
                out = fh_mul(out, elem_Y(j, m))
        if alpha:
            out = fh_mul(out, elem_M(alpha, m))
        _PHI_CACHE[key] = out
    return out


def phi(X: HSElement) -> FHElement:
    out = FHElement.zero(X.m)
    for (w, d, alpha), p in X.sorted_terms():
        out = out + phi_basis(w, d, alpha, X.m).scale(p)
    return out


def order_key(shape: MarkedCycleShape) -> tuple[int, int, int]:
    """(deg_m, reduced degree of the star part, number of star cycles)."""
    return (shape.degree, shape.star_reduced_degree, shape.star_count)


def leading_label(shape: MarkedCycleShape) -> Label:
    """The basis label whose phi-image leads with K(shape)."""
    return (shape.pi, shape.d, shape.star_partition())


def phi_inverse(X: FHElement) -> HSElement:
    """Triangular elimination: repeatedly strip every term of maximal order key."""
    m = X.m
    out: dict = {}
    rest = X
    last = None
    while rest:
        top = max(order_key(s) for s in rest.terms)
        if last is not None and top >= last:
            raise PhiInverseError(f"order key did not decrease: {top} after {last}")
        last = top
        stripped = FHElement.zero(m)
        for shape, p in rest.sorted_terms():
            if order_key(shape) != top:
                continue
            w, d, alpha = leading_label(shape)
            out[(w, d, alpha)] = out.get((w, d, alpha), ZERO) + p
            stripped = stripped + phi_basis(w, d, alpha, m).scale(p)
        rest = rest - stripped
    return HSElement(m, out)


def center_gen(k: int, m: int) -> FHElement:
    """e_k(Y_1, ..., Y_m) in FH_m."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    Ys = [elem_Y(j, m) for j in range(1, m + 1)]
    return symfunc.evaluate_at(symfunc.EPolynomial.e(k), Ys, FHElement.identity(m), FHElement.zero(m))


def basis_labels(m: int, degree_bound: int) -> list[Label]:
    """All labels (w, d, alpha) whose leading shape has deg_m <= degree_bound."""
    return [leading_label(s) for s in enumerate_shapes(m, degree_bound)]
