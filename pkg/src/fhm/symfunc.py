"""Symmetric polynomials in finitely many variables: e- and m-bases.

Partitions are plain tuples of positive integers in weakly decreasing order.
Polynomials in explicit variables are dicts ``exponent-vector -> int``.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

Partition = tuple  # weakly decreasing tuple of positive ints


def is_partition(parts) -> bool:
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


def as_partition(parts: Iterable[int]) -> Partition:
    out = tuple(sorted((int(p) for p in parts), reverse=True))
    if not is_partition(out):
        raise ValueError(f"not a partition: {parts!r}")
    return out


@lru_cache(maxsize=None)
def _partitions(k: int, largest: int) -> tuple[Partition, ...]:
    if k == 0:
        return ((),)
    out = []
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(k: int, proper: bool = False) -> list[Partition]:
    """All partitions of ``k`` in reverse-lexicographic order.

    With ``proper`` only partitions without parts equal to 1 are kept.
    """
    if k < 0:
        return []
    parts = _partitions(k, k)
    if proper:
        parts = tuple(p for p in parts if not p or p[-1] >= 2)
    return list(parts)


@lru_cache(maxsize=None)
def partition_count(k: int) -> int:
    """Number of partitions of ``k`` via Euler's pentagonal recurrence."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    total, j = 0, 1
    while True:
        g1 = j * (3 * j - 1) // 2
        if g1 > k:
            break
        sign = 1 if j % 2 else -1
        total += sign * partition_count(k - g1)
        g2 = j * (3 * j + 1) // 2
        if g2 <= k:
            total += sign * partition_count(k - g2)
        j += 1
    return total


def conjugate_partition(alpha: Partition) -> Partition:
    if not alpha:
        return ()
    return tuple(sum(1 for a in alpha if a > i) for i in range(alpha[0]))


# -- explicit polynomials ------------------------------------------------------


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = defaultdict(int)
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {e: c for e, c in out.items() if c}


def elementary_poly(k: int, nvars: int) -> dict:
    if k > nvars:
        return {}
    out = {}
    for idx in combinations(range(nvars), k):
        e = [0] * nvars
        for i in idx:
            e[i] = 1
        out[tuple(e)] = 1
    return out


def expand_elementary(emonomial: Iterable[int], nvars: int) -> dict:
    """Expand ``prod e_k`` over the multiset ``emonomial`` in ``nvars`` variables."""
    result = {(0,) * nvars: 1}
    for k in emonomial:
        result = _poly_mul(result, elementary_poly(k, nvars))
        if not result:
            break
    return result


def monomial_poly(alpha: Partition, nvars: int) -> dict:
    """Direct expansion of m_alpha in ``nvars`` variables."""
    if len(alpha) > nvars:
        return {}
    padded = tuple(alpha) + (0,) * (nvars - len(alpha))
    return {e: 1 for e in set(permutations(padded))}


def poly_to_monomial_basis(poly: dict) -> dict:
    """Collect a symmetric polynomial into ``{partition: coeff}``.

    Only the sorted exponent vectors are read; symmetry is the caller's claim.
    """
    out = {}
    for e, c in poly.items():
        if list(e) == sorted(e, reverse=True):
            alpha = tuple(x for x in e if x)
            out[alpha] = out.get(alpha, 0) + c
    return {a: c for a, c in out.items() if c}


# -- the e-basis -----------------------------------------------------------------


class EPolynomial:
    """Integer combination of e-monomials ``e_{k1} e_{k2} ...``.

    Keys are partitions listing the factors; ``()`` is the constant 1.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {as_partition(k): c for k, c in (terms or {}).items() if c}

    @classmethod
    def e(cls, k: int) -> "EPolynomial":
        return cls({(k,) if k else (): 1})

    def __eq__(self, other):
        if not isinstance(other, EPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "EPolynomial") -> "EPolynomial":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return EPolynomial(out)

    def __sub__(self, other: "EPolynomial") -> "EPolynomial":
        return self + (-1) * other

    def __rmul__(self, c: int) -> "EPolynomial":
        return EPolynomial({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        out: dict = defaultdict(int)
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                out[as_partition(a + b)] += ca * cb
        return EPolynomial(out)

    def __repr__(self):
        return f"EPolynomial({self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items()):
            mono = "*".join(f"e{j}" for j in k) or "1"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def expand(self, nvars: int) -> dict:
        out: dict = defaultdict(int)
        for k, c in self.terms.items():
            for e, v in expand_elementary(k, nvars).items():
                out[e] += c * v
        return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def _e_in_m_basis(lam: Partition) -> dict:
    k = sum(lam)
    return poly_to_monomial_basis(expand_elementary(lam, k))


@lru_cache(maxsize=None)
def _monomial_to_e(alpha: Partition) -> tuple:
    # e_{mu'} = m_mu + (terms strictly lower in dominance, hence in lex order)
    target = {alpha: 1}
    result: dict = {}
    while target:
        mu = max(target)
        c = target[mu]
        lam = conjugate_partition(mu)
        result[lam] = result.get(lam, 0) + c
        expansion = _e_in_m_basis(lam)
        if expansion.get(mu) != 1:
            raise ArithmeticError(f"e_{lam} does not lead with m_{mu}")
        for nu, v in expansion.items():
            target[nu] = target.get(nu, 0) - c * v
            if not target[nu]:
                del target[nu]
        if mu in target:
            raise ArithmeticError("triangular solve failed to eliminate leading term")
    return tuple(sorted(result.items()))


def monomial_to_e(alpha: Iterable[int]) -> EPolynomial:
    """The e-polynomial equal to m_alpha."""
    return EPolynomial(dict(_monomial_to_e(as_partition(alpha))))


# -- evaluation at ring elements --------------------------------------------------


def _elementary_values(values: Sequence, kmax: int, one):
    # E[j] = e_j(values[:i]) built incrementally
    E = [one] + [None] * kmax
    for x in values:
        for j in range(kmax, 0, -1):
            if E[j - 1] is not None:
                term = E[j - 1] * x
                E[j] = term if E[j] is None else E[j] + term
    return E


def evaluate_at(expr, values: Sequence, one, zero=None):
    """Evaluate an ``EPolynomial`` or a monomial ``m_alpha`` at commuting values.

    ``expr`` is either an ``EPolynomial`` or a partition tuple (meaning
    m_alpha). ``one`` is the unit of the target ring; ``zero`` defaults to
    ``0 * one``.
    """
    if zero is None:
        zero = 0 * one
    values = list(values)
    if isinstance(expr, EPolynomial):
        kmax = max((max(k, default=0) for k in expr.terms), default=0)
        E = _elementary_values(values, kmax, one)
        total = zero
        for k, c in expr.terms.items():
            prod = one
            for j in k:
                ej = E[j] if j < len(E) else None
                if ej is None:
                    prod = None
                    break
                prod = prod * ej
            if prod is not None:
                total = total + c * prod
        return total
    alpha = as_partition(expr)
    total = zero
    for expvec in monomial_poly(alpha, len(values)):
        prod = one
        for x, a in zip(values, expvec):
            for _ in range(a):
                prod = prod * x
        total = total + prod
    return total


def m_product(alpha: Partition, beta: Partition) -> dict:
    """``m_alpha * m_beta`` in the m-basis, via expansion in enough variables."""
    nvars = len(alpha) + len(beta)
    prod = _poly_mul(monomial_poly(alpha, nvars), monomial_poly(beta, nvars))
    return poly_to_monomial_basis(prod)
