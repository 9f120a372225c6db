"""Finite-support permutations of the positive integers.

Composition follows ``(p * q)(i) == p(q(i))``: the right factor acts first.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence


class Permutation:
    """An immutable permutation of {1, 2, ...} moving finitely many points.

    Only the support is stored, so ``Permutation()`` is the identity of every
    symmetric group at once.
    """

    __slots__ = ("_map", "_key")

    def __init__(self, mapping: dict[int, int] | None = None):
        m = {i: j for i, j in (mapping or {}).items() if i != j}
        if sorted(m) != sorted(m.values()):
            raise ValueError(f"not a bijection on its support: {mapping!r}")
        if any(i < 1 for i in m):
            raise ValueError("points must be positive integers")
        self._map = m
        self._key = tuple(sorted(m.items()))

    # -- construction ------------------------------------------------------

    @classmethod
    def from_cycles(cls, *cycles: Sequence[int]) -> "Permutation":
        m: dict[int, int] = {}
        seen: set[int] = set()
        for cyc in cycles:
            if len(set(cyc)) != len(cyc) or seen.intersection(cyc):
                raise ValueError(f"cycles are not disjoint: {cycles!r}")
            seen.update(cyc)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                m[a] = b
        return cls(m)

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """Build from one-line notation ``images[i-1] = p(i)`` (1-based)."""
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a one-line permutation: {images!r}")
        return cls({i + 1: v for i, v in enumerate(images)})

    @classmethod
    def from_zero_based(cls, images: Sequence[int]) -> "Permutation":
        return cls({i + 1: v + 1 for i, v in enumerate(images) if i != v})

    @classmethod
    def transposition(cls, a: int, b: int) -> "Permutation":
        return cls({a: b, b: a})

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse cycle notation such as ``"(1,7,8,4,9)(2,6)"`` or ``"id"``."""
        s = "".join(text.split())
        if s in ("id", "()", ""):
            return cls()
        if not re.fullmatch(r"(\(\d+(,\d+)*\))+", s):
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = [tuple(int(x) for x in c.split(",")) for c in re.findall(r"\(([^)]*)\)", s)]
        return cls.from_cycles(*cycles)

    # -- basic protocol ----------------------------------------------------

    def __call__(self, i: int) -> int:
        return self._map.get(i, i)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other: "Permutation") -> bool:
        return self._key < other._key

    def __repr__(self):
        return f"Permutation.parse({str(self)!r})"

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "id"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        out = Permutation()
        for _ in range(abs(k)):
            out = compose(out, base)
        return out

    # -- queries -----------------------------------------------------------

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._map)

    @property
    def degree(self) -> int:
        """Largest moved point (0 for the identity)."""
        return max(self._map, default=0)

    def items(self):
        return self._key

    def is_identity(self) -> bool:
        return not self._map

    def inverse(self) -> "Permutation":
        return Permutation({j: i for i, j in self._map.items()})

    def images(self, n: int) -> tuple[int, ...]:
        """One-line notation on [n]; raises if the support escapes [n]."""
        if self.degree > n:
            raise ValueError(f"{self} does not lie in S_{n}")
        return tuple(self(i) for i in range(1, n + 1))

    def zero_based(self, n: int) -> tuple[int, ...]:
        return tuple(v - 1 for v in self.images(n))

    def cycles(self) -> list[tuple[int, ...]]:
        return cycle_decomposition(self)

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def conjugate(self, t: "Permutation") -> "Permutation":
        return conjugate(self, t)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p∘q``, i.e. ``i -> p(q(i))``."""
    pts = p._map.keys() | q._map.keys()
    return Permutation({i: p(q(i)) for i in pts})


def conjugate(p: Permutation, t: Permutation) -> Permutation:
    """Return ``t∘p∘t⁻¹``; relabels every cycle entry ``x`` as ``t(x)``."""
    return Permutation({t(i): t(j) for i, j in p._map.items()})


def cycle_decomposition(p: Permutation) -> list[tuple[int, ...]]:
    """Nontrivial cycles, each led by its minimum, sorted by that minimum."""
    out = []
    seen: set[int] = set()
    for start in sorted(p._map):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        j = p(start)
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = p(j)
        out.append(tuple(cyc))
    return out


def simple_word(p: Permutation) -> list[int]:
    """Indices ``[i1, ..., ik]`` with ``p = s_i1 ∘ ... ∘ s_ik``, ``s_i = (i, i+1)``.

    The word is reduced (bubble sort on the one-line form).
    """
    arr = list(p.images(p.degree))
    word = []
    # arr = p ∘ (s_j1 ∘ ...) after sorting; record swaps of positions.
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                word.append(i + 1)
                changed = True
    # p ∘ s_w1 ∘ s_w2 ∘ ... = id  =>  p = s_wk ∘ ... ∘ s_w1
    return word[::-1]


def all_permutations(points: Iterable[int]) -> Iterable[Permutation]:
    from itertools import permutations

    pts = tuple(points)
    for img in permutations(pts):
        yield Permutation(dict(zip(pts, img)))
