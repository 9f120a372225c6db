"""Marked cycle shapes: the monoid Λ(m) indexing Stab(m)-conjugacy classes.

A shape is stored as ``(pi, d, star_cycles)``: ``pi`` permutes the marks
``1..m``, ``d[i-1]`` stars follow mark ``i`` inside its cycle, and
``star_cycles`` maps a cycle length ``>= 2`` to the number of star-only
cycles of that length.  Internally the hot paths work on 0-based one-line
tuples ``images[x] = p(x+1) - 1``.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

from .perm import Permutation
from .symfunc import partition_count, partitions_of

ORBIT_GUARD = 9


class ShapeError(ValueError):
    """Malformed or inconsistent marked cycle shape."""


class MarkedCycleShape:
    """An m-marked cycle shape ``pi u^d c^l``."""

    __slots__ = ("m", "pi", "d", "star_cycles", "_key", "_text")

    def __init__(self, m: int, pi: Permutation | None = None, d: Sequence[int] | None = None,
                 star_cycles: dict[int, int] | Iterable[tuple[int, int]] | None = None):
        pi = pi or Permutation()
        d = tuple(d) if d is not None else (0,) * m
        stars = dict(star_cycles or {})
        if m < 0:
            raise ShapeError("m must be nonnegative")
        if pi.degree > m:
            raise ShapeError(f"pi={pi} moves points outside [{m}]")
        if len(d) != m or any(x < 0 for x in d):
            raise ShapeError(f"d must be {m} nonnegative integers, got {d!r}")
        if any(length < 2 for length, mult in stars.items() if mult):
            raise ShapeError("star-only cycles must have length at least two")
        if any(mult < 0 for mult in stars.values()):
            raise ShapeError("negative star-cycle multiplicity")
        self.m = m
        self.pi = pi
        self.d = d
        self.star_cycles = tuple(sorted((k, v) for k, v in stars.items() if v))
        self._key = (pi.zero_based(m), d, self.star_cycles)
        self._text = None

    @classmethod
    def from_key(cls, m: int, key) -> "MarkedCycleShape":
        pi0, d, stars = key
        return cls(m, Permutation.from_zero_based(pi0), d, dict(stars))

    @classmethod
    def empty(cls, m: int) -> "MarkedCycleShape":
        """The identity shape (1)(2)...(m)."""
        return cls(m)

    @classmethod
    def parse(cls, text: str, m: int | None = None) -> "MarkedCycleShape":
        return parse_shape(text, m)

    # -- protocol ----------------------------------------------------------

    @property
    def key(self):
        return self._key

    def __eq__(self, other):
        if not isinstance(other, MarkedCycleShape):
            return NotImplemented
        return self.m == other.m and self._key == other._key

    def __hash__(self):
        return hash((self.m, self._key))

    def __lt__(self, other: "MarkedCycleShape"):
        return sort_key(self) < sort_key(other)

    def __mul__(self, other: "MarkedCycleShape") -> "MarkedCycleShape":
        return product(self, other)

    def __repr__(self):
        return f"MarkedCycleShape.parse({str(self)!r}, m={self.m})"

    def __str__(self):
        if self._text is None:
            self._text = render_shape(self)
        return self._text

    # -- statistics --------------------------------------------------------

    @property
    def norm_upper(self) -> int:
        """||λ||^m: the number of stars."""
        return sum(self.d) + sum(length * mult for length, mult in self.star_cycles)

    @property
    def norm_lower(self) -> int:
        """||λ||_m: the number of marks moved by pi."""
        return len(self.pi.support)

    @property
    def norm(self) -> int:
        return self.norm_upper + self.norm_lower

    @property
    def degree(self) -> int:
        return self.norm_upper + self.m

    @property
    def star_count(self) -> int:
        """Number of star-only cycles."""
        return sum(mult for _, mult in self.star_cycles)

    @property
    def star_reduced_degree(self) -> int:
        """rd of the star-only part c^l: its stars minus its cycles."""
        return sum((length - 1) * mult for length, mult in self.star_cycles)

    def star_lengths(self) -> list[int]:
        return sorted((length for length, mult in self.star_cycles for _ in range(mult)), reverse=True)

    def star_partition(self) -> tuple[int, ...]:
        """The partition alpha with ᾱ equal to the star-only part."""
        return tuple(length - 1 for length in self.star_lengths())

    def star_part(self) -> "MarkedCycleShape":
        """c^l as a shape in Λ(0)."""
        return MarkedCycleShape(0, star_cycles=dict(self.star_cycles))

    def marked_part(self) -> "MarkedCycleShape":
        """pi u^d with the star-only cycles removed."""
        return MarkedCycleShape(self.m, self.pi, self.d)

    def is_permutation(self) -> bool:
        return self.norm_upper == 0

    def to_json(self) -> dict:
        return {"m": self.m, "cycles": str(self)}

    @classmethod
    def from_json(cls, obj: dict) -> "MarkedCycleShape":
        return parse_shape(obj["cycles"], int(obj["m"]))


# -- text codec -------------------------------------------------------------------


def _marked_cycles(shape: MarkedCycleShape) -> list[list]:
    """Token lists of the cycles containing marks, canonical order."""
    out, seen = [], set()
    for i in range(1, shape.m + 1):
        if i in seen:
            continue
        tokens, j = [], i
        while True:
            seen.add(j)
            tokens.append(j)
            tokens.extend("*" * shape.d[j - 1])
            j = shape.pi(j)
            if j == i:
                break
        out.append(tokens)
    return out


def _canonical_tokens(shape: MarkedCycleShape) -> list[list]:
    cycles = _marked_cycles(shape)
    cycles.extend(["*"] * length for length in shape.star_lengths())
    return cycles


def render_shape(shape: MarkedCycleShape) -> str:
    cycles = _canonical_tokens(shape)
    if not cycles:
        return "id"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_shape(text: str, m: int | None = None) -> MarkedCycleShape:
    """Parse cycle text over marks and ``*``; trivial mark cycles are required."""
    s = "".join(text.split())
    if s in ("id", "()", ""):
        if m not in (None, 0):
            raise ShapeError(f"'id' denotes the empty 0-marked shape, but m={m}")
        return MarkedCycleShape(0)
    if _CYCLE_RE.sub("", s):
        raise ShapeError(f"malformed shape text: {text!r}")
    raw = _CYCLE_RE.findall(s)
    cycles = []
    for body in raw:
        toks = body.split(",")
        if not body or any(t != "*" and not t.isdigit() for t in toks):
            raise ShapeError(f"malformed cycle ({body}) in {text!r}")
        cycles.append([t if t == "*" else int(t) for t in toks])
    marks = [t for c in cycles for t in c if t != "*"]
    if len(set(marks)) != len(marks):
        raise ShapeError(f"duplicate mark in {text!r}")
    if m is None:
        m = len(marks)
    if set(marks) != set(range(1, m + 1)):
        raise ShapeError(f"marks {sorted(marks)} must be exactly 1..{m}")
    pi_map, d = {}, [0] * m
    stars: Counter = Counter()
    for c in cycles:
        mark_pos = [k for k, t in enumerate(c) if t != "*"]
        if not mark_pos:
            if len(c) < 2:
                raise ShapeError("star-only cycle of length 1")
            stars[len(c)] += 1
            continue
        start = mark_pos[0]
        rot = c[start:] + c[:start]
        pos = [k for k, t in enumerate(rot) if t != "*"] + [len(rot)]
        for a, b in zip(pos, pos[1:]):
            i = rot[a]
            d[i - 1] = b - a - 1
            pi_map[i] = rot[b] if b < len(rot) else rot[0]
    return MarkedCycleShape(m, Permutation(pi_map), d, stars)


# -- statistics / monoid ------------------------------------------------------------


@dataclass(frozen=True)
class ShapeStats:
    norm: int
    norm_upper_m: int
    norm_lower_m: int
    deg_m: int
    reduced_degree: int | None = None


def stats(shape: MarkedCycleShape, reduced_degree: bool = False) -> ShapeStats:
    rd = None
    if reduced_degree:
        if shape.m:
            raise ShapeError("reduced degree is only defined for m = 0")
        rd = shape.degree - shape.star_count
    return ShapeStats(shape.norm, shape.norm_upper, shape.norm_lower, shape.degree, rd)


def reduced_degree(shape: MarkedCycleShape) -> int:
    return stats(shape, reduced_degree=True).reduced_degree


def product(a: MarkedCycleShape, b: MarkedCycleShape) -> MarkedCycleShape:
    """``(pi u^d c^l)(sigma u^e c^k) = (pi∘sigma) u^(sigma∘d + e) c^(l+k)``."""
    if a.m != b.m:
        raise ShapeError(f"cannot multiply shapes with m={a.m} and m={b.m}")
    sigma = b.pi
    sinv = sigma.inverse()
    d = tuple(a.d[sinv(i) - 1] + b.d[i - 1] for i in range(1, a.m + 1))
    stars = Counter(dict(a.star_cycles))
    stars.update(dict(b.star_cycles))
    return MarkedCycleShape(a.m, a.pi * sigma, d, stars)


def lift_shape(shape0: MarkedCycleShape, m: int) -> MarkedCycleShape:
    """Adjoin the trivial cycles (1)...(m) to a 0-marked shape."""
    if shape0.m != 0:
        raise ShapeError("lift_shape expects a 0-marked shape")
    return MarkedCycleShape(m, star_cycles=dict(shape0.star_cycles))


def sort_key(shape: MarkedCycleShape):
    return (shape.degree, str(shape))


# -- permutations <-> shapes ----------------------------------------------------------


def shape_key(images: Sequence[int], m: int):
    """Key of the shape of a 0-based one-line permutation (hot path)."""
    n = len(images)
    seen = [False] * n
    pi = [0] * m
    d = [0] * m
    for i in range(m):
        j, c = images[i], 0
        while j >= m:
            seen[j] = True
            c += 1
            j = images[j]
        pi[i], d[i] = j, c
    lengths: Counter = Counter()
    for x in range(m, n):
        if seen[x] or images[x] == x:
            continue
        length, y = 0, x
        while not seen[y]:
            seen[y] = True
            length += 1
            y = images[y]
        lengths[length] += 1
    return (tuple(pi), tuple(d), tuple(sorted(lengths.items())))


_SHAPE_CACHE: dict = {}


def shape_from_key(m: int, key) -> MarkedCycleShape:
    try:
        return _SHAPE_CACHE[m, key]
    except KeyError:
        s = _SHAPE_CACHE[m, key] = MarkedCycleShape.from_key(m, key)
        return s


def shape_of(sigma: Permutation, m: int) -> MarkedCycleShape:
    """Erase every point outside [m] to a star."""
    n = max(sigma.degree, m)
    return shape_from_key(m, shape_key(sigma.zero_based(n), m))


def is_member(shape: MarkedCycleShape, sigma: Permutation, n: int) -> bool:
    """Membership test in CL_{n,m}(shape) by counting cycles and mark paths."""
    m = shape.m
    if n < m:
        raise ShapeError(f"n={n} < m={m}")
    if sigma.degree > n:
        raise ShapeError(f"{sigma} is not supported in [{n}]")
    for i in range(1, m + 1):
        j = sigma(i)
        for _ in range(shape.d[i - 1]):
            if j <= m:
                return False
            j = sigma(j)
        if j != shape.pi(i):
            return False
    marked = set()
    for i in range(1, m + 1):
        j = i
        while True:
            marked.add(j)
            j = sigma(j)
            if j == i:
                break
    counts = Counter(len(c) for c in sigma.cycles() if c[0] not in marked)
    return tuple(sorted(counts.items())) == shape.star_cycles


def _star_slots(shape: MarkedCycleShape) -> list[list]:
    return _canonical_tokens(shape)


def _build_images(n: int, cycles: list[list[int]]) -> tuple[int, ...]:
    img = list(range(n))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a] = b
    return tuple(img)


def representative_images(shape: MarkedCycleShape, n: int) -> tuple[int, ...]:
    """0-based images of the canonical class element: stars filled left to
    right with the smallest unused points of [n] \\ [m]."""
    if n < shape.degree:
        raise ShapeError(f"class of {shape} is empty in S_{n}")
    nxt = shape.m
    cycles = []
    for toks in _canonical_tokens(shape):
        c = []
        for t in toks:
            if t == "*":
                c.append(nxt)
                nxt += 1
            else:
                c.append(t - 1)
        cycles.append(c)
    return _build_images(n, cycles)


def representative(shape: MarkedCycleShape, n: int | None = None) -> Permutation:
    return Permutation.from_zero_based(representative_images(shape, shape.degree if n is None else n))


def _star_cycle_fillings(lengths: list[int], pool: tuple[int, ...], bound: int) -> Iterator[list[tuple]]:
    if not lengths:
        yield []
        return
    length, rest = lengths[0], lengths[1:]
    for a in pool:
        if a <= bound:
            continue
        higher = tuple(x for x in pool if x > a)
        for tail in permutations(higher, length - 1):
            cyc = (a,) + tail
            used = set(cyc)
            remaining = tuple(x for x in pool if x not in used)
            nb = a if rest and rest[0] == length else -1
            for more in _star_cycle_fillings(rest, remaining, nb):
                yield [cyc] + more


def class_images(shape: MarkedCycleShape, n: int) -> Iterator[tuple[int, ...]]:
    """Every element of CL_{n,m}(shape) exactly once, as 0-based images."""
    m = shape.m
    if n < m:
        raise ShapeError(f"n={n} < m={m}")
    if n < shape.degree:
        return
    marked = [[t if t == "*" else t - 1 for t in c] for c in _marked_cycles(shape)]
    nslots = sum(shape.d)
    pool = tuple(range(m, n))
    lengths = shape.star_lengths()
    for fill in permutations(pool, nslots):
        it = iter(fill)
        cycles = [[next(it) if t == "*" else t for t in c] for c in marked]
        used = set(fill)
        remaining = tuple(x for x in pool if x not in used)
        for stars in _star_cycle_fillings(lengths, remaining, -1):
            yield _build_images(n, cycles + [list(c) for c in stars])


def class_elements(shape: MarkedCycleShape, n: int) -> Iterator[Permutation]:
    for img in class_images(shape, n):
        yield Permutation.from_zero_based(img)


# -- enumeration and counting ---------------------------------------------------------


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_shapes(m: int, degree_bound: int) -> list[MarkedCycleShape]:
    """Λ_{<=degree_bound}(m), sorted by (degree, canonical text)."""
    if degree_bound < m:
        return []
    free = degree_bound - m
    out = []
    for img in permutations(range(1, m + 1)):
        pi = Permutation.from_images(img) if m else Permutation()
        for a in range(free + 1):
            for d in _compositions(a, m):
                for b in range(free - a + 1):
                    for lam in partitions_of(b, proper=True):
                        out.append(MarkedCycleShape(m, pi, d, Counter(lam)))
    return sorted(out, key=sort_key)


def _series_mul(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def _inverse_one_minus_power(k: int, n: int) -> list[int]:
    """Series of 1/(1 - t^k) truncated at degree n."""
    return [1 if i % k == 0 else 0 for i in range(n + 1)]


def _genfunc_graded(m: int, n: int) -> list[int]:
    series = [0] * (n + 1)
    if m <= n:
        series[m] = factorial(m)
    for _ in range(m):
        series = _series_mul(series, _inverse_one_minus_power(1, n), n)
    for k in range(2, n + 1):
        series = _series_mul(series, _inverse_one_minus_power(k, n), n)
    return series


def _generalised_binom_top(a: int, m: int) -> int:
    # C(a-1, a-m) with the generalised convention C(-1, 0) = 1
    top, k = a - 1, a - m
    if k < 0:
        return 0
    if top < 0:
        return (-1) ** k * comb(k - top - 1, k)
    return comb(top, k)


def count_shapes(m: int, n: int, method: str = "genfunc", graded: bool = False) -> int:
    """|Λ_n(m)| (graded) or |Λ_{<=n}(m)| by one of three independent methods."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if method == "genfunc":
        series = _genfunc_graded(m, n)
        return series[n] if graded else sum(series)
    if method == "closed":
        if graded:
            raise ValueError("the closed form counts Λ_{<=n}(m) only")
        return sum(factorial(m) * _generalised_binom_top(a, m) * partition_count(n - a)
                   for a in range(m, n + 1))
    if method == "enumerate":
        shapes = enumerate_shapes(m, n)
        return sum(1 for s in shapes if s.degree == n) if graded else len(shapes)
    raise ValueError(f"unknown counting method {method!r}")


def stabiliser_order(shape: MarkedCycleShape) -> int:
    """b = prod over star-only lengths l of mult! * l^mult."""
    return prod(factorial(mult) * length**mult for length, mult in shape.star_cycles)


def class_size(shape: MarkedCycleShape, n: int) -> int:
    m = shape.m
    if n < m:
        raise ShapeError(f"n={n} < m={m}")
    k = shape.norm_upper
    if n - m < k:
        return 0
    falling = prod(range(n - m - k + 1, n - m + 1))
    size, rem = divmod(falling, stabiliser_order(shape))
    assert rem == 0
    return size


def orbit_enumerate(perms: Sequence[Permutation], m: int, n: int) -> set[tuple[Permutation, ...]]:
    """Brute-force Stab_n(m) conjugation orbit of a tuple of permutations."""
    if n > ORBIT_GUARD:
        raise ShapeError(f"orbit enumeration is guarded at n <= {ORBIT_GUARD}")
    if n < m:
        raise ShapeError(f"n={n} < m={m}")
    base = [p.zero_based(n) for p in perms]
    orbit = set()
    free = list(range(m, n))
    for img in permutations(free):
        t = list(range(n))
        for a, b in zip(free, img):
            t[a] = b
        conj = []
        for p in base:
            q = [0] * n
            for x in range(n):
                q[t[x]] = t[p[x]]
            conj.append(tuple(q))
        orbit.add(tuple(conj))
    return {tuple(Permutation.from_zero_based(q) for q in tup) for tup in orbit}
