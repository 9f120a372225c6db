"""Property suites behind ``fhm verify``.

Each suite yields human-readable check names and raises ``CheckFailed`` with
the first counterexample.
"""
from __future__ import annotations

import random
from itertools import product as cartesian
from typing import Callable, Iterator

from . import fh, grpalg, hecke, shapes, symfunc
from .fh import FHElement, elem_E, elem_s, elem_Y
from .grpalg import GroupAlgebraElement, eval_sym_at_jm, jm
from .hecke import HSElement, normal_form, normal_form_right_to_left, phi, phi_inverse
from .intpoly import IntPoly
from .perm import Permutation


class CheckFailed(AssertionError):
    pass


def _require(ok: bool, message: str):
    if not ok:
        raise CheckFailed(message)


def jucys(max_n: int = 6, max_k: int = 4) -> Iterator[str]:
    """e_k(L_1..L_n) equals the sum of class sums of reduced degree k."""
    for n in range(1, max_n + 1):
        L = [jm(i, n) for i in range(1, n + 1)]
        for i in range(n):
            for j in range(n):
                _require(L[i] * L[j] == L[j] * L[i], f"L_{i + 1} L_{j + 1} != L_{j + 1} L_{i + 1} in S_{n}")
        for i in range(1, n):
            s = GroupAlgebraElement.from_perm(Permutation.transposition(i, i + 1), n)
            _require(L[i] == s * L[i - 1] * s + s, f"L_{i + 1} != s_{i} L_{i} s_{i} + s_{i} in S_{n}")
        for k in range(max_k + 1):
            lhs = eval_sym_at_jm(symfunc.EPolynomial.e(k), n)
            rhs = fh.project(elem_E(k, 0), n)
            _require(lhs == rhs, f"e_{k}(L) differs from E_{k} at n={n}")
            _require(grpalg.centralises(lhs, 0), f"e_{k}(L) is not central at n={n}")
        yield f"jucys n={n}"


def _hecke_generators(m: int):
    return [("s", i) for i in range(1, m)] + [("y", j) for j in range(1, m + 1)]


def _hecke_relations(m: int):
    """Pairs (lhs word, rhs words with signs) for every defining relation."""
    rels = []
    for i in range(1, m):
        rels.append(([("s", i), ("s", i)], [(1, [])]))
        for j in range(i + 2, m):
            rels.append(([("s", i), ("s", j)], [(1, [("s", j), ("s", i)])]))
        if i + 1 < m:
            rels.append(([("s", i), ("s", i + 1), ("s", i)], [(1, [("s", i + 1), ("s", i), ("s", i + 1)])]))
        for j in range(1, m + 1):
            if j not in (i, i + 1):
                rels.append(([("s", i), ("y", j)], [(1, [("y", j), ("s", i)])]))
        rels.append(([("y", i + 1)], [(1, [("s", i), ("y", i), ("s", i)]), (1, [("s", i)])]))
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            rels.append(([("y", a), ("y", b)], [(1, [("y", b), ("y", a)])]))
    return rels


def _word_text(word) -> str:
    return "".join(f"{k}{i}" for k, i in word) or "1"


def relations(max_m: int = 3) -> Iterator[str]:
    """Defining relations of H_m under normal_form, and the Y-relations in FH_m."""
    for m in range(1, max_m + 1):
        for lhs, rhs in _hecke_relations(m):
            left = normal_form(lhs, m)
            right = HSElement.identity(m) * 0
            for c, w in rhs:
                right = right + c * normal_form(w, m)
            _require(left == right, f"m={m}: {_word_text(lhs)} normalises to {left}, expected {right}")
        gens = _hecke_generators(m)
        for a, b in cartesian(gens, gens):
            w = [a, b]
            _require(normal_form(w, m) == normal_form_right_to_left(w, m),
                     f"m={m}: reduction orders disagree on {_word_text(w)}")
        Y = {j: elem_Y(j, m) for j in range(1, m + 1)}
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                _require(Y[i] * Y[j] == Y[j] * Y[i], f"m={m}: Y_{i} Y_{j} != Y_{j} Y_{i}")
        for i in range(1, m):
            s = elem_s(i, m)
            _require(Y[i + 1] == s * Y[i] * s + s, f"m={m}: Y_{i + 1} != K(s_{i}) Y_{i} K(s_{i}) + K(s_{i})")
            for j in range(1, m + 1):
                if j not in (i, i + 1):
                    _require(s * Y[j] == Y[j] * s, f"m={m}: K(s_{i}) Y_{j} != Y_{j} K(s_{i})")
        yield f"relations m={m}"


def _generator_image(g, m: int) -> FHElement:
    kind, i = g
    if kind == "s":
        return elem_s(i, m)
    if kind == "y":
        return elem_Y(i, m)
    return elem_E(i, m)


def random_hs_element(rng: random.Random, m: int, max_terms: int = 3, degree_bound: int | None = None) -> HSElement:
    """A random element with at most ``max_terms`` basis labels of bounded image degree."""
    bound = m + 3 if degree_bound is None else degree_bound
    labels = hecke.basis_labels(m, bound)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        label = rng.choice(labels)
        coeffs = [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]
        terms[label] = IntPoly(coeffs)
    return HSElement(m, terms)


def iso(max_m: int = 3, max_deg_offset: int = 4, samples: int = 30, seed: int = 0) -> Iterator[str]:
    """phi respects relations, is triangular on basis labels, and inverts."""
    for m in range(1, max_m + 1):
        for lhs, rhs in _hecke_relations(m):
            left = phi(normal_form(lhs, m))
            right = FHElement.zero(m)
            for c, w in rhs:
                right = right + c * phi(normal_form(w, m))
            _require(left == right, f"m={m}: phi breaks the relation at {_word_text(lhs)}")
        gens = _hecke_generators(m) + [("e", k) for k in (1, 2, 3)]
        for a, b in cartesian(gens, gens):
            lhs = phi(normal_form([a, b], m))
            rhs = _generator_image(a, m) * _generator_image(b, m)
            _require(lhs == rhs, f"m={m}: phi({_word_text([a, b])}) is not the product of the images")
        seen = set()
        for label in hecke.basis_labels(m, m + max_deg_offset):
            image = hecke.phi_basis(*label, m)
            top = max(hecke.order_key(s) for s in image.terms)
            leads = [s for s in image.terms if hecke.order_key(s) == top and hecke.leading_label(s) == label]
            _require(len(leads) == 1 and image.terms[leads[0]] == 1,
                     f"m={m}: phi{label} has no unit leading term")
            _require(leads[0] not in seen, f"m={m}: repeated leading term {leads[0]}")
            seen.add(leads[0])
        yield f"iso m={m} relations and triangularity"
    rng = random.Random(seed)
    for k in range(samples):
        m = rng.randint(1, min(2, max_m))
        X = random_hs_element(rng, m)
        _require(phi_inverse(phi(X)) == X, f"phi_inverse(phi(X)) != X for X = {X}")
    yield f"iso round trip x{samples}"


def center(max_m: int = 3, max_k: int = 3) -> Iterator[str]:
    """e_k(Y) and E_j commute with K(s_i) and Y_j."""
    for m in range(1, max_m + 1):
        others = [elem_s(i, m) for i in range(1, m)] + [elem_Y(j, m) for j in range(1, m + 1)]
        centrals = [hecke.center_gen(k, m) for k in range(max_k + 1)] + [elem_E(j, m) for j in range(max_k + 1)]
        for z in centrals:
            for g in others:
                _require(not fh.commutator(z, g), f"m={m}: [{z}, {g}] != 0")
        yield f"center m={m}"


def orbit(max_m: int = 3, max_deg: int = 7, max_n: int = 7) -> Iterator[str]:
    """class_size against brute-force orbit sizes, and the emptiness threshold."""
    for m in range(max_m + 1):
        for shape in shapes.enumerate_shapes(m, max_deg):
            for n in range(m, max_n + 1):
                size = shapes.class_size(shape, n)
                _require((size == 0) == (n < shape.degree), f"emptiness threshold fails for {shape} at n={n}")
                if size:
                    rep = shapes.representative(shape, n)
                    orb = shapes.orbit_enumerate([rep], m, n)
                    _require(len(orb) == size, f"|orbit of {rep}| = {len(orb)} but class_size({shape}, {n}) = {size}")
        yield f"orbit m={m}"


def counts(max_m: int = 3, max_n: int = 12) -> Iterator[str]:
    """The three shape-counting methods agree."""
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            g = shapes.count_shapes(m, n, "genfunc")
            c = shapes.count_shapes(m, n, "closed")
            e = shapes.count_shapes(m, n, "enumerate")
            _require(g == c == e, f"m={m}, n={n}: genfunc={g}, closed={c}, enumerate={e}")
            gg = shapes.count_shapes(m, n, "genfunc", graded=True)
            ge = shapes.count_shapes(m, n, "enumerate", graded=True)
            _require(gg == ge, f"m={m}, n={n}: graded genfunc={gg}, enumerate={ge}")
        yield f"counts m={m}"


SUITES: dict[str, Callable[..., Iterator[str]]] = {
    "jucys": jucys,
    "relations": relations,
    "iso": iso,
    "center": center,
    "orbit": orbit,
    "counts": counts,
}
