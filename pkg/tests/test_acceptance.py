"""End-to-end acceptance checks; each prints one PASS/FAIL line.

All comparisons are exact equalities.
"""
import random
import time

from conftest import ACCEPTANCE
from fhm import fh, hecke, symfunc
from fhm.fh import FHElement, elem_E, elem_s, elem_Y, fh_mul, leading_term, product_table, project
from fhm.grpalg import GroupAlgebraElement, class_sum, eval_sym_at_jm, jm, twist
from fhm.hecke import HSElement, center_gen, normal_form, phi, phi_inverse
from fhm.intpoly import IntPoly
from fhm.perm import Permutation
from fhm.shapes import (
    class_size,
    count_shapes,
    enumerate_shapes,
    orbit_enumerate,
    parse_shape,
    product,
    reduced_degree,
    representative,
)
from fhm.verify import _hecke_relations, random_hs_element


def report(num, title, ok, detail=""):
    ACCEPTANCE.append((num, title, ok, detail))
    print(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else ""))
    assert ok, f"criterion {num} failed: {detail}"


def clear_caches():
    fh.clear_cache()
    fh._M_CACHE.clear()
    hecke._PHI_CACHE.clear()


def test_criterion_01_worked_product():
    clear_caches()
    start = time.perf_counter()
    lam, mu = parse_shape("(1,2)(*,*)"), parse_shape("(1)(2)(*,*)")
    tau1, tau2, tau3 = (parse_shape(s) for s in ("(1,2)(*,*)(*,*)", "(1,2)(*,*,*)", "(1,2)"))
    X = fh_mul(FHElement.K(lam), FHElement.K(mu))
    expected = FHElement(2, {tau1: 2, tau2: 3, tau3: IntPoly.binomial(2, shift=2)})
    ok = X == expected
    bad = []
    for n in range(2, 7):
        direct = class_sum(lam, n) * class_sum(mu, n)
        if project(X, n) != direct:
            bad.append(n)
    elapsed = time.perf_counter() - start
    ok = ok and not bad and elapsed < 10
    report(1, "worked FH_2 product and its projections n=2..6", ok, f"{elapsed:.2f}s, bad n={bad}")


def test_criterion_02_monoid_example():
    got = product(parse_shape("(1,*,2,*)(3,4)"), parse_shape("(1,4)(2)(3,*,*)(*,*)"))
    report(2, "monoid product example", str(got) == "(1,3,*,*,4,*,2,*)(*,*)", str(got))


def test_criterion_03_counting():
    ok = count_shapes(0, 4, "genfunc") == 5
    bad = []
    for m in range(4):
        for n in range(13):
            vals = {count_shapes(m, n, meth) for meth in ("genfunc", "closed", "enumerate")}
            if len(vals) != 1:
                bad.append((m, n, vals))
    report(3, "shape counts: three methods agree, m<=3, n<=12", ok and not bad, f"disagreements={bad[:3]}")


def test_criterion_04_class_sizes():
    bad = []
    checked = 0
    for m in range(4):
        for shape in enumerate_shapes(m, 7):
            for n in range(m, 8):
                size = class_size(shape, n)
                if (size == 0) != (n < shape.degree):
                    bad.append(("threshold", str(shape), n))
                if n >= shape.degree:
                    orbit = orbit_enumerate([representative(shape, n)], m, n)
                    checked += 1
                    if len(orbit) != size:
                        bad.append((str(shape), n, len(orbit), size))
    report(4, "class sizes equal orbit sizes, deg<=7, m<=3, n<=7", not bad, f"{checked} orbits, bad={bad[:3]}")


def test_criterion_05_structure_polynomials():
    clear_caches()
    start = time.perf_counter()
    bad = []
    pairs = 0
    for m in range(3):
        shapes = enumerate_shapes(m, 5)
        sums = {}
        for lam in shapes:
            for mu in shapes:
                table = product_table(lam, mu)
                pairs += 1
                for n in range(m, 9):
                    lhs = sums.setdefault((lam, n), class_sum(lam, n)) * sums.setdefault((mu, n), class_sum(mu, n))
                    rhs = GroupAlgebraElement.zero(n)
                    for nu, f in table.items():
                        c = f(n)
                        if c and nu.degree <= n:
                            rhs = rhs + c * sums.setdefault((nu, n), class_sum(nu, n))
                    if lhs != rhs:
                        bad.append((m, str(lam), str(mu), n))
    elapsed = time.perf_counter() - start
    report(5, "interpolated products exact at every n in [m, 8], deg<=5, m<=2",
           not bad and elapsed < 300, f"{pairs} pairs, {elapsed:.1f}s, bad={bad[:3]}")


def test_criterion_06_leading_terms():
    bad = []
    for m in range(3):
        shapes = enumerate_shapes(m, 5)
        for lam in shapes:
            for mu in shapes:
                top, c = leading_term(lam, mu)
                f = fh.structure_polynomial(lam, mu, top)
                if not (f.is_constant() and f == c and c >= 1):
                    bad.append((str(lam), str(mu), str(f), c))
    report(6, "leading coefficient is the binomial product constant", not bad, f"bad={bad[:3]}")


def test_criterion_07_jucys():
    bad = []
    for n in range(0, 7):
        for k in range(5):
            lhs = eval_sym_at_jm(symfunc.EPolynomial.e(k), n)
            rhs = GroupAlgebraElement.zero(n)
            for lam in enumerate_shapes(0, n):
                if reduced_degree(lam) == k:
                    rhs = rhs + class_sum(lam, n)
            if lhs != rhs:
                bad.append((n, k))
    report(7, "e_k of Jucys-Murphy elements is the reduced-degree class sum, n<=6, k<=4", not bad, f"bad={bad}")


def test_criterion_08_relations():
    bad = []
    for m in range(1, 4):
        for lhs, rhs in _hecke_relations(m):
            right = HSElement.identity(m) * 0
            for c, w in rhs:
                right = right + c * normal_form(w, m)
            if normal_form(lhs, m) != right:
                bad.append(("H", m, lhs))
        Y = [elem_Y(j, m) for j in range(1, m + 1)]
        for a in range(m):
            for b in range(m):
                if Y[a] * Y[b] != Y[b] * Y[a]:
                    bad.append(("YY", m, a + 1, b + 1))
        for i in range(1, m):
            s = elem_s(i, m)
            if Y[i] != s * Y[i - 1] * s + s:
                bad.append(("Ys", m, i))
            if s * s != FHElement.identity(m):
                bad.append(("ss", m, i))
            for j in range(1, m + 1):
                if j not in (i, i + 1) and s * Y[j - 1] != Y[j - 1] * s:
                    bad.append(("sY", m, i, j))
            if i + 1 < m:
                t = elem_s(i + 1, m)
                if s * t * s != t * s * t:
                    bad.append(("braid", m, i))
    report(8, "Y-relations in FH_m and Hecke relations, m<=3", not bad, f"bad={bad[:3]}")


def test_criterion_09_isomorphism():
    bad = []
    for m in range(1, 4):
        for lhs, rhs in _hecke_relations(m):
            right = FHElement.zero(m)
            for c, w in rhs:
                right = right + c * phi(normal_form(w, m))
            if phi(normal_form(lhs, m)) != right:
                bad.append(("relation", m, lhs))
        for a in range(1, 4):
            for g in [elem_s(i, m) for i in range(1, m)] + [elem_Y(j, m) for j in range(1, m + 1)]:
                if elem_E(a, m) * g != g * elem_E(a, m):
                    bad.append(("e central", m, a))
        leads = set()
        labels = hecke.basis_labels(m, m + 4)
        for label in labels:
            image = hecke.phi_basis(*label, m)
            top = max(hecke.order_key(s) for s in image.terms)
            tops = [s for s in image.terms if hecke.order_key(s) == top]
            mine = [s for s in tops if hecke.leading_label(s) == label]
            if len(mine) != 1 or image.terms[mine[0]] != 1 or mine[0] in leads:
                bad.append(("triangular", m, label))
            else:
                leads.add(mine[0])
    rng = random.Random(2024)
    trips = 0
    for _ in range(30):
        m = rng.randint(1, 2)
        X = random_hs_element(rng, m)
        trips += 1
        if phi_inverse(phi(X)) != X:
            bad.append(("round trip", str(X)))
    report(9, "phi respects relations, is unitriangular to deg m+4, and inverts", not bad,
           f"{trips} round trips, bad={bad[:3]}")


def test_criterion_10_center():
    bad = []
    for m in range(1, 4):
        s_list = [elem_s(i, m) for i in range(1, m)]
        y_list = [elem_Y(j, m) for j in range(1, m + 1)]
        for k in range(4):
            z = center_gen(k, m)
            E = elem_E(k, m)
            for g in s_list + y_list:
                if fh.commutator(z, g):
                    bad.append(("e(Y)", m, k))
                if fh.commutator(E, g):
                    bad.append(("E", m, k))
    report(10, "e_k(Y) and E_j commute with K(s_i) and Y_j, m<=3", not bad, f"bad={bad[:3]}")


def test_criterion_11_twisted_projection():
    # Twisting carries Stab_{n+m}(m) onto the permutations of [n], so every
    # twisted image must commute with (a, a+1), a < n.  E_k images are
    # supported on [n] and also commute with the permutations of {n+1..n+m}.
    bad = []
    checked = 0
    for m in range(1, 7):
        for n in range(1, 8 - m):
            N = n + m
            low = [GroupAlgebraElement.from_perm(Permutation.transposition(a, a + 1), N) for a in range(1, n)]
            high = [GroupAlgebraElement.from_perm(Permutation.transposition(n + i, n + i + 1), N) for i in range(1, m)]
            L = [jm(i, N) for i in range(1, n + 1)]
            for i in range(1, m + 1):
                img = twist(project(elem_Y(i, m), N), n, m)
                checked += 1
                if img != jm(n + i, N):
                    bad.append(("Y", n, m, i))
                if any(img * g != g * img for g in low):
                    bad.append(("Y commute", n, m, i))
            for k in range(0, min(n, 3) + 1):
                img = twist(project(elem_E(k, m), N), n, m)
                checked += 1
                target = symfunc.evaluate_at(symfunc.EPolynomial.e(k), L, GroupAlgebraElement.identity(N),
                                             GroupAlgebraElement.zero(N))
                if img != target:
                    bad.append(("E", n, m, k))
                if any(img * g != g * img for g in low + high):
                    bad.append(("E commute", n, m, k))
    report(11, "twisted projections: Y_i -> L_{n+i}, E_k -> e_k(L_1..L_n), n+m<=7", not bad,
           f"{checked} images, bad={bad[:3]}")
