import pytest
from hypothesis import given, settings, strategies as st

from fhm.grpalg import (
    AmbientMismatch,
    GroupAlgebraElement,
    NotInCentraliser,
    TermCapExceeded,
    centralises,
    class_sum,
    decompose,
    eval_sym_at_jm,
    from_class_sums,
    ga_mul,
    jm,
    pair_count,
    structure_constants,
    twist,
    twist_permutation,
)
from fhm.perm import Permutation
from fhm.shapes import MarkedCycleShape, enumerate_shapes, parse_shape
from fhm.symfunc import EPolynomial

LAM = parse_shape("(1,2)(*,*)")
MU = parse_shape("(1)(2)(*,*)")
TAU1 = parse_shape("(1,2)(*,*)(*,*)")
TAU2 = parse_shape("(1,2)(*,*,*)")
TAU3 = parse_shape("(1,2)")


def elem(n, *pairs):
    return GroupAlgebraElement.from_perms(((Permutation.parse(p), c) for p, c in pairs), n)


def random_elements(n):
    perm = st.permutations(list(range(n))).map(tuple)
    return st.dictionaries(perm, st.integers(-3, 3), max_size=4).map(lambda d: GroupAlgebraElement(n, d))


def test_basic_products():
    x = elem(3, ("(1,2)", 2), ("(1,2,3)", -1))
    one = GroupAlgebraElement.identity(3)
    assert one * x == x == x * one
    s = elem(3, ("(1,2)", 1))
    assert s * s == one
    assert elem(3, ("(1,2)", 1)) * elem(3, ("(2,3)", 1)) == elem(3, ("(1,2,3)", 1))
    with pytest.raises(AmbientMismatch):
        ga_mul(one, GroupAlgebraElement.identity(4))


@settings(max_examples=50)
@given(random_elements(4), random_elements(4), random_elements(4))
def test_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert 3 * (a - b) == 3 * a - 3 * b


def test_worked_product_at_small_n():
    for n in (4, 5, 6):
        prod = class_sum(LAM, n) * class_sum(MU, n)
        c = (n - 2) * (n - 3) // 2
        expected = 2 * class_sum(TAU1, n) + 3 * class_sum(TAU2, n) + c * class_sum(TAU3, n)
        assert prod == expected
    assert decompose(class_sum(LAM, 5) * class_sum(MU, 5), 2) == {TAU2: 3, TAU3: 3}
    assert decompose(class_sum(LAM, 6) * class_sum(MU, 6), 2) == {TAU1: 2, TAU2: 3, TAU3: 6}
    assert pair_count(LAM, MU, TAU2, 5) == 3


def test_class_sums():
    assert class_sum(MarkedCycleShape.empty(2), 5) == GroupAlgebraElement.identity(5)
    assert class_sum(LAM, 3) == GroupAlgebraElement.zero(3)
    assert class_sum(parse_shape("(*,*)", 0), 3) == elem(3, ("(1,2)", 1), ("(1,3)", 1), ("(2,3)", 1))
    assert decompose(GroupAlgebraElement.zero(4), 1) == {}


def test_term_cap(monkeypatch):
    monkeypatch.setenv("FHM_TERM_CAP", "5")
    with pytest.raises(TermCapExceeded):
        class_sum(parse_shape("(*,*)", 0), 5)


def test_decompose_rejects_non_central():
    with pytest.raises(NotInCentraliser):
        decompose(elem(3, ("(1,2)", 1)), 0)
    with pytest.raises(NotInCentraliser):
        decompose(elem(3, ("(1,2)", 1), ("(1,3)", 2), ("(2,3)", 1)), 0)


@pytest.mark.parametrize("m", [0, 1, 2])
def test_class_sums_form_a_basis(m):
    n = 5
    shapes = enumerate_shapes(m, n)
    coeffs = {s: (i % 5) - 2 for i, s in enumerate(shapes)}
    A = from_class_sums(coeffs, n)
    assert decompose(A, m) == {s: c for s, c in coeffs.items() if c}
    for s in shapes:
        assert centralises(class_sum(s, n), m)


def test_centralises():
    assert not centralises(elem(3, ("(1,2)", 1)), 0)
    assert centralises(elem(3, ("(1,2)", 1)), 2)
    for n in range(1, 7):
        for k in range(n + 1):
            assert centralises(eval_sym_at_jm(EPolynomial.e(k), n), 0)


def test_jucys_murphy():
    assert jm(1, 4) == GroupAlgebraElement.zero(4)
    assert jm(3, 4) == elem(4, ("(1,3)", 1), ("(2,3)", 1))
    with pytest.raises(ValueError):
        jm(5, 4)
    for n in range(2, 7):
        L = [jm(i, n) for i in range(1, n + 1)]
        for i in range(n):
            for j in range(n):
                assert L[i] * L[j] == L[j] * L[i]
        for i in range(1, n):
            s = elem(n, (f"({i},{i + 1})", 1))
            assert L[i] == s * L[i - 1] * s + s


def test_jucys_small_cases():
    assert eval_sym_at_jm(EPolynomial.e(1), 3) == class_sum(parse_shape("(*,*)", 0), 3)
    e2 = class_sum(parse_shape("(*,*,*)", 0), 4) + class_sum(parse_shape("(*,*)(*,*)", 0), 4)
    assert eval_sym_at_jm(EPolynomial.e(2), 4) == e2
    assert eval_sym_at_jm(EPolynomial.e(4), 3) == GroupAlgebraElement.zero(3)
    # m_(2) evaluated directly equals e1^2 - 2 e2
    assert eval_sym_at_jm((2,), 4) == eval_sym_at_jm(EPolynomial({(1, 1): 1, (2,): -2}), 4)


@pytest.mark.parametrize("m", [0, 1, 2])
def test_structure_constants_against_convolution(m):
    shapes = enumerate_shapes(m, 5)
    for n in range(m, 7):
        for lam in shapes:
            for mu in shapes:
                if lam.degree > n or mu.degree > n:
                    continue
                direct = decompose(class_sum(lam, n) * class_sum(mu, n), m)
                assert structure_constants(lam, mu, n) == direct
                for nu, c in direct.items():
                    assert pair_count(lam, mu, nu, n) == c


def test_pair_count_identity_factor():
    e = MarkedCycleShape.empty(2)
    for lam in enumerate_shapes(2, 5):
        assert pair_count(lam, e, lam, 6) == 1


def test_twist():
    assert twist_permutation(3, 2) == Permutation.parse("(1,4)(2,5)")
    for n, m in ((3, 2), (2, 2), (1, 3), (0, 2)):
        sigma = twist_permutation(n, m)
        assert [sigma(i) for i in range(1, m + 1)] == [n + i for i in range(1, m + 1)]
        assert {sigma(x) for x in range(m + 1, n + m + 1)} == set(range(1, n + 1))
    x = elem(5, ("(1,3)", 2), ("(2,4,5)", 1))
    assert twist(twist(x, 3, 2), 3, 2) == x
    one = GroupAlgebraElement.identity(5)
    assert twist(one, 3, 2) == one
    with pytest.raises(AmbientMismatch):
        twist(GroupAlgebraElement.identity(4), 3, 2)


def test_json_round_trip():
    x = elem(4, ("(1,2)", 10**30), ("(3,4)", -7))
    data = x.to_json()
    assert {t["perm"]: t["coeff"] for t in data["terms"]} == {"(1,2)": str(10**30), "(3,4)": "-7"}
    assert GroupAlgebraElement.from_json(data) == x


def test_twisted_centraliser_is_the_centraliser_of_the_first_n_points():
    n, m = 3, 2
    N = n + m
    for shape in enumerate_shapes(m, N):
        img = twist(class_sum(shape, N), n, m)
        for a in range(1, n):
            g = GroupAlgebraElement.from_perm(Permutation.transposition(a, a + 1), N)
            assert img * g == g * img
    # the Jucys-Murphy image L_{n+2} does not commute with (n+1, n+2)
    g = GroupAlgebraElement.from_perm(Permutation.transposition(n + 1, n + 2), N)
    assert jm(n + 2, N) * g != g * jm(n + 2, N)
