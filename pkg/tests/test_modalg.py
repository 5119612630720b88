import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import oracle_rank, oracle_solve
from samples import vec_morphisms
from semisep.catalog import (cyclic_multiplicative, diagonal_algebra, group_algebra, matrix_algebra, monoid,
                             monoid_morphism, morphism)
from semisep.errors import LawViolation
from semisep.finset import FINSET
from semisep.finvec import FinVec
from semisep.fixtures import image_example, set_mod_example
from semisep.linalg import Matrix
from semisep.modalg import (Algebra, Module, adjunction_counit, adjunction_unit, canonical_isos, check_algebra,
                            check_module, image_factorization, induce, induce_morphism, is_module_morphism,
                            left_module_along, regular_module, restrict, right_module_along, tensor_over,
                            unit_algebra, unit_morphism)

V = FinVec("Q")
kG = group_algebra(V, 2)
SAMPLES = vec_morphisms("Q")


def test_group_algebra_laws():
    assert check_algebra(kG).ok


def test_broken_associativity_is_reported():
    # k[Z/3] with a b and b a swapped to 0 and 1: (a a) a = b a != a b = a (a a)
    good = {(0, 0): 0, (0, 1): 1, (0, 2): 2, (1, 0): 1, (1, 1): 2, (1, 2): 0, (2, 0): 2, (2, 1): 0, (2, 2): 1}
    bad = dict(good)
    bad[(1, 2)] = None
    e = lambda k: [int(i == k) for i in range(3)] if k is not None else [0, 0, 0]  # noqa: E731
    for table, ok in ((good, True), (bad, False)):
        cols = [e(table[(i, j)]) for i in range(3) for j in range(3)]
        A = Algebra(V, 3, V.mor(Matrix.from_columns(V.field, cols, 3)), V.mor([[1], [0], [0]]), check=False)
        rep = check_algebra(A)
        assert rep.ok == ok
    assert rep.failed() == ["associativity"]
    with pytest.raises(LawViolation):
        rep.raise_if_failed()


def test_multiplicative_z6_against_table():
    Z6, elems, pos = cyclic_multiplicative(6)
    assert check_algebra(Z6).ok
    n = 6
    t = Z6.mul.data
    for a in range(n):
        for b in range(n):
            for c in range(n):
                assert t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]]
            assert elems[t[a * n + b]] == (elems[a] * elems[b]) % 6


def test_module_laws_and_negative_control():
    M = regular_module(kG, "right")
    assert check_module(M).ok
    bad = Module(kG, 2, V.mor([[1, 0, 0, 0], [0, 1, 0, 0]]), "right", check=False)
    assert not check_module(bad).ok


# tensor over R

def test_tensor_over_regular_is_m():
    M = regular_module(kG, "right")
    T = tensor_over(M, regular_module(kG, "left"))
    assert T.obj == 2


def test_tensor_over_unit_algebra_is_plain_tensor():
    one = unit_algebra(V)
    M = Module(one, 3, V.identity(3), "right")
    X = Module(one, 2, V.identity(2), "left")
    T = tensor_over(M, X)
    assert T.obj == 6 and T.q == V.identity(6)


def test_tensor_over_group_algebra_dimension_by_relations():
    # relations m g (x) x - m (x) g x for m, x, g in Z/2, written out with group arithmetic
    rel = []
    for m in range(2):
        for g in range(2):
            for x in range(2):
                row = [0] * 4
                row[((m + g) % 2) * 2 + x] += 1
                row[m * 2 + (g + x) % 2] -= 1
                rel.append(row)
    assert len(rel) == 8
    expected = 4 - oracle_rank(rel, 4)
    M = regular_module(kG, "right")
    assert tensor_over(M, regular_module(kG, "left")).obj == expected == 2


def test_factor_matches_independent_solve():
    M = regular_module(kG, "right")
    T = tensor_over(M, regular_module(kG, "left"))
    h = kG.mul
    lift = T.factor(h)
    q = T.q.data
    qt = [list(r) for r in q.T.rows]
    for i, row in enumerate(h.data.rows):
        ok, x = oracle_solve(qt, list(row), q.nrows)
        assert ok
        assert list(lift.data.rows[i]) == x


# canonical isomorphisms

def test_upsilon_for_group_algebra():
    M = regular_module(kG, "right")
    fwd, inv, ok = canonical_isos(M=M)["upsilon"]
    assert ok and fwd.data.shape == (2, 2) and V.is_iso(fwd)


def test_upsilon_for_multiplicative_z6():
    Z6, _, _ = cyclic_multiplicative(6)
    isos = canonical_isos(M=regular_module(Z6, "right"), Y=regular_module(Z6, "left"), X=FINSET.unit())
    for name, (fwd, inv, ok) in isos.items():
        assert ok, name
    fwd = isos["upsilon"][0]
    assert fwd.dom.size == 6 and FINSET.is_iso(fwd)


@pytest.mark.parametrize("f", SAMPLES, ids=lambda f: f.name or "u")
def test_upsilon_inverses_exact(f):
    for A in (f.src, f.dst):
        isos = canonical_isos(M=regular_module(A, "right"), Y=regular_module(A, "left"), X=2)
        assert all(ok for _, _, ok in isos.values())
    isos = canonical_isos(M=right_module_along(f), Y=left_module_along(f))
    assert all(ok for _, _, ok in isos.values())


# induction and restriction

def test_induce_along_identity():
    ident = morphism(kG, kG, [[1, 0], [0, 1]])
    X = regular_module(kG, "right")
    IX = induce(ident, X)
    assert IX.carrier == 2
    fwd, _, _ = canonical_isos(M=X)["upsilon"]
    assert is_module_morphism(fwd, IX, X)


def test_induce_along_unit_is_tensor_with_a():
    M2 = matrix_algebra(V, 2)
    u = unit_morphism(M2)
    X = Module(u.src, 1, V.identity(1), "right")
    IX = induce(u, X)
    assert IX.carrier == 4
    assert IX.action == V.tensor(V.identity(1), M2.mul)
    X3 = Module(u.src, 3, V.identity(3), "right")
    assert induce(u, X3).action == V.tensor(V.identity(3), M2.mul)


def test_unit_of_adjunction_for_group_algebra_unit():
    u = unit_morphism(kG)
    X = Module(u.src, 1, V.identity(1), "right")
    assert adjunction_unit(u, X).data == Matrix(V.field, [[1], [0]])


def test_eta_of_regular_module_recovers_phi():
    for f in SAMPLES:
        R = regular_module(f.src, "right")
        eta = adjunction_unit(f, R)
        up = canonical_isos(Y=left_module_along(f))["upsilon_prime"][0]
        assert up @ eta == f.map, f.name


def test_restrict():
    ident = morphism(kG, kG, [[1, 0], [0, 1]])
    N = regular_module(kG, "right")
    assert restrict(ident, N).action == N.action
    u = unit_morphism(kG)
    R = restrict(u, N)
    assert R.carrier == 2 and R.action == V.identity(2)
    ex = set_mod_example()
    phi, S = ex["phi"], ex["S"]
    Z3 = restrict(phi, regular_module(S, "right"))
    Rn = ex["R"].carrier.size
    for s in range(3):
        for r in range(Rn):
            assert Z3.action.data[s * Rn + r] == S.mul.data[s * 3 + phi.map.data[r]]
    assert check_module(Z3).ok


def _right_mult_maps(A):
    """Left multiplications ``x -> a x`` are right-module endomorphisms of the regular module."""
    B = A.backend
    if getattr(B, "linear", False):
        return [A.mul @ B.tensor(b, A.id) for b in B.hom_basis(B.unit(), A.carrier)]
    return [A.mul @ B.tensor(FINSET.mor(B.unit(), A.carrier, [a]), A.id) for a in range(A.carrier.size)]


def _modules(f):
    return [regular_module(f.src, "right"), restrict(f, regular_module(f.dst, "right"))]


SET_SAMPLES = []
for _n in (2, 3, 4):
    _Z, _e, _ = cyclic_multiplicative(_n)
    SET_SAMPLES.append(monoid_morphism(_Z, _Z, list(range(_n)), name=f"id Z/{_n}"))
SET_SAMPLES.append(set_mod_example()["phi"])
_Z2, _, _ = cyclic_multiplicative(2)
_triv = monoid([[0]], name="1")
SET_SAMPLES.append(monoid_morphism(_triv, _Z2, [0], name="unit Z/2"))
SET_SAMPLES.append(monoid_morphism(_Z2, _triv, [0, 0], name="Z/2 to 1"))


@settings(max_examples=60)
@given(st.sampled_from(SAMPLES + SET_SAMPLES), st.integers(0, 1))
def test_adjunction_triangles(f, which):
    B = f.backend
    X = _modules(f)[which]
    IX = induce(f, X)
    eta = adjunction_unit(f, X)
    eps = adjunction_counit(f, IX)
    back = induce_morphism(f, eta, X, restrict(f, IX))
    assert eps @ back == B.identity(IX.carrier)
    N = regular_module(f.dst, "right")
    assert adjunction_counit(f, N) @ adjunction_unit(f, restrict(f, N)) == B.identity(N.carrier)


@settings(max_examples=60)
@given(st.sampled_from(SAMPLES + SET_SAMPLES), st.data())
def test_induce_is_functorial(f, data):
    X = regular_module(f.src, "right")
    maps = _right_mult_maps(f.src)
    a = data.draw(st.sampled_from(maps))
    b = data.draw(st.sampled_from(maps))
    assert is_module_morphism(a, X, X)
    lhs = induce_morphism(f, b @ a, X, X)
    rhs = induce_morphism(f, b, X, X) @ induce_morphism(f, a, X, X)
    assert lhs == rhs


# image factorization

def test_image_of_scalar_embedding():
    ex = image_example()
    Im, psi, phi = image_factorization(ex["f"])
    assert Im.carrier == 1
    assert Im.mul == V.identity(1) and Im.unit == V.identity(1)
    assert phi.map @ psi.map == ex["f"].map


def test_image_of_mono_and_epi():
    k2 = diagonal_algebra(V, 2)
    M2 = matrix_algebra(V, 2)
    mono = morphism(k2, M2, [[1, 0], [0, 0], [0, 0], [0, 1]])
    Im, psi, phi = image_factorization(mono)
    assert Im.carrier == 2 and V.is_iso(psi.map)
    epi = morphism(kG, group_algebra(V, 1), [[1, 1]])
    Im, psi, phi = image_factorization(epi)
    assert Im.carrier == 1 and V.is_iso(phi.map)


@pytest.mark.parametrize("f", SAMPLES, ids=lambda f: f.name or "u")
def test_image_factorization_composes(f):
    Im, psi, phi = image_factorization(f)
    assert phi.map @ psi.map == f.map
    assert check_algebra(Im).ok
    assert V.is_epi(psi.map) and V.is_mono(phi.map)
