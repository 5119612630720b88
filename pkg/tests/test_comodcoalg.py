import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import oracle_rank
from semisep.catalog import algebra_from_products
from semisep.comodcoalg import (Coalgebra, CoalgebraMorphism, Comodule, canonical_lambda, check_coalgebra,
                                check_coalgebra_morphism, check_comodule, coadjunction_counit, coadjunction_unit,
                                coinduce, coinduce_morphism, corestrict, cotensor, counit_morphism,
                                left_comodule_along, regular_comodule, right_comodule_along, unit_coalgebra)
from semisep.finset import FINSET, FinSetObject
from semisep.finvec import FinVec
from semisep.fixtures import group_like_coalgebra, matrix_coalgebra, set_coalgebra
from semisep.linalg import Matrix
from semisep.modalg import check_algebra, regular_module, tensor_over

V = FinVec("Q")
G2 = group_like_coalgebra(V, 2)


def test_group_like_laws():
    assert check_coalgebra(G2).ok
    assert check_coalgebra(matrix_coalgebra(V, 2)).ok


def test_broken_comultiplication_fails():
    # dual of k[Z/3] with the product a b removed: counital but not coassociative
    table = {(i, j): (i + j) % 3 for i in range(3) for j in range(3)}
    del table[(1, 2)]
    cols = [[int(table.get((i, j)) == k) for i in range(3) for j in range(3)] for k in range(3)]
    d = V.mor(Matrix.from_columns(V.field, cols, 9))
    rep = check_coalgebra(Coalgebra(V, 3, d, V.mor([[1, 0, 0]]), check=False))
    assert rep.failed() == ["coassociativity"]


@given(st.integers(0, 4), st.integers(1, 4), st.data())
def test_every_set_map_is_a_coalgebra_morphism(n, m, data):
    C, D = set_coalgebra(FinSetObject.of_size(n)), set_coalgebra(FinSetObject.of_size(m))
    table = [data.draw(st.integers(0, m - 1)) for _ in range(n)]
    f = CoalgebraMorphism(C, D, FINSET.mor(C.carrier, D.carrier, table), check=False)
    assert check_coalgebra_morphism(f).ok


# cotensor

def test_cotensor_with_regular_is_v():
    T = cotensor(regular_comodule(G2, "right"), regular_comodule(G2, "left"))
    assert T.obj == 2


def test_cotensor_over_unit_is_tensor():
    one = unit_coalgebra(V)
    X = Comodule(one, 3, V.identity(3), "right")
    Y = Comodule(one, 2, V.identity(2), "left")
    T = cotensor(X, Y)
    assert T.obj == 6 and T.e == V.identity(6)


def test_cotensor_dimension_by_relations():
    # V box W inside V (x) W: rows (rho (x) id - id (x) lambda) for group-likes, i.e.
    # coefficient of e_a e_c e_b is [a == c] x_ab - [c == b] x_ab
    rows = []
    for a in range(2):
        for c in range(2):
            for b in range(2):
                r = [0] * 4
                r[a * 2 + b] += int(a == c) - int(c == b)
                rows.append(r)
    assert len(rows) == 8
    assert cotensor(regular_comodule(G2, "right"), regular_comodule(G2, "left")).obj == 4 - oracle_rank(rows, 4)


def test_lambda_isomorphisms():
    one = unit_coalgebra(V)
    X = Comodule(one, 2, V.identity(2), "right")
    fwd, inv, ok = canonical_lambda(M=X)["lambda"]
    assert ok and fwd == V.identity(2)
    for C in (G2, matrix_coalgebra(V, 2)):
        out = canonical_lambda(M=regular_comodule(C, "right"), Y=regular_comodule(C, "left"))
        for fwd, inv, ok in out.values():
            assert ok and V.is_iso(fwd)
    S3 = set_coalgebra(FinSetObject(["a", "b", "c"]))
    out = canonical_lambda(M=regular_comodule(S3, "right"), Y=regular_comodule(S3, "left"))
    assert all(ok for _, _, ok in out.values())
    assert FINSET.is_iso(out["lambda"][0])


# coinduction

def test_coinduce_along_identity():
    ident = CoalgebraMorphism(G2, G2, G2.id)
    M = regular_comodule(G2, "right")
    CM = coinduce(ident, M)
    assert CM.carrier == 2
    assert coadjunction_counit(ident, M) == canonical_lambda(M=M)["lambda"][1]


def test_coinduce_along_counit_is_tensor():
    eps = counit_morphism(G2)
    X = Comodule(eps.dst, 3, V.identity(3), "right")
    CX = coinduce(eps, X)
    assert CX.carrier == 6
    assert CX.coaction == V.tensor(V.identity(3), G2.comul)
    assert coadjunction_counit(eps, X) == V.tensor(V.identity(3), G2.counit)


def test_coinduce_set_surjection():
    C = set_coalgebra(FinSetObject(["a", "b", "c"]))
    D = set_coalgebra(FinSetObject(["x", "y"]))
    psi = CoalgebraMorphism(C, D, FINSET.mor(C.carrier, D.carrier, [0, 0, 1]))
    CM = coinduce(psi, regular_comodule(D, "right"))
    # pairs (m, c) with m = psi(c)
    assert CM.carrier.size == sum(1 for m in range(2) for c in range(3) if psi.map.data[c] == m) == 3


def test_coadjunction_unit_group_like():
    ident = CoalgebraMorphism(G2, G2, G2.id)
    eta = coadjunction_unit(ident, regular_comodule(G2, "right"))
    assert eta.data.shape == (2, 2) and V.is_iso(eta)


def _samples():
    out = []
    k = group_like_coalgebra(V, 1)
    out.append(counit_morphism(G2))
    out.append(CoalgebraMorphism(G2, G2, V.mor([[0, 1], [1, 0]])))
    out.append(CoalgebraMorphism(group_like_coalgebra(V, 3), G2, V.mor([[1, 1, 0], [0, 0, 1]])))
    out.append(CoalgebraMorphism(k, G2, V.mor([[1], [0]])))
    for n, m, t in ((3, 2, [0, 0, 1]), (2, 2, [1, 0]), (1, 3, [2]), (3, 1, [0, 0, 0])):
        C, D = set_coalgebra(FinSetObject.of_size(n)), set_coalgebra(FinSetObject.of_size(m))
        out.append(CoalgebraMorphism(C, D, FINSET.mor(C.carrier, D.carrier, t)))
    return out


SAMPLES = _samples()


@settings(max_examples=50)
@given(st.sampled_from(SAMPLES))
def test_coadjunction_triangles(psi):
    B = psi.backend
    N = regular_comodule(psi.src, "right")
    # eps_{corestrict N} after corestrict(eta_N) is the identity
    assert coadjunction_counit(psi, corestrict(psi, N)) @ coadjunction_unit(psi, N) == B.identity(N.carrier)
    M = regular_comodule(psi.dst, "right")
    CM = coinduce(psi, M)
    eta = coadjunction_unit(psi, CM)
    eps = coadjunction_counit(psi, M)
    back = coinduce_morphism(psi, eps, corestrict(psi, CM), M)
    assert back @ eta == B.identity(CM.carrier)


@pytest.mark.parametrize("psi", SAMPLES, ids=str)
def test_along_comodules_are_lawful(psi):
    assert check_comodule(left_comodule_along(psi)).ok
    assert check_comodule(right_comodule_along(psi)).ok
    out = canonical_lambda(M=right_comodule_along(psi), Y=left_comodule_along(psi))
    assert all(ok for _, _, ok in out.values())


def _dual_algebra(C):
    """Linear dual of a FinVec coalgebra: structure constants transposed."""
    n = C.carrier
    d = C.comul.data

    def prod(i, j):
        return [d[i * n + j, k] for k in range(n)]

    return algebra_from_products(V, n, prod, list(C.counit.data.rows[0]), name=f"{C.name}*")


@pytest.mark.parametrize("C", [G2, matrix_coalgebra(V, 2), group_like_coalgebra(V, 3)], ids=str)
def test_dual_algebra_and_dimensions(C):
    A = _dual_algebra(C)
    assert check_algebra(A).ok
    box = cotensor(regular_comodule(C, "right"), regular_comodule(C, "left")).obj
    tens = tensor_over(regular_module(A, "right"), regular_module(A, "left")).obj
    assert box == tens == C.carrier
