import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semisep.catalog import diagonal_algebra, group_algebra, matrix_algebra, morphism, truncated_polynomials
from semisep.classify import YES, classify_induction
from semisep.comodcoalg import check_coalgebra, counit_morphism, unit_coalgebra
from semisep.duoidal import additive, check_duoidal_propositions, diagonal_sum_coalgebra, prebraided, rebase
from semisep.finvec import FinVec
from semisep.fixtures import group_like_coalgebra, matrix_coalgebra
from semisep.modalg import check_algebra, unit_algebra, unit_morphism

V = FinVec("Q")
P = prebraided()
A = additive()
dims = st.integers(0, 2)


def _rows(m):
    return [list(r) for r in m.data.rows]


def additive_zeta_oracle(a, b, c, d):
    """(A+B)(C+D) -> AC + BD, written out on basis pairs."""
    rows = [[0] * ((a + b) * (c + d)) for _ in range(a * c + b * d)]
    for x in range(a + b):
        for y in range(c + d):
            col = x * (c + d) + y
            if x < a and y < c:
                rows[x * c + y][col] = 1
            elif x >= a and y >= c:
                rows[a * c + (x - a) * d + (y - c)][col] = 1
    return rows


def middle_swap_oracle(a, b, c, d):
    n = a * b * c * d
    rows = [[0] * n for _ in range(n)]
    for i in range(a):
        for j in range(b):
            for k in range(c):
                for m in range(d):
                    rows[((i * c + k) * b + j) * d + m][((i * b + j) * c + k) * d + m] = 1
    return rows


@given(dims, dims, dims, dims)
def test_zeta_matches_oracles(a, b, c, d):
    assert _rows(A.zeta(a, b, c, d)) == additive_zeta_oracle(a, b, c, d)
    assert _rows(P.zeta(a, b, c, d)) == middle_swap_oracle(a, b, c, d)


def test_zeta_small_cases():
    assert P.zeta(1, 1, 1, 1) == V.identity(1)
    assert _rows(A.zeta(1, 1, 1, 1)) == [[1, 0, 0, 0], [0, 0, 0, 1]]


def test_delta_and_varpi():
    assert P.delta == V.identity(1)
    assert P.delta_section() == V.identity(1)
    assert P.varpi_retraction() == V.identity(1)
    assert _rows(A.delta) == [[1], [1]]
    assert A.delta_section() is None
    assert A.varpi_retraction() is not None


@pytest.mark.parametrize("D", [P, A], ids=lambda D: D.name)
def test_coherence_holds(D):
    rng = random.Random(0)
    samples = [tuple(rng.randint(0, 2) for _ in range(6)) for _ in range(20)]
    assert D.check_coherence(samples=samples) == {}


def test_corrupted_interchange_reports_minimal_tuples():
    bad = additive(zeta_sign=-1).check_coherence()
    assert bad == {"assoc2": (0, 0, 1, 0, 0, 1), "unit1-left": (0, 1), "unit1-right": (0, 1),
                   "unit2-left": (1, 1)}


# combined algebras

def _product(Alg, i, j):
    n = Alg.carrier
    return list(Alg.mul.data.column(i * n + j))


ALGS = [group_algebra(V, 2), diagonal_algebra(V, 2), truncated_polynomials(V, 2), matrix_algebra(V, 2)]


@pytest.mark.parametrize("R,S", [(ALGS[0], ALGS[2]), (ALGS[1], ALGS[3]), (ALGS[2], ALGS[2])], ids=str)
def test_additive_bullet_is_product_algebra(R, S):
    RS = A.bullet_algebra(R, S)
    assert check_algebra(RS).ok
    r, s = R.carrier, S.carrier
    for i in range(r + s):
        for j in range(r + s):
            want = [0] * (r + s)
            if i < r and j < r:
                want[:r] = _product(R, i, j)
            elif i >= r and j >= r:
                want[r:] = _product(S, i - r, j - r)
            assert _product(RS, i, j) == want
    assert list(RS.unit.data.column(0)) == list(R.unit.data.column(0)) + list(S.unit.data.column(0))


@pytest.mark.parametrize("R,S", [(ALGS[0], ALGS[2]), (ALGS[1], ALGS[0]), (ALGS[2], ALGS[3])], ids=str)
def test_prebraided_bullet_is_tensor_algebra(R, S):
    RS = P.bullet_algebra(R, S)
    assert check_algebra(RS).ok
    r, s = R.carrier, S.carrier
    for i in range(r * s):
        for j in range(r * s):
            pr = _product(R, i // s, j // s)
            ps = _product(S, i % s, j % s)
            assert _product(RS, i, j) == [pr[k // s] * ps[k % s] for k in range(r * s)]


def test_unit_algebra_is_neutral():
    R = matrix_algebra(V, 2)
    RS = P.bullet_algebra(R, unit_algebra(V))
    assert RS.mul == R.mul and RS.unit == R.unit


def test_bullet_algebra_morphism_is_lawful():
    f = unit_morphism(matrix_algebra(V, 2))
    g = morphism(diagonal_algebra(V, 2), matrix_algebra(V, 2), [[1, 0], [0, 0], [0, 0], [1, 0]])
    for D in (P, A):
        h = D.bullet_algebra_morphism(f, g)
        assert check_algebra(h.src).ok and check_algebra(h.dst).ok
        assert h.dst.mul @ V.tensor(h.map, h.map) == h.map @ h.src.mul
        assert h.map @ h.src.unit == h.dst.unit


# combined coalgebras

def test_prebraided_group_likes_on_pairs():
    CD = P.circ_coalgebra(group_like_coalgebra(V, 2), group_like_coalgebra(V, 3))
    G6 = group_like_coalgebra(V, 6)
    assert CD.comul == G6.comul and CD.counit == G6.counit


def test_unit_coalgebra_is_neutral():
    C = matrix_coalgebra(V, 2)
    CD = P.circ_coalgebra(C, unit_coalgebra(V))
    assert CD.comul == C.comul and CD.counit == C.counit


@pytest.mark.parametrize("a,b", [(2, 1), (1, 3), (2, 2)])
def test_additive_circ_of_diagonal_sums(a, b):
    C, Dc = diagonal_sum_coalgebra(A, a), diagonal_sum_coalgebra(A, b)
    CD = A.circ_coalgebra(C, Dc)
    assert check_coalgebra(CD).ok
    assert CD.carrier == a * b
    assert CD.counit.data.shape == (0, a * b)


def test_counit_is_varpi_after_counits():
    for D, C1, C2 in ((P, matrix_coalgebra(V, 2), group_like_coalgebra(V, 2)),
                      (A, diagonal_sum_coalgebra(A, 2), diagonal_sum_coalgebra(A, 1))):
        CD = D.circ_coalgebra(C1, C2)
        e = D.varpi @ D.o(rebase(C1.counit, V), rebase(C2.counit, V))
        assert CD.counit.data == e.data


# propositions

def test_prebraided_unit_embeddings():
    u = unit_morphism(matrix_algebra(V, 2))
    res = check_duoidal_propositions(P, algebra_morphisms=[(u, u)])
    assert {r["property"] for r in res} == {"semiseparable", "separable"}
    assert all(r["hypothesis_met"] and r["holds"] and r["witness_valid"] for r in res)
    # the combined embedding into the 16-dimensional target classifies separable on its own
    h = P.bullet_algebra_morphism(u, u)
    assert h.dst.carrier == 16
    assert classify_induction(h).separable.status == YES


def test_prebraided_tensor_algebras_with_lambda():
    res = check_duoidal_propositions(P, algebras=[(group_algebra(V, 2), truncated_polynomials(V, 2))])
    assert res and all(r["hypothesis_met"] and r["holds"] and r["witness_valid"] for r in res)


def test_additive_mismatched_verdicts_gate_clauses():
    u = unit_morphism(matrix_algebra(V, 2))
    scalar = morphism(diagonal_algebra(V, 2), matrix_algebra(V, 2), [[1, 0], [0, 0], [0, 0], [1, 0]])
    assert classify_induction(u).separable.status == YES
    assert classify_induction(scalar).separable.status != YES
    res = check_duoidal_propositions(A, algebra_morphisms=[(u, scalar)])
    assert {r["property"] for r in res} <= {"semiseparable", "naturally_full"}
    assert all(r["holds"] for r in res)


def test_additive_delta_not_split_is_reported():
    res = check_duoidal_propositions(A, algebras=[(group_algebra(V, 2), truncated_polynomials(V, 2))])
    unmet = [r for r in res if not r["hypothesis_met"]]
    assert unmet and all(r["property"] != "separable" for r in unmet)
    assert all(r["holds"] for r in res if r["hypothesis_met"])


def test_prebraided_coalgebra_combinations():
    g2 = group_like_coalgebra(V, 2)
    eps = counit_morphism(g2)
    res = check_duoidal_propositions(P, coalgebra_morphisms=[(eps, eps)],
                                     coalgebras=[(g2, group_like_coalgebra(V, 1)), (g2, unit_coalgebra(V))])
    assert res and all(r["hypothesis_met"] and r["holds"] and r["witness_valid"] for r in res)
