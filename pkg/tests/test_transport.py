import random

import pytest

from helpers import invert, oracle_rank
from semisep.catalog import cyclic_multiplicative, monoid, monoid_morphism
from semisep.classify import PROPERTIES, YES, classify_induction, classify_tensor_functor_algebra
from semisep.comodcoalg import check_coalgebra
from semisep.corpus import generate_monoid_corpus
from semisep.errors import DirectionMismatch, NotStrong
from semisep.finset import FINSET, FinSetObject, enumerate_maps
from semisep.finvec import FinVec
from semisep.fixtures import group_like_coalgebra, set_coalgebra, set_mod_example
from semisep.linalg import Matrix
from semisep.modalg import (Module, check_algebra, check_module, induce, regular_module, restrict, unit_algebra,
                            unit_morphism)
from semisep.transport import (MonoidalFunctor, check_coherence, check_counit_preservation, check_preservation,
                               check_unit_preservation, linearization, matn_inclusion, phi_comparison,
                               transport_algebra, transport_algebra_morphism, transport_coalgebra, transport_module)

V = FinVec("Q")
L = linearization("Q")


def identity_functor(B):
    return MonoidalFunctor(B, B, lambda x: x, lambda f: f, phi2=lambda x, y: B.identity(B.tensor(x, y)),
                           phi0=lambda: B.identity(B.unit()), psi2=lambda x, y: B.identity(B.tensor(x, y)),
                           psi0=lambda: B.identity(B.unit()), name="Id", strong=True)


def test_identity_functor_leaves_algebras_alone():
    Z3, _, _ = cyclic_multiplicative(3)
    Id = identity_functor(FINSET)
    A = transport_algebra(Id, Z3)
    assert A.mul == Z3.mul and A.unit == Z3.unit
    M = regular_module(Z3, "right")
    assert transport_module(Id, M, A).action == M.action


def test_linearized_z3_structure_constants():
    Z3, elems, pos = cyclic_multiplicative(3)
    A = transport_algebra(L, Z3)
    assert check_algebra(A).ok and A.carrier == 3
    for i in range(3):
        for j in range(3):
            col = A.mul.data.column(i * 3 + j)
            k = pos[(elems[i] * elems[j]) % 3]
            assert list(col) == [int(r == k) for r in range(3)]


def test_linearized_monoid_morphism_sends_basis_to_basis():
    ex = set_mod_example()
    phi = ex["phi"]
    f = transport_algebra_morphism(L, phi)
    for i, j in enumerate(phi.map.data):
        assert list(f.map.data.column(i)) == [int(r == j) for r in range(phi.dst.carrier.size)]


def test_linearized_action_is_permutation_like():
    Z3, _, _ = cyclic_multiplicative(3)
    M = regular_module(Z3, "right")
    FM = transport_module(L, M)
    assert check_module(FM).ok
    n = M.carrier.size
    for c in range(n * 3):
        col = FM.action.data.column(c)
        assert sorted(col) == [0] * (n - 1) + [1]
        assert col.index(1) == M.action.data[c]


def test_trivial_module_over_unit_algebra():
    one = unit_algebra(V)
    X = Module(one, 2, V.identity(2), "right")
    Id = identity_functor(V)
    assert transport_module(Id, X).action == V.identity(2)


def test_direction_mismatch():
    colax_only = MonoidalFunctor(V, V, lambda x: x, lambda f: f, psi2=lambda x, y: V.identity(x * y),
                                 psi0=lambda: V.identity(1))
    with pytest.raises(DirectionMismatch):
        transport_algebra(colax_only, unit_algebra(V))
    with pytest.raises(NotStrong):
        phi_comparison(matn_inclusion(2), unit_morphism(unit_algebra(V)), regular_module(unit_algebra(V), "right"))


def test_mat2_counit_not_surjective():
    C = transport_coalgebra(matn_inclusion(2), group_like_coalgebra(V, 1))
    assert check_coalgebra(C).ok
    blocks = C.counit.data
    # the (2,2) block maps the zero space onto k: not surjective
    assert blocks[1][1].shape == (1, 0)


def test_linearized_set_coalgebra_is_group_like():
    S = set_coalgebra(FinSetObject(["a", "b", "c"]))
    C = transport_coalgebra(L, S)
    assert check_coalgebra(C).ok
    G = group_like_coalgebra(V, 3)
    assert C.comul == G.comul and C.counit == G.counit


def test_linearization_is_faithful():
    for n, m in ((2, 2), (3, 3), (2, 4), (0, 2)):
        maps = list(enumerate_maps(FinSetObject.of_size(n), FinSetObject.of_size(m)))
        images = {L(f).data for f in maps}
        assert len(images) == len(maps) == m ** n


def _random_vec_map(rng, a, b):
    return V.mor(Matrix(V.field, [[rng.randint(-2, 2) for _ in range(a)] for _ in range(b)], b, a), a, b)


def test_coherence_linearization():
    objs = [FinSetObject.of_size(n) for n in range(4)]
    assert len(objs) ** 3 >= 30
    maps = [FINSET.mor(objs[2], objs[3], [0, 2]), FINSET.mor(objs[3], objs[2], [1, 1, 0]),
            FINSET.identity(objs[2]), FINSET.mor(objs[0], objs[1], [])]
    assert check_coherence(L, objs, maps) == {"naturality": True, "associativity": True, "unitality": True}


def test_coherence_mat2_inclusion():
    rng = random.Random(5)
    F = matn_inclusion(2)
    maps = [_random_vec_map(rng, rng.randint(0, 2), rng.randint(0, 2)) for _ in range(5)]
    assert check_coherence(F, [0, 1, 2, 3], maps) == {"naturality": True, "associativity": True,
                                                     "unitality": True}


def test_coherence_detects_broken_phi2():
    bad = MonoidalFunctor(V, V, lambda x: x, lambda f: f, phi2=lambda x, y: V.scale(2, V.identity(x * y)),
                          phi0=lambda: V.identity(1))
    out = check_coherence(bad, [1, 2], [V.identity(1)])
    assert not out["unitality"]


# comparison isomorphism

def _phi_instances():
    monoids, morphisms = generate_monoid_corpus(3)
    out = []
    for h in morphisms:
        if h.src.size < 2:
            continue
        R = monoid([list(r) for r in h.src.table], name=h.src.name)
        S = monoid([list(r) for r in h.dst.table], name=h.dst.name)
        phi = monoid_morphism(R, S, list(h.map), name=h.name)
        out.append((phi, regular_module(R, "right")))
        out.append((phi, restrict(phi, regular_module(S, "right"))))
    return out


PHI_INSTANCES = _phi_instances()


def test_phi_identity_z3():
    Z3, _, _ = cyclic_multiplicative(3)
    ident = monoid_morphism(Z3, Z3, [0, 1, 2])
    r = phi_comparison(L, ident, regular_module(Z3, "right"))
    Phi = r["Phi"].data
    assert Phi.shape == (3, 3) and oracle_rank([list(x) for x in Phi.rows], 3) == 3
    assert r["iso"] and r["module_map"]
    assert [list(x) for x in r["Phi_inv"].data.rows] == invert([list(x) for x in Phi.rows], None)


def test_phi_over_unit_monoid_is_phi2():
    triv = monoid([[0]])
    ident = monoid_morphism(triv, triv, [0])
    r = phi_comparison(L, ident, regular_module(triv, "right"))
    assert r["Phi"] == V.identity(1)


def test_phi_instances_satisfy_defining_equation():
    assert len(PHI_INSTANCES) >= 20
    for phi, X in PHI_INSTANCES:
        r = phi_comparison(L, phi, X)
        assert r["iso"] and r["module_map"], phi.name
        FR = transport_algebra(L, phi.src)
        FS = transport_algebra(L, phi.dst)
        src = induce(transport_algebra_morphism(L, phi, FR, FS), transport_module(L, X, FR))
        tgt = induce(phi, X)
        lhs = r["Phi"] @ src.origin.q
        rhs = L(tgt.origin.q) @ L.phi2(X.carrier, phi.dst.carrier)
        assert lhs == rhs


# preservation

def test_preservation_mod3():
    ex = set_mod_example()
    rep = classify_induction(ex["phi"])
    out = check_preservation(L, ex["phi"], rep)
    for p in PROPERTIES:
        if rep[p].status == YES:
            assert out["properties"][p]["holds"], p
    assert out["target_report"].semiseparable.status == YES


def test_unit_preservation_linearization():
    Z6, _, _ = cyclic_multiplicative(6)
    src = classify_tensor_functor_algebra(Z6)
    out = check_unit_preservation(L, Z6, src)
    assert src.semiseparable.status == YES
    entry = out["properties"]["semiseparable"]
    assert entry["hypothesis_met"] and entry["holds"]


def test_counit_preservation_mat2():
    out = check_counit_preservation(matn_inclusion(2), group_like_coalgebra(V, 1))
    props = out["properties"]
    assert props["semiseparable"]["hypothesis_met"] and props["semiseparable"]["holds"]
    assert props["naturally_full"]["holds"]
    assert not props["separable"]["hypothesis_met"]
    assert out["target_report"].separable.status == "no"
