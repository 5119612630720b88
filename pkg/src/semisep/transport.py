"""Monoidal functors and the transport of (co)algebras along them."""

from .classify import (PROPERTIES, YES, classify_induction, classify_tensor_functor_algebra,
                       classify_tensor_functor_coalgebra, induction_bimodule_equations, induction_conditions)
from .comodcoalg import Coalgebra, CoalgebraMorphism
from .errors import DirectionMismatch, HypothesisNotMet, NotStrong
from .finset import FINSET
from .finvec import FinVec
from .linalg import Matrix
from .matn import Matn, MatnObject
from .modalg import Algebra, AlgebraMorphism, Module, induce
from .witness import hom_space


class MonoidalFunctor:
    """``phi2: FX FY -> F(XY)``, ``phi0: 1 -> F1`` (lax) and/or ``psi2``, ``psi0`` (colax)."""

    def __init__(self, source, target, on_objects, on_morphisms, phi2=None, phi0=None, psi2=None, psi0=None,
                 name="F", strong=False):
        self.source = source
        self.target = target
        self.on_objects = on_objects
        self.on_morphisms = on_morphisms
        self.phi2 = phi2
        self.phi0 = phi0
        self.psi2 = psi2
        self.psi0 = psi0
        self.name = name
        self.strong = strong

    @property
    def is_lax(self):
        return self.phi2 is not None and self.phi0 is not None

    @property
    def is_colax(self):
        return self.psi2 is not None and self.psi0 is not None

    @property
    def is_strong(self):
        """Declared strong, with ``psi`` inverse to ``phi`` (checked on the unit)."""
        if not (self.strong and self.is_lax and self.is_colax):
            return False
        T = self.target
        p0, q0 = self.phi0(), self.psi0()
        return p0 @ q0 == T.identity(p0.cod) and q0 @ p0 == T.identity(q0.cod)

    def __call__(self, x):
        from .category import Morphism

        if isinstance(x, Morphism):
            self.source.own(x)
            return self.on_morphisms(x)
        return self.on_objects(x)

    def kind(self):
        if self.is_strong:
            return "strong"
        return "+".join(k for k, ok in (("lax", self.is_lax), ("colax", self.is_colax)) if ok)


def linearization(field="Q"):
    """FinSet -> FinVec, a set goes to the space with that basis; strong with identity structure maps."""
    V = FinVec(field)
    F = V.field

    def on_mor(f):
        rows = [[0] * f.dom.size for _ in range(f.cod.size)]
        for i, j in enumerate(f.data):
            rows[j][i] = 1
        return V.mor(Matrix._raw(F, tuple(map(tuple, rows)), f.cod.size, f.dom.size))

    def phi2(x, y):
        return V.identity(x.size * y.size)

    def phi0():
        return V.identity(1)

    return MonoidalFunctor(FINSET, V, lambda x: x.size, on_mor, phi2=phi2, phi0=phi0, psi2=phi2, psi0=phi0,
                           name=f"linearization[{F.name}]", strong=True)


def matn_inclusion(n=2, field="Q"):
    """FinVec -> Mat_n placing V at entry (1,1).

    Colax with identity ``psi2`` and ``psi0: F(k) -> kI_n`` the inclusion of the
    first diagonal entry; lax with the projection ``phi0``.  Not strong for n > 1.
    """
    V = FinVec(field)
    M = Matn(n, field)
    F = V.field

    def obj(d):
        return MatnObject(tuple(tuple(d if (i, j) == (0, 0) else 0 for j in range(n)) for i in range(n)))

    def on_mor(f):
        blocks = [[f.data if (i, j) == (0, 0) else Matrix.zeros(F, 0, 0) for j in range(n)] for i in range(n)]
        return M.mor(obj(f.dom), obj(f.cod), blocks)

    def two(x, y):
        return M.identity(obj(x * y))

    def psi0():
        blocks = [[Matrix.identity(F, 1) if (i, j) == (0, 0) else Matrix.zeros(F, 1 if i == j else 0, 0)
                   for j in range(n)] for i in range(n)]
        return M.mor(obj(1), M.unit(), blocks)

    def phi0():
        p = psi0()
        return M.mor(M.unit(), obj(1), [[p.data[i][j].T for j in range(n)] for i in range(n)])

    return MonoidalFunctor(V, M, obj, on_mor, phi2=two, phi0=phi0, psi2=two, psi0=psi0, name=f"Mat_{n} inclusion")


# transport


def transport_algebra(F, A):
    if not F.is_lax:
        raise DirectionMismatch("algebras transport along lax functors")
    T = F.target
    X = A.carrier
    return Algebra(T, F(X), F(A.mul) @ F.phi2(X, X), F(A.unit) @ F.phi0(), name=f"{F.name}({A.name or 'A'})")


def transport_algebra_morphism(F, f, FA=None, FB=None):
    FA = FA or transport_algebra(F, f.src)
    FB = FB or transport_algebra(F, f.dst)
    return AlgebraMorphism(FA, FB, F(f.map), name=f"{F.name}({f.name or 'f'})")


def transport_module(F, M, FA=None):
    if not F.is_lax:
        raise DirectionMismatch("modules transport along lax functors")
    FA = FA or transport_algebra(F, M.algebra)
    if M.side == "right":
        act = F(M.action) @ F.phi2(M.carrier, M.algebra.carrier)
    else:
        act = F(M.action) @ F.phi2(M.algebra.carrier, M.carrier)
    return Module(FA, F(M.carrier), act, M.side, name=f"{F.name}({M.name or 'M'})")


def transport_coalgebra(F, C):
    if not F.is_colax:
        raise DirectionMismatch("coalgebras transport along colax functors")
    X = C.carrier
    return Coalgebra(F.target, F(X), F.psi2(X, X) @ F(C.comul), F.psi0() @ F(C.counit),
                     name=f"{F.name}({C.name or 'C'})")


def transport_coalgebra_morphism(F, f, FC=None, FD=None):
    FC = FC or transport_coalgebra(F, f.src)
    FD = FD or transport_coalgebra(F, f.dst)
    return CoalgebraMorphism(FC, FD, F(f.map), name=f"{F.name}({f.name or 'f'})")


def phi_comparison(F, phi, X):
    """``Phi: FX (x)_FR FS -> F(X (x)_R S)`` with ``Phi q = F(q) phi2`` and its inverse."""
    if not F.is_strong:
        raise NotStrong(f"{F.name} is not strong monoidal")
    T = F.target
    FR = transport_algebra(F, phi.src)
    FS = transport_algebra(F, phi.dst)
    Fphi = transport_algebra_morphism(F, phi, FR, FS)
    FX = transport_module(F, X, FR)
    src = induce(Fphi, FX)
    tgt = induce(phi, X)
    q_src, q_tgt = src.origin.q, tgt.origin.q
    Phi = src.origin.factor(F(q_tgt) @ F.phi2(X.carrier, phi.dst.carrier))
    Phi_inv = T.factor_through_epi(q_src @ F.psi2(X.carrier, phi.dst.carrier), F(q_tgt))
    Ftgt = transport_module(F, tgt, FS)
    module_map = Phi @ src.action == Ftgt.action @ T.tensor(Phi, FS.id)
    iso = Phi @ Phi_inv == T.identity(Phi.cod) and Phi_inv @ Phi == T.identity(Phi.dom)
    return {"Phi": Phi, "Phi_inv": Phi_inv, "iso": iso, "module_map": module_map}


def check_coherence(F, objects, morphisms=()):
    """Coherence and naturality of the structure maps on sample objects/morphisms."""
    S, T = F.source, F.target
    out = {}
    ok = True
    for f in morphisms:
        for g in morphisms:
            if F.is_lax:
                ok &= F.phi2(f.cod, g.cod) @ T.tensor(F(f), F(g)) == F(S.tensor(f, g)) @ F.phi2(f.dom, g.dom)
            if F.is_colax:
                ok &= F.psi2(f.cod, g.cod) @ F(S.tensor(f, g)) == T.tensor(F(f), F(g)) @ F.psi2(f.dom, g.dom)
        ok &= F(S.identity(f.dom)) == T.identity(F(f.dom))
        for g in morphisms:
            if g.dom == f.cod:
                ok &= F(g @ f) == F(g) @ F(f)
    out["naturality"] = bool(ok)
    assoc = unit = True
    for x in objects:
        for y in objects:
            for z in objects:
                if F.is_lax:
                    lhs = F(S.associator(x, y, z)) @ F.phi2(S.tensor(x, y), z) @ T.tensor(F.phi2(x, y), T.identity(F(z)))
                    rhs = (F.phi2(x, S.tensor(y, z)) @ T.tensor(T.identity(F(x)), F.phi2(y, z))
                           @ T.associator(F(x), F(y), F(z)))
                    assoc &= lhs == rhs
                if F.is_colax:
                    lhs = T.associator(F(x), F(y), F(z)) @ T.tensor(F.psi2(x, y), T.identity(F(z))) @ F.psi2(
                        S.tensor(x, y), z)
                    rhs = T.tensor(T.identity(F(x)), F.psi2(y, z)) @ F.psi2(x, S.tensor(y, z)) @ F(
                        S.associator(x, y, z))
                    assoc &= lhs == rhs
        one = S.unit()
        if F.is_lax:
            unit &= F(S.left_unitor(x)) @ F.phi2(one, x) @ T.tensor(F.phi0(), T.identity(F(x))) == T.left_unitor(F(x))
            unit &= F(S.right_unitor(x)) @ F.phi2(x, one) @ T.tensor(T.identity(F(x)), F.phi0()) == T.right_unitor(
                F(x))
        if F.is_colax:
            unit &= T.left_unitor(F(x)) @ T.tensor(F.psi0(), T.identity(F(x))) @ F.psi2(one, x) == F(S.left_unitor(x))
            unit &= T.right_unitor(F(x)) @ T.tensor(T.identity(F(x)), F.psi0()) @ F.psi2(x, one) == F(
                S.right_unitor(x))
    out["associativity"] = bool(assoc)
    out["unitality"] = bool(unit)
    return out


def check_preservation(F, phi, source_report, cap=None):
    """Positive verdicts for induction along ``phi`` carry over to ``F(phi)``.

    Needs a lax ``F`` and a source backend whose unit is a tensor generator.
    The transported witness ``F(E)`` is re-checked in the target.
    """
    if not F.is_lax:
        raise DirectionMismatch("preservation of induction needs a lax functor")
    if not F.source.caps.unit_is_left_tensor_generator:
        raise HypothesisNotMet("source unit is not a tensor generator")
    Fphi = transport_algebra_morphism(F, phi)
    kwargs = {} if cap is None else {"cap": cap}
    target = classify_induction(Fphi, **kwargs)
    eqs = induction_bimodule_equations(Fphi)
    conds = induction_conditions(Fphi)
    out = {}
    for p in PROPERTIES:
        src = source_report[p]
        entry = {"source": src.status, "target": target[p].status}
        if src.status == YES:
            FE = F(src.witness)
            entry["transported_witness_valid"] = all(l == r for l, r in (e(FE) for e in eqs + [conds[p]]))
            entry["holds"] = target[p].status == YES and entry["transported_witness_valid"]
        out[p] = entry
    return {"target_report": target, "properties": out}


def _find(T, dom, cod, equations):
    sp = hom_space(T, dom, cod).refine(equations)
    return sp.representative() if sp.feasible else None


def check_unit_preservation(F, A, source_report=None):
    """For a lax ``F``: ``phi0`` split epi carries semiseparable/naturally full of ``- (x) A``; split mono carries separable."""
    if not F.is_lax:
        raise DirectionMismatch("unit case needs a lax functor")
    T = F.target
    source_report = source_report or classify_tensor_functor_algebra(A)
    p0 = F.phi0()
    sec = _find(T, p0.cod, p0.dom, [lambda s: (p0 @ s, T.identity(p0.cod))])
    ret = _find(T, p0.cod, p0.dom, [lambda r: (r @ p0, T.identity(p0.dom))])
    FA = transport_algebra(F, A)
    target = classify_tensor_functor_algebra(FA)
    out = {}
    for p in PROPERTIES:
        split = ret if p == "separable" else sec
        entry = {"source": source_report[p].status, "target": target[p].status,
                 "hypothesis": "split mono" if p == "separable" else "split epi", "hypothesis_met": split is not None}
        if split is not None and source_report[p].status == YES:
            chi = split @ F(source_report[p].witness)
            u = FA.unit
            checks = {"semiseparable": u @ chi @ u == u, "separable": chi @ u == T.identity(T.unit()),
                      "naturally_full": u @ chi == FA.id}
            entry["transported_witness_valid"] = checks[p]
            entry["holds"] = target[p].status == YES and checks[p]
        out[p] = entry
    return {"target_report": target, "properties": out}


def check_counit_preservation(F, C, source_report=None):
    """For a colax ``F``: ``psi0`` split mono carries semiseparable/naturally full of ``- (x) C``; split epi carries separable."""
    if not F.is_colax:
        raise DirectionMismatch("counit case needs a colax functor")
    T = F.target
    source_report = source_report or classify_tensor_functor_coalgebra(C)
    q0 = F.psi0()
    ret = _find(T, q0.cod, q0.dom, [lambda t: (t @ q0, T.identity(q0.dom))])
    sec = _find(T, q0.cod, q0.dom, [lambda s: (q0 @ s, T.identity(q0.cod))])
    FC = transport_coalgebra(F, C)
    target = classify_tensor_functor_coalgebra(FC)
    out = {}
    for p in PROPERTIES:
        split = sec if p == "separable" else ret
        entry = {"source": source_report[p].status, "target": target[p].status,
                 "hypothesis": "split epi" if p == "separable" else "split mono", "hypothesis_met": split is not None}
        if split is not None and source_report[p].status == YES:
            chi = F(source_report[p].witness) @ split
            e = FC.counit
            checks = {"semiseparable": e @ chi @ e == e, "separable": e @ chi == T.identity(T.unit()),
                      "naturally_full": chi @ e == FC.id}
            entry["transported_witness_valid"] = checks[p]
            entry["holds"] = target[p].status == YES and checks[p]
        out[p] = entry
    return {"target_report": target, "properties": out}
