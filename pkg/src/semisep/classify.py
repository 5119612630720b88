"""Witness-based classification of induction, coinduction and tensor functors.

A verdict is ``yes`` only with a witness that has been re-checked against
every defining equation.  A ``no`` is returned only when the backend's
capability flags make the witness criterion a characterization; otherwise an
empty witness space yields ``unknown``.
"""

from dataclasses import dataclass, field

from .errors import CapExceeded, InvalidWitness, PremiseMismatch
from .finset import DEFAULT_CAP, FinSets
from .modalg import (adjunction_unit, canonical_isos, image_factorization, induce, induce_morphism,
                     is_module_morphism)
from .witness import hom_space

YES, NO, UNKNOWN = "yes", "no", "unknown"
PROPERTIES = ("semiseparable", "separable", "naturally_full")


@dataclass
class Verdict:
    status: str
    witness: object = None
    certificate: dict = None
    reason: str = ""

    def to_dict(self):
        out = {"status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness.backend.describe(self.witness)
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass
class ClassificationReport:
    kind: str
    subject: str
    backend: str
    side: str
    verdicts: dict
    witness_space_dimension: object = None
    cap_exceeded: bool = False
    notes: list = field(default_factory=list)

    def __getitem__(self, prop):
        return self.verdicts[prop]

    @property
    def semiseparable(self):
        return self.verdicts["semiseparable"]

    @property
    def separable(self):
        return self.verdicts["separable"]

    @property
    def naturally_full(self):
        return self.verdicts["naturally_full"]

    def statuses(self):
        return {p: self.verdicts[p].status for p in PROPERTIES}

    def check_consistency(self):
        """Separable or naturally full implies semiseparable, on both sides of the verdict."""
        s = self.statuses()
        if YES in (s["separable"], s["naturally_full"]) and s["semiseparable"] != YES:
            raise InvalidWitness(f"{self.subject}: separable/naturally full without semiseparable")
        if s["semiseparable"] == NO and YES in (s["separable"], s["naturally_full"]):
            raise InvalidWitness(f"{self.subject}: contradictory verdicts")
        return True

    def to_dict(self):
        out = {
            "kind": self.kind,
            "subject": self.subject,
            "backend": self.backend,
            "side": self.side,
            "verdicts": {p: self.verdicts[p].to_dict() for p in PROPERTIES},
        }
        if self.witness_space_dimension is not None:
            out["witness_space_dimension"] = self.witness_space_dimension
        if self.cap_exceeded:
            out["cap_exceeded"] = True
        if self.notes:
            out["notes"] = list(self.notes)
        return out


# equations


def induction_bimodule_equations(phi):
    """``E: S -> R`` is an R-bimodule map (S a bimodule through ``phi``)."""
    B, R, S = phi.backend, phi.src, phi.dst
    left = S.mul @ B.tensor(phi.map, S.id)
    right = S.mul @ B.tensor(S.id, phi.map)
    return [
        lambda E: (E @ left, R.mul @ B.tensor(R.id, E)),
        lambda E: (E @ right, R.mul @ B.tensor(E, R.id)),
    ]


def induction_conditions(phi, formulation="unit"):
    """The extra condition per property: unit form or morphism form."""
    R, S, f = phi.src, phi.dst, phi.map
    if formulation == "unit":
        return {
            "semiseparable": lambda E: (f @ (E @ S.unit), S.unit),
            "separable": lambda E: (E @ S.unit, R.unit),
            "naturally_full": lambda E: (f @ E, S.id),
        }
    return {
        "semiseparable": lambda E: (f @ E @ f, f),
        "separable": lambda E: (E @ f, R.id),
        "naturally_full": lambda E: (f @ E, S.id),
    }


def coinduction_bicomodule_equations(psi):
    """``chi: D -> C`` is a D-bicomodule map (C a bicomodule through ``psi``)."""
    B, C, D = psi.backend, psi.src, psi.dst
    left = B.tensor(psi.map, C.id) @ C.comul
    right = B.tensor(C.id, psi.map) @ C.comul
    return [
        lambda X: (left @ X, B.tensor(D.id, X) @ D.comul),
        lambda X: (right @ X, B.tensor(X, D.id) @ D.comul),
    ]


def coinduction_conditions(psi, formulation="counit"):
    C, D, f = psi.src, psi.dst, psi.map
    if formulation == "counit":
        return {
            "semiseparable": lambda X: (C.counit @ X @ f, C.counit),
            "separable": lambda X: (C.counit @ X, D.counit),
            "naturally_full": lambda X: (X @ f, C.id),
        }
    return {
        "semiseparable": lambda X: (f @ X @ f, f),
        "separable": lambda X: (f @ X, D.id),
        "naturally_full": lambda X: (X @ f, C.id),
    }


def bimodule_morphism_space(phi, cap=DEFAULT_CAP):
    B = phi.backend
    return hom_space(B, phi.dst.carrier, phi.src.carrier, cap).refine(induction_bimodule_equations(phi))


def bicomodule_morphism_space(psi, cap=DEFAULT_CAP):
    B = psi.backend
    return hom_space(B, psi.dst.carrier, psi.src.carrier, cap).refine(coinduction_bicomodule_equations(psi))


def _verify(witness, equations, what):
    for eq in equations:
        lhs, rhs = eq(witness)
        if lhs != rhs:
            raise InvalidWitness(f"{what}: witness fails a defining equation")
    return witness


def _unknown_all(kind, subject, backend, side, reason, cap=False):
    return ClassificationReport(kind, subject, backend.name, side,
                                {p: Verdict(UNKNOWN, reason=reason) for p in PROPERTIES}, cap_exceeded=cap)


def _decide(space, base_eqs, conds, licensed, refute=None):
    out = {}
    for prop in PROPERTIES:
        cond = conds[prop]
        sub = space.refine([cond]) if space.feasible else space
        if sub.feasible:
            w = _verify(sub.representative(), base_eqs + [cond], prop)
            out[prop] = Verdict(YES, witness=w)
        elif licensed:
            out[prop] = Verdict(NO, certificate=sub.certificate, reason=licensed)
        elif refute is not None:
            out[prop] = refute(prop, cond, sub)
        else:
            out[prop] = Verdict(UNKNOWN, certificate=sub.certificate,
                                reason="witness space empty but the backend does not license a negative")
    return out


def classify_induction(phi, side="right", cap=DEFAULT_CAP, formulation="unit", name=None):
    """Semiseparable / separable / naturally full verdicts for induction along ``phi``."""
    B = phi.backend
    subject = name or phi.name or "phi"
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    try:
        space = bimodule_morphism_space(phi, cap)
    except CapExceeded as exc:
        return _unknown_all("induction", subject, B, side, str(exc), cap=True)
    flag = B.caps.unit_is_left_tensor_generator if side == "right" else B.caps.unit_is_two_sided_generator
    licensed = "unit is a tensor generator" if flag else ""
    base = induction_bimodule_equations(phi)
    conds = induction_conditions(phi, formulation)

    def refute(prop, cond, sub):
        # without a generator, a missing one-sided witness still rules the property out
        R, S = phi.src, phi.dst
        one_sided = base[1] if side == "right" else base[0]
        try:
            alt = hom_space(B, S.carrier, R.carrier, cap).refine([one_sided, cond])
        except CapExceeded:
            return Verdict(UNKNOWN, reason="cap exceeded in one-sided search")
        if not alt.feasible:
            return Verdict(NO, certificate=alt.certificate, reason=f"no {side}-linear witness")
        return Verdict(UNKNOWN, certificate=sub.certificate,
                       reason="no bimodule witness, but a one-sided one exists; generator flag not set")

    verdicts = _decide(space, base, conds, licensed, refute)
    dim = space.dimension if space.feasible else 0
    rep = ClassificationReport("induction", subject, B.name, side, verdicts, witness_space_dimension=dim)
    rep.check_consistency()
    return rep


def classify_coinduction(psi, cap=DEFAULT_CAP, formulation="counit", name=None):
    """Verdicts for coinduction along the coalgebra morphism ``psi``."""
    B = psi.backend
    subject = name or psi.name or "psi"
    try:
        space = bicomodule_morphism_space(psi, cap)
    except CapExceeded as exc:
        return _unknown_all("coinduction", subject, B, "right", str(exc), cap=True)
    base = coinduction_bicomodule_equations(psi)
    conds = coinduction_conditions(psi, formulation)
    licensed = "unit is a tensor cogenerator" if B.caps.unit_is_left_tensor_cogenerator else ""
    rule = finset_coinduction_rule(psi) if isinstance(B, FinSets) else None

    def refute(prop, cond, sub):
        if not rule[prop]:
            return Verdict(NO, certificate=sub.certificate, reason="set coinduction rule")
        return Verdict(UNKNOWN, certificate=sub.certificate, reason="rule and search disagree")

    verdicts = _decide(space, base, conds, licensed, refute if rule is not None else None)
    dim = space.dimension if space.feasible else 0
    rep = ClassificationReport("coinduction", subject, B.name, "right", verdicts, witness_space_dimension=dim)
    rep.check_consistency()
    return rep


def finset_coinduction_rule(psi):
    """For diagonal set coalgebras: (semi)separable iff surjective, naturally full iff bijective."""
    f = psi.map
    surj = len(set(f.data)) == f.cod.size
    inj = len(set(f.data)) == f.dom.size
    return {"semiseparable": surj, "separable": surj, "naturally_full": surj and inj}


def classify_tensor_functor_algebra(A, cap=DEFAULT_CAP, name=None):
    """Verdicts for ``- (x) A`` into right A-modules; witnesses are ``chi: A -> 1``."""
    B = A.backend
    one = B.unit()
    u = A.unit
    conds = {
        "semiseparable": lambda X: (u @ X @ u, u),
        "separable": lambda X: (X @ u, B.identity(one)),
        "naturally_full": lambda X: (u @ X, A.id),
    }
    try:
        space = hom_space(B, A.carrier, one, cap)
    except CapExceeded as exc:
        return _unknown_all("tensor-algebra", name or A.name or "A", B, "right", str(exc), cap=True)
    verdicts = _decide(space, [], conds, "characterization holds in every backend")
    w = verdicts["semiseparable"].witness
    if w is not None and B.tensor(w @ u, A.id) != B.identity(B.tensor(one, A.carrier)):
        raise InvalidWitness("semiseparable witness fails (chi (x) A)(u (x) A) = id")
    rep = ClassificationReport("tensor-algebra", name or A.name or "A", B.name, "right", verdicts,
                               witness_space_dimension=space.dimension)
    rep.check_consistency()
    return rep


def classify_tensor_functor_coalgebra(C, cap=DEFAULT_CAP, name=None):
    """Verdicts for ``- (x) C`` into right C-comodules; witnesses are ``chi: 1 -> C``."""
    B = C.backend
    one = B.unit()
    e = C.counit
    conds = {
        "semiseparable": lambda X: (e @ X @ e, e),
        "separable": lambda X: (e @ X, B.identity(one)),
        "naturally_full": lambda X: (X @ e, C.id),
    }
    try:
        space = hom_space(B, one, C.carrier, cap)
    except CapExceeded as exc:
        return _unknown_all("tensor-coalgebra", name or C.name or "C", B, "right", str(exc), cap=True)
    verdicts = _decide(space, [], conds, "characterization holds in every backend")
    w = verdicts["semiseparable"].witness
    if w is not None and B.tensor(e, C.id) @ B.tensor(w, C.id) != B.identity(B.tensor(one, C.carrier)):
        raise InvalidWitness("semiseparable witness fails (eps (x) C)(chi (x) C) = id")
    rep = ClassificationReport("tensor-coalgebra", name or C.name or "C", B.name, "right", verdicts,
                               witness_space_dimension=space.dimension)
    rep.check_consistency()
    return rep


def induced_idempotent(phi, E, M):
    """``e_M = nu_M (M (x) E u_S)`` and the regularity data of the adjunction unit at ``M``."""
    B, R, S = phi.backend, phi.src, phi.dst
    _verify(E, induction_bimodule_equations(phi), "idempotent witness")
    e = M.action @ B.tensor(B.identity(M.carrier), E @ S.unit) @ B.right_unitor_inv(M.carrier)
    IM = induce(phi, M)
    T = IM.origin
    eta = adjunction_unit(phi, M)
    from .modalg import regular_module, tensor_over

    TR = tensor_over(M, regular_module(R, "left"))
    E_tilde = T.factor(TR.q @ B.tensor(B.identity(M.carrier), E))
    upsilon = canonical_isos(M=M)["upsilon"][0]
    nu = upsilon @ E_tilde
    ident = B.identity(M.carrier)
    return {
        "e": e,
        "nu": nu,
        "eta": eta,
        "idempotent": e @ e == e,
        "module_map": is_module_morphism(e, M, M),
        "e_equals_nu_eta": e == nu @ eta,
        "eta_regular": eta @ nu @ eta == eta,
        "induced_identity": induce_morphism(phi, e, M, M) == B.identity(IM.carrier),
        "is_identity": e == ident,
    }


def check_composition_rule(first, second, composite):
    """``first`` classifies the first functor applied, ``second`` the next; checks the composite."""
    s1, s2 = first.statuses(), second.statuses()
    premises = []
    if s1["semiseparable"] == YES and s2["separable"] == YES:
        premises.append("semiseparable then separable")
    if s1["naturally_full"] == YES and s2["semiseparable"] == YES:
        premises.append("naturally full then semiseparable")
    if not premises:
        raise PremiseMismatch("neither composition premise holds")
    return {"premises": premises, "holds": composite.semiseparable.status == YES}


def factorization_consistency(f, cap=DEFAULT_CAP):
    """Image factorization ``f = phi psi``: psi-induction naturally full, phi-induction separable."""
    Im, psi, phi = image_factorization(f)
    rp = classify_induction(psi, cap=cap, name="psi")
    rf = classify_induction(phi, cap=cap, name="phi")
    rc = classify_induction(f, cap=cap, name=f.name or "f")
    return {
        "image": Im,
        "psi": psi,
        "phi": phi,
        "psi_report": rp,
        "phi_report": rf,
        "report": rc,
        "psi_naturally_full": rp.naturally_full.status == YES,
        "phi_separable": rf.separable.status == YES,
        "composite": f"{f.name or 'f'} = phi . psi",
    }
