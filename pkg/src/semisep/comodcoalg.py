"""Coalgebras, comodules, cotensor products and coinduction.

Dual to ``modalg``: cotensors are equalizers and induced coactions are found
with ``factor_through_mono``.
"""

from dataclasses import dataclass
from typing import Any, Callable

from .category import Morphism
from .errors import BackendMismatch, CoalgebraMismatch, ShapeMismatch, StructureMismatch
from .modalg import LawReport


def _expect(f, dom, cod, what):
    if f.dom != dom or f.cod != cod:
        raise ShapeMismatch(f"{what} has the wrong domain or codomain")


class Coalgebra:
    def __init__(self, backend, carrier, comul, counit, name=None, check=True):
        backend.own(comul, counit)
        _expect(comul, carrier, backend.tensor(carrier, carrier), "comultiplication")
        _expect(counit, carrier, backend.unit(), "counit")
        self.backend = backend
        self.carrier = carrier
        self.comul = comul
        self.counit = counit
        self.name = name
        if check:
            check_coalgebra(self).raise_if_failed()

    def __eq__(self, other):
        return (isinstance(other, Coalgebra) and self.backend == other.backend and self.carrier == other.carrier
                and self.comul == other.comul and self.counit == other.counit)

    def __hash__(self):
        return hash((self.carrier, self.comul, self.counit))

    def __repr__(self):
        return f"Coalgebra({self.name or self.carrier!r})"

    @property
    def id(self):
        return self.backend.identity(self.carrier)


def check_coalgebra(C):
    B, X, d, e = C.backend, C.carrier, C.comul, C.counit
    one = B.identity(X)
    rep = LawReport(f"coalgebra {C.name or ''}".strip())
    rep.add("coassociativity", B.associator(X, X, X) @ B.tensor(d, one) @ d == B.tensor(one, d) @ d)
    rep.add("left counit", B.tensor(e, one) @ d == B.left_unitor_inv(X))
    rep.add("right counit", B.tensor(one, e) @ d == B.right_unitor_inv(X))
    return rep


class CoalgebraMorphism:
    def __init__(self, src, dst, map, name=None, check=True):
        if src.backend != dst.backend:
            raise BackendMismatch("coalgebra morphism between different backends")
        _expect(map, src.carrier, dst.carrier, "coalgebra morphism")
        self.src = src
        self.dst = dst
        self.map = map
        self.name = name
        if check:
            check_coalgebra_morphism(self).raise_if_failed()

    @property
    def backend(self):
        return self.src.backend

    def __repr__(self):
        return f"CoalgebraMorphism({self.name or ''}: {self.src!r} -> {self.dst!r})"

    def then(self, other):
        if other.src != self.dst:
            raise CoalgebraMismatch("composable coalgebra morphisms need matching coalgebras")
        return CoalgebraMorphism(self.src, other.dst, other.map @ self.map, check=False)


def check_coalgebra_morphism(f):
    B = f.backend
    rep = LawReport(f"coalgebra morphism {f.name or ''}".strip())
    rep.add("comultiplicative", B.tensor(f.map, f.map) @ f.src.comul == f.dst.comul @ f.map)
    rep.add("counital", f.dst.counit @ f.map == f.src.counit)
    return rep


class Comodule:
    """Right (``M -> M C``) or left (``M -> C M``) comodule."""

    def __init__(self, coalgebra, carrier, coaction, side="right", name=None, check=True, origin=None):
        B = coalgebra.backend
        B.own(coaction)
        if side == "right":
            _expect(coaction, carrier, B.tensor(carrier, coalgebra.carrier), "right coaction")
        elif side == "left":
            _expect(coaction, carrier, B.tensor(coalgebra.carrier, carrier), "left coaction")
        else:
            raise ValueError("side must be 'right' or 'left'")
        self.coalgebra = coalgebra
        self.carrier = carrier
        self.coaction = coaction
        self.side = side
        self.name = name
        self.origin = origin
        if check:
            check_comodule(self).raise_if_failed()

    @property
    def backend(self):
        return self.coalgebra.backend

    def __eq__(self, other):
        return (isinstance(other, Comodule) and self.side == other.side and self.coalgebra == other.coalgebra
                and self.carrier == other.carrier and self.coaction == other.coaction)

    def __hash__(self):
        return hash((self.side, self.carrier, self.coaction))

    def __repr__(self):
        return f"Comodule({self.name or ''}, {self.side} over {self.coalgebra!r})"


def check_comodule(M):
    B, C = M.backend, M.coalgebra
    X, K, d, e, r = M.carrier, C.carrier, C.comul, C.counit, M.coaction
    rep = LawReport(f"{M.side} comodule {M.name or ''}".strip())
    if M.side == "right":
        rep.add("coaction coassociativity",
                B.associator(X, K, K) @ B.tensor(r, B.identity(K)) @ r == B.tensor(B.identity(X), d) @ r)
        rep.add("coaction counit", B.tensor(B.identity(X), e) @ r == B.right_unitor_inv(X))
    else:
        rep.add("coaction coassociativity",
                B.tensor(B.identity(K), r) @ r == B.associator(K, K, X) @ B.tensor(d, B.identity(X)) @ r)
        rep.add("coaction counit", B.tensor(e, B.identity(X)) @ r == B.left_unitor_inv(X))
    return rep


def is_comodule_morphism(f, M, N):
    B = M.backend
    if M.coalgebra != N.coalgebra or M.side != N.side:
        raise CoalgebraMismatch("comodules over different coalgebras or sides")
    C = M.coalgebra.carrier
    if M.side == "right":
        return N.coaction @ f == B.tensor(f, B.identity(C)) @ M.coaction
    return N.coaction @ f == B.tensor(B.identity(C), f) @ M.coaction


def regular_comodule(C, side="right"):
    return Comodule(C, C.carrier, C.comul, side, name=f"{C.name or 'C'} regular", check=False)


def left_comodule_along(psi):
    """The source coalgebra as a left comodule over the target via ``psi``."""
    B, C = psi.backend, psi.src
    return Comodule(psi.dst, C.carrier, B.tensor(psi.map, C.id) @ C.comul, "left", check=False)


def right_comodule_along(psi):
    B, C = psi.backend, psi.src
    return Comodule(psi.dst, C.carrier, B.tensor(C.id, psi.map) @ C.comul, "right", check=False)


@dataclass
class CotensorOver:
    """``V box_C W`` with its canonical inclusion ``e`` into ``V W``."""
    obj: Any
    e: Morphism
    factor: Callable
    right: Comodule
    left: Comodule


def cotensor(V, W):
    """Equalizer of ``rho_V (x) W`` and ``V (x) lambda_W``."""
    if V.side != "right" or W.side != "left":
        raise StructureMismatch("cotensor needs a right comodule and a left comodule")
    if V.coalgebra != W.coalgebra:
        raise CoalgebraMismatch("comodules are over different coalgebras")
    B = V.backend
    C = V.coalgebra.carrier
    f = B.tensor(V.coaction, B.identity(W.carrier))
    g = B.associator_inv(V.carrier, C, W.carrier) @ B.tensor(B.identity(V.carrier), W.coaction)
    res = B.equalizer(f, g)
    return CotensorOver(res.subobject, res.inclusion, res.factor, V, W)


def _inverse_pair(B, fwd, inv):
    return fwd @ inv == B.identity(fwd.cod) and inv @ fwd == B.identity(fwd.dom)


def canonical_lambda(M=None, Y=None):
    """``Lambda_M: M -> M box_C C`` and ``Lambda'_Y: Y -> C box_C Y`` with inverses."""
    out = {}
    if M is not None:
        C = M.coalgebra
        B = C.backend
        T = cotensor(M, regular_comodule(C, "left"))
        fwd = B.factor_through_mono(M.coaction, T.e)
        inv = B.right_unitor(M.carrier) @ B.tensor(B.identity(M.carrier), C.counit) @ T.e
        out["lambda"] = (fwd, inv, _inverse_pair(B, fwd, inv))
    if Y is not None:
        C = Y.coalgebra
        B = C.backend
        T = cotensor(regular_comodule(C, "right"), Y)
        fwd = B.factor_through_mono(Y.coaction, T.e)
        inv = B.left_unitor(Y.carrier) @ B.tensor(C.counit, B.identity(Y.carrier)) @ T.e
        out["lambda_prime"] = (fwd, inv, _inverse_pair(B, fwd, inv))
    return out


def coinduce(psi, M):
    """``M box_D C`` as a right C-comodule, for ``psi: C -> D`` and a right D-comodule ``M``."""
    if M.side != "right" or M.coalgebra != psi.dst:
        raise CoalgebraMismatch("coinduction needs a right comodule over the target coalgebra")
    B, C = psi.backend, psi.src
    T = cotensor(M, left_comodule_along(psi))
    h = B.associator_inv(M.carrier, C.carrier, C.carrier) @ B.tensor(B.identity(M.carrier), C.comul) @ T.e
    coaction = B.factor_through_mono(h, B.tensor(T.e, C.id))
    return Comodule(C, T.obj, coaction, "right", check=False, origin=T)


def coinduce_morphism(psi, f, M, N):
    B, C = psi.backend, psi.src
    CM, CN = coinduce(psi, M), coinduce(psi, N)
    return B.factor_through_mono(B.tensor(f, C.id) @ CM.origin.e, CN.origin.e)


def corestrict(psi, N):
    """Right C-comodule to right D-comodule along ``psi``."""
    if N.side != "right" or N.coalgebra != psi.src:
        raise CoalgebraMismatch("corestriction needs a right comodule over the source coalgebra")
    B = psi.backend
    return Comodule(psi.dst, N.carrier, B.tensor(B.identity(N.carrier), psi.map) @ N.coaction, "right", check=False)


def coadjunction_unit(psi, N):
    """``eta_N: N -> (N corestricted) box_D C`` for a right C-comodule ``N``."""
    T = coinduce(psi, corestrict(psi, N)).origin
    return psi.backend.factor_through_mono(N.coaction, T.e)


def coadjunction_counit(psi, M):
    """``eps_M: M box_D C -> M`` for a right D-comodule ``M``."""
    B, C = psi.backend, psi.src
    T = coinduce(psi, M).origin
    return B.right_unitor(M.carrier) @ B.tensor(B.identity(M.carrier), C.counit) @ T.e


def unit_coalgebra(backend):
    one = backend.unit()
    return Coalgebra(backend, one, backend.left_unitor_inv(one), backend.identity(one), name="unit", check=False)


def counit_morphism(C):
    """``eps_C`` as a coalgebra morphism to the unit coalgebra."""
    return CoalgebraMorphism(C, unit_coalgebra(C.backend), C.counit, check=False)
