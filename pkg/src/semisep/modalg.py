"""Algebras, modules and induction in any backend.

Every construction goes through the backend's (co)equalizers and its
``factor_through_epi``/``factor_through_mono`` so that quotient bases are the
canonical ones.  Associators and unitors are inserted explicitly; they are
identities in strict backends.
"""

from dataclasses import dataclass
from typing import Any, Callable

from .category import Morphism
from .errors import AlgebraMismatch, BackendMismatch, LawViolation, ShapeMismatch, StructureMismatch


class LawReport:
    def __init__(self, subject=""):
        self.subject = subject
        self.results = []

    def add(self, law, ok):
        self.results.append((law, bool(ok)))
        return ok

    @property
    def ok(self):
        return all(ok for _, ok in self.results)

    def failed(self):
        return [law for law, ok in self.results if not ok]

    def raise_if_failed(self):
        bad = self.failed()
        if bad:
            raise LawViolation(bad[0], self.subject)
        return self

    def __repr__(self):
        return f"LawReport({self.subject!r}, failed={self.failed()})"


def _expect(f, dom, cod, what):
    if f.dom != dom or f.cod != cod:
        raise ShapeMismatch(f"{what} has the wrong domain or codomain")


class Algebra:
    def __init__(self, backend, carrier, mul, unit, name=None, check=True):
        backend.own(mul, unit)
        A = carrier
        _expect(mul, backend.tensor(A, A), A, "multiplication")
        _expect(unit, backend.unit(), A, "unit")
        self.backend = backend
        self.carrier = carrier
        self.mul = mul
        self.unit = unit
        self.name = name
        if check:
            check_algebra(self).raise_if_failed()

    def __eq__(self, other):
        return (isinstance(other, Algebra) and self.backend == other.backend and self.carrier == other.carrier
                and self.mul == other.mul and self.unit == other.unit)

    def __hash__(self):
        return hash((self.carrier, self.mul, self.unit))

    def __repr__(self):
        return f"Algebra({self.name or self.carrier!r})"

    @property
    def id(self):
        return self.backend.identity(self.carrier)


def check_algebra(A):
    B, X, m, u = A.backend, A.carrier, A.mul, A.unit
    rep = LawReport(f"algebra {A.name or ''}".strip())
    one = B.identity(X)
    rep.add("associativity", m @ B.tensor(m, one) == m @ B.tensor(one, m) @ B.associator(X, X, X))
    rep.add("left unit", m @ B.tensor(u, one) == B.left_unitor(X))
    rep.add("right unit", m @ B.tensor(one, u) == B.right_unitor(X))
    return rep


class AlgebraMorphism:
    def __init__(self, src, dst, map, name=None, check=True):
        if src.backend != dst.backend:
            raise BackendMismatch("algebra morphism between different backends")
        src.backend.own(map)
        _expect(map, src.carrier, dst.carrier, "algebra morphism")
        self.src = src
        self.dst = dst
        self.map = map
        self.name = name
        if check:
            check_algebra_morphism(self).raise_if_failed()

    @property
    def backend(self):
        return self.src.backend

    def __repr__(self):
        return f"AlgebraMorphism({self.name or ''}: {self.src!r} -> {self.dst!r})"

    def then(self, other):
        """``other . self``."""
        if other.src != self.dst:
            raise AlgebraMismatch("composable algebra morphisms need matching algebras")
        return AlgebraMorphism(self.src, other.dst, other.map @ self.map, check=False)


def check_algebra_morphism(f):
    B = f.backend
    rep = LawReport(f"algebra morphism {f.name or ''}".strip())
    rep.add("multiplicative", f.map @ f.src.mul == f.dst.mul @ B.tensor(f.map, f.map))
    rep.add("unital", f.map @ f.src.unit == f.dst.unit)
    return rep


class Module:
    """A right (``side='right'``, action ``M R -> M``) or left module."""

    def __init__(self, algebra, carrier, action, side="right", name=None, check=True, origin=None):
        B = algebra.backend
        B.own(action)
        if side == "right":
            _expect(action, B.tensor(carrier, algebra.carrier), carrier, "right action")
        elif side == "left":
            _expect(action, B.tensor(algebra.carrier, carrier), carrier, "left action")
        else:
            raise ValueError("side must be 'right' or 'left'")
        self.algebra = algebra
        self.carrier = carrier
        self.action = action
        self.side = side
        self.name = name
        self.origin = origin
        if check:
            check_module(self).raise_if_failed()

    @property
    def backend(self):
        return self.algebra.backend

    def __eq__(self, other):
        return (isinstance(other, Module) and self.side == other.side and self.algebra == other.algebra
                and self.carrier == other.carrier and self.action == other.action)

    def __hash__(self):
        return hash((self.side, self.carrier, self.action))

    def __repr__(self):
        return f"Module({self.name or ''}, {self.side} over {self.algebra!r})"


def check_module(M):
    B, A = M.backend, M.algebra
    X, R, m, u, a = M.carrier, A.carrier, A.mul, A.unit, M.action
    rep = LawReport(f"{M.side} module {M.name or ''}".strip())
    if M.side == "right":
        rep.add("action associativity",
                a @ B.tensor(a, B.identity(R)) == a @ B.tensor(B.identity(X), m) @ B.associator(X, R, R))
        rep.add("action unit", a @ B.tensor(B.identity(X), u) == B.right_unitor(X))
    else:
        rep.add("action associativity",
                a @ B.tensor(B.identity(R), a) @ B.associator(R, R, X) == a @ B.tensor(m, B.identity(X)))
        rep.add("action unit", a @ B.tensor(u, B.identity(X)) == B.left_unitor(X))
    return rep


def is_module_morphism(f, M, N):
    B = M.backend
    if M.algebra != N.algebra or M.side != N.side:
        raise AlgebraMismatch("modules over different algebras or sides")
    R = M.algebra.carrier
    if M.side == "right":
        return f @ M.action == N.action @ B.tensor(f, B.identity(R))
    return f @ M.action == N.action @ B.tensor(B.identity(R), f)


class BimodulePres:
    """An (A, C)-bimodule: left A-action and right C-action on one carrier."""

    def __init__(self, left_algebra, right_algebra, carrier, left_action, right_action, name=None, check=True):
        self.left = Module(left_algebra, carrier, left_action, "left", check=check)
        self.right = Module(right_algebra, carrier, right_action, "right", check=check)
        self.carrier = carrier
        self.name = name
        if check:
            check_bimodule(self).raise_if_failed()

    @property
    def backend(self):
        return self.left.backend


def check_bimodule(P):
    B = P.backend
    A, C, X = P.left.algebra.carrier, P.right.algebra.carrier, P.carrier
    mu, nu = P.left.action, P.right.action
    rep = LawReport(f"bimodule {P.name or ''}".strip())
    rep.add("left action", check_module(P.left).ok)
    rep.add("right action", check_module(P.right).ok)
    rep.add("actions commute",
            nu @ B.tensor(mu, B.identity(C)) == mu @ B.tensor(B.identity(A), nu) @ B.associator(A, X, C))
    return rep


def regular_module(A, side="right"):
    return Module(A, A.carrier, A.mul, side, name=f"{A.name or 'A'} regular", check=False)


def left_module_along(phi):
    """The target algebra as a left module over the source via ``phi``."""
    B, S = phi.backend, phi.dst
    return Module(phi.src, S.carrier, S.mul @ B.tensor(phi.map, S.id), "left", check=False)


def right_module_along(phi):
    B, S = phi.backend, phi.dst
    return Module(phi.src, S.carrier, S.mul @ B.tensor(S.id, phi.map), "right", check=False)


def bimodule_along(phi):
    l, r = left_module_along(phi), right_module_along(phi)
    return BimodulePres(phi.src, phi.src, phi.dst.carrier, l.action, r.action, check=False)


@dataclass
class TensorOver:
    """``M (x)_R X`` with its canonical projection ``q: M X -> M (x)_R X``."""
    obj: Any
    q: Morphism
    factor: Callable
    right: Module
    left: Module


def tensor_over(M, X):
    """Coequalizer of ``nu_M (x) X`` and ``M (x) mu_X``."""
    if M.side != "right" or X.side != "left":
        raise StructureMismatch("tensor_over needs a right module and a left module")
    if M.algebra != X.algebra:
        raise AlgebraMismatch("modules are over different algebras")
    B = M.backend
    R = M.algebra.carrier
    f = B.tensor(M.action, B.identity(X.carrier))
    g = B.tensor(B.identity(M.carrier), X.action) @ B.associator(M.carrier, R, X.carrier)
    res = B.coequalizer(f, g)
    return TensorOver(res.quotient, res.projection, res.factor, M, X)


def _inverse_pair(B, fwd, inv):
    return fwd @ inv == B.identity(fwd.cod) and inv @ fwd == B.identity(fwd.dom)


def canonical_isos(M=None, Y=None, X=None):
    """The canonical isomorphisms and their explicit inverses.

    ``M`` right R-module, ``Y`` left R-module, ``X`` any object (for the
    mixed iso ``M (x)_R (R X) -> M X``).  Returns a dict name ->
    ``(forward, inverse, verified)``.
    """
    out = {}
    if M is not None:
        A = M.algebra
        B = A.backend
        T = tensor_over(M, regular_module(A, "left"))
        fwd = T.factor(M.action)
        inv = T.q @ B.tensor(B.identity(M.carrier), A.unit) @ B.right_unitor_inv(M.carrier)
        out["upsilon"] = (fwd, inv, _inverse_pair(B, fwd, inv))
    if Y is not None:
        A = Y.algebra
        B = A.backend
        T = tensor_over(regular_module(A, "right"), Y)
        fwd = T.factor(Y.action)
        inv = T.q @ B.tensor(A.unit, B.identity(Y.carrier)) @ B.left_unitor_inv(Y.carrier)
        out["upsilon_prime"] = (fwd, inv, _inverse_pair(B, fwd, inv))
    if M is not None and X is not None:
        A = M.algebra
        B = A.backend
        R = A.carrier
        free = Module(A, B.tensor(R, X), B.tensor(A.mul, B.identity(X)) @ B.associator_inv(R, R, X), "left",
                      check=False)
        T = tensor_over(M, free)
        fwd = T.factor(B.tensor(M.action, B.identity(X)) @ B.associator_inv(M.carrier, R, X))
        inv = (T.q @ B.tensor(B.identity(M.carrier), B.tensor(A.unit, B.identity(X)))
               @ B.tensor(B.identity(M.carrier), B.left_unitor_inv(X)))
        out["upsilon_mixed"] = (fwd, inv, _inverse_pair(B, fwd, inv))
    return out


def _check_right(X, phi):
    if X.side != "right":
        raise StructureMismatch("induction acts on right modules")
    if X.algebra != phi.src:
        raise AlgebraMismatch("module is not over the source algebra")


def induce(phi, X):
    """``X (x)_R S`` as a right S-module; the tensor data is kept in ``origin``."""
    _check_right(X, phi)
    B, S = phi.backend, phi.dst
    T = tensor_over(X, left_module_along(phi))
    h = T.q @ B.tensor(B.identity(X.carrier), S.mul) @ B.associator(X.carrier, S.carrier, S.carrier)
    action = B.factor_through_epi(h, B.tensor(T.q, S.id))
    return Module(S, T.obj, action, "right", check=False, origin=T)


def induce_morphism(phi, f, X, Y):
    """``f (x)_R S`` for a right R-module map ``f: X -> Y``."""
    B, S = phi.backend, phi.dst
    IX, IY = induce(phi, X), induce(phi, Y)
    return B.factor_through_epi(IY.origin.q @ B.tensor(f, S.id), IX.origin.q)


def restrict(phi, N):
    """Right S-module to right R-module along ``phi``."""
    if N.side != "right" or N.algebra != phi.dst:
        raise AlgebraMismatch("restriction needs a right module over the target algebra")
    B = phi.backend
    return Module(phi.src, N.carrier, N.action @ B.tensor(B.identity(N.carrier), phi.map), "right", check=False)


def adjunction_unit(phi, X):
    """``eta_X: X -> (X (x)_R S)`` restricted back to R."""
    B, S = phi.backend, phi.dst
    T = induce(phi, X).origin
    return T.q @ B.tensor(B.identity(X.carrier), S.unit) @ B.right_unitor_inv(X.carrier)


def adjunction_counit(phi, N):
    """``eps_N: N (x)_R S -> N`` with ``eps_N q = nu_N``."""
    T = induce(phi, restrict(phi, N)).origin
    return T.factor(N.action)


def unit_algebra(backend):
    one = backend.unit()
    return Algebra(backend, one, backend.left_unitor(one), backend.identity(one), name="unit", check=False)


def unit_morphism(A):
    """``u_A`` as an algebra morphism from the unit algebra."""
    return AlgebraMorphism(unit_algebra(A.backend), A, A.unit, check=False)


def image_factorization(f):
    """``f = phi . psi`` through the image algebra (kernel of the cokernel)."""
    from .errors import BackendNotAbelian

    B = f.backend
    if not B.caps.abelian or not getattr(B, "linear", False):
        raise BackendNotAbelian(f"{B.name} has no image factorization")
    R, S = f.src, f.dst
    z = B.zero(f.map.dom, f.map.cod)
    coker = B.coequalizer(f.map, z)
    zq = B.zero(coker.projection.dom, coker.projection.cod)
    img = B.equalizer(coker.projection, zq)
    incl = img.inclusion
    psi_map = B.factor_through_mono(f.map, incl)
    mul = B.factor_through_mono(S.mul @ B.tensor(incl, incl), incl)
    Im = Algebra(B, img.subobject, mul, psi_map @ R.unit, name="image")
    psi = AlgebraMorphism(R, Im, psi_map, name="psi")
    phi = AlgebraMorphism(Im, S, incl, name="phi")
    if incl @ psi_map != f.map:
        raise LawViolation("image factorization", "phi psi != f")
    return Im, psi, phi
