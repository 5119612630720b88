"""The category of R-bimodules in FinVec, monoidal under the tensor over R.

Objects carry both actions as matrices.  ``X (x)_R Y`` is the FinVec
coequalizer with canonical basis; products of morphisms, associators and
unitors are obtained by factoring through the canonical projections.  The
unit R is a tensor generator exactly when R is separable.
"""

import threading

from .category import Capabilities, CoeqResult, EqResult, Morphism
from .errors import FactorError, LawViolation, ShapeMismatch
from .finvec import FinVec, LinearBackend
from .linalg import Matrix, solve_matrix
from .modalg import Algebra
from .witness import LinearSpace


class BimoduleObject:
    __slots__ = ("dim", "left", "right", "name")

    def __init__(self, dim, left, right, name=None):
        self.dim = dim
        self.left = left
        self.right = right
        self.name = name

    def __eq__(self, other):
        return (isinstance(other, BimoduleObject) and self.dim == other.dim
                and self.left == other.left and self.right == other.right)

    def __hash__(self):
        return hash((self.dim, self.left, self.right))

    def __repr__(self):
        return f"BimoduleObject({self.name or ''} dim={self.dim})"


def is_separable_algebra(R):
    """Look for ``s: R -> R (x) R`` bilinear with ``m s = id``.

    Returns ``(True, s, e)`` with separability idempotent ``e = s u`` or
    ``(False, None, certificate)``.
    """
    V = R.backend
    r = R.carrier
    m, one = R.mul, R.id
    eqs = [
        lambda s: (s @ m, V.tensor(m, one) @ V.tensor(one, s)),
        lambda s: (s @ m, V.tensor(one, m) @ V.tensor(s, one)),
        lambda s: (m @ s, one),
    ]
    space = LinearSpace.full(V, r, r * r).refine(eqs)
    if not space.feasible:
        return False, None, space.certificate
    s = space.particular
    return True, s, s @ R.unit


class BimoduleBackend(LinearBackend):
    strict = False

    def __init__(self, R, name=None):
        if not isinstance(R.backend, FinVec) or type(R.backend) is not FinVec:
            raise ShapeMismatch("bimodule backend needs an algebra in FinVec")
        self.R = R
        self.vec = R.backend
        self.field = self.vec.field
        self.name = f"Bimod({name or R.name or 'R'})[{self.field.name}]"
        self._lock = threading.Lock()
        self._tensors = {}
        self._homs = {}
        sep, self.separability, _ = is_separable_algebra(R)
        self.caps = Capabilities(
            unit_is_left_tensor_generator=sep,
            unit_is_two_sided_generator=sep,
            abelian=True,
            braided=False,
        )
        self._unit = BimoduleObject(R.carrier, R.mul.data, R.mul.data, name="R")

    @property
    def key(self):
        return ("Bimod", self.field.name, self.R.carrier, self.R.mul.data, self.R.unit.data)

    def _v(self, M, dom, cod):
        return Morphism(dom, cod, M, self.vec)

    # objects

    def obj(self, dim, left, right, name=None, check=True):
        F = self.field
        r = self.R.carrier
        left = left if isinstance(left, Matrix) else Matrix(F, left, dim, r * dim)
        right = right if isinstance(right, Matrix) else Matrix(F, right, dim, dim * r)
        X = BimoduleObject(dim, left, right, name)
        if check:
            self.check_object(X)
        return X

    def check_object(self, X):
        V, m, u = self.vec, self.R.mul, self.R.unit
        r, d = self.R.carrier, X.dim
        mu = self._v(X.left, r * d, d)
        nu = self._v(X.right, d * r, d)
        idr, idx = V.identity(r), V.identity(d)
        laws = [
            ("left associativity", mu @ V.tensor(idr, mu) == mu @ V.tensor(m, idx)),
            ("left unit", mu @ V.tensor(u, idx) == idx),
            ("right associativity", nu @ V.tensor(nu, idr) == nu @ V.tensor(idx, m)),
            ("right unit", nu @ V.tensor(idx, u) == idx),
            ("actions commute", nu @ V.tensor(mu, idr) == mu @ V.tensor(idr, nu)),
        ]
        for law, ok in laws:
            if not ok:
                raise LawViolation(law, f"bimodule {X.name or ''}".strip())
        return True

    def unit(self):
        return self._unit

    def mor(self, dom, cod, matrix, check=True):
        M = matrix if isinstance(matrix, Matrix) else (
            Matrix(self.field, matrix, cod.dim, dom.dim) if cod.dim else Matrix.zeros(self.field, 0, dom.dim))
        if M.shape != (cod.dim, dom.dim):
            raise ShapeMismatch(f"matrix shape {M.shape} does not match {dom.dim} -> {cod.dim}")
        f = Morphism(dom, cod, M, self)
        if check and not self.is_bimodule_map(f):
            raise LawViolation("bimodule linearity")
        return f

    def is_bimodule_map(self, f):
        V = self.vec
        r = self.R.carrier
        X, Y = f.dom, f.cod
        g = self._v(f.data, X.dim, Y.dim)
        lx, ly = self._v(X.left, r * X.dim, X.dim), self._v(Y.left, r * Y.dim, Y.dim)
        rx, ry = self._v(X.right, X.dim * r, X.dim), self._v(Y.right, Y.dim * r, Y.dim)
        return (g @ lx == ly @ V.tensor(V.identity(r), g)) and (g @ rx == ry @ V.tensor(g, V.identity(r)))

    def _tensor_data(self, X, Y):
        key = (X, Y)
        hit = self._tensors.get(key)
        if hit is not None:
            return hit
        V = self.vec
        r = self.R.carrier
        ix, iy = V.identity(X.dim), V.identity(Y.dim)
        nu_x = self._v(X.right, X.dim * r, X.dim)
        mu_y = self._v(Y.left, r * Y.dim, Y.dim)
        co = V.coequalizer(V.tensor(nu_x, iy), V.tensor(ix, mu_y))
        q = co.projection
        d = co.quotient
        s = self._v(solve_matrix(q.data, Matrix.identity(self.field, d)), d, X.dim * Y.dim)
        idr = V.identity(r)
        mu_x = self._v(X.left, r * X.dim, X.dim)
        nu_y = self._v(Y.right, Y.dim * r, Y.dim)
        left = V.factor_through_epi(q @ V.tensor(mu_x, iy), V.tensor(idr, q))
        right = V.factor_through_epi(q @ V.tensor(ix, nu_y), V.tensor(q, idr))
        T = BimoduleObject(d, left.data, right.data)
        entry = (T, q, s)
        with self._lock:
            entry = self._tensors.setdefault(key, entry)
        return entry

    def tensor_objects(self, a, b):
        return self._tensor_data(a, b)[0]

    def projection(self, X, Y):
        """The canonical FinVec projection ``X (x) Y -> X (x)_R Y``."""
        return self._tensor_data(X, Y)[1]

    def tensor_morphisms(self, f, g):
        V = self.vec
        dom, q_dom, s_dom = self._tensor_data(f.dom, g.dom)
        cod, q_cod, _ = self._tensor_data(f.cod, g.cod)
        fg = V.tensor(self._v(f.data, f.dom.dim, f.cod.dim), self._v(g.data, g.dom.dim, g.cod.dim))
        return Morphism(dom, cod, (q_cod @ fg @ s_dom).data, self)

    # category structure

    def identity(self, x):
        return Morphism(x, x, Matrix.identity(self.field, x.dim), self)

    def zero(self, dom, cod):
        return Morphism(dom, cod, Matrix.zeros(self.field, cod.dim, dom.dim), self)

    def compose(self, g, f):
        self.own(g, f)
        if g.dom != f.cod:
            raise ShapeMismatch("domain/codomain mismatch in composition")
        return Morphism(f.dom, g.cod, g.data @ f.data, self)

    def _data_add(self, a, b):
        return a + b

    def _data_sub(self, a, b):
        return a - b

    def _data_scale(self, c, a):
        return a.scale(c)

    def to_vector(self, f):
        return f.data.vec()

    def hom_basis(self, x, y):
        key = (x, y)
        if key not in self._homs:
            V = self.vec
            r = self.R.carrier
            lx, ly = self._v(x.left, r * x.dim, x.dim), self._v(y.left, r * y.dim, y.dim)
            rx, ry = self._v(x.right, x.dim * r, x.dim), self._v(y.right, y.dim * r, y.dim)
            idr = V.identity(r)
            eqs = [lambda g: (g @ lx, ly @ V.tensor(idr, g)), lambda g: (g @ rx, ry @ V.tensor(g, idr))]
            space = LinearSpace.full(V, x.dim, y.dim).refine(eqs)
            self._homs[key] = [Morphism(x, y, b.data, self) for b in space.basis]
        return list(self._homs[key])

    # coherence

    def associator(self, x, y, z):
        V = self.vec
        xy, q_xy, _ = self._tensor_data(x, y)
        yz, q_yz, _ = self._tensor_data(y, z)
        left, q_l, _ = self._tensor_data(xy, z)
        right, q_r, _ = self._tensor_data(x, yz)
        pi_l = q_l @ V.tensor(q_xy, V.identity(z.dim))
        pi_r = q_r @ V.tensor(V.identity(x.dim), q_yz)
        a = V.factor_through_epi(pi_r, pi_l)
        return Morphism(left, right, a.data, self)

    def associator_inv(self, x, y, z):
        V = self.vec
        a = self.associator(x, y, z)
        inv = V.factor_through_epi(V.identity(a.dom.dim), self._v(a.data, a.dom.dim, a.cod.dim))
        return Morphism(a.cod, a.dom, inv.data, self)

    def left_unitor(self, x):
        T, q, _ = self._tensor_data(self._unit, x)
        l = self.vec.factor_through_epi(self._v(x.left, q.dom, x.dim), q)
        return Morphism(T, x, l.data, self)

    def left_unitor_inv(self, x):
        V = self.vec
        T, q, _ = self._tensor_data(self._unit, x)
        return Morphism(x, T, (q @ V.tensor(self.R.unit, V.identity(x.dim))).data, self)

    def right_unitor(self, x):
        T, q, _ = self._tensor_data(x, self._unit)
        l = self.vec.factor_through_epi(self._v(x.right, q.dom, x.dim), q)
        return Morphism(T, x, l.data, self)

    def right_unitor_inv(self, x):
        V = self.vec
        T, q, _ = self._tensor_data(x, self._unit)
        return Morphism(x, T, (q @ V.tensor(V.identity(x.dim), self.R.unit)).data, self)

    # (co)limits

    def coequalizer(self, f, g):
        self.check_parallel(f, g)
        V = self.vec
        r = self.R.carrier
        Y = f.cod
        co = V.coequalizer(self._v(f.data, f.dom.dim, Y.dim), self._v(g.data, g.dom.dim, Y.dim))
        q = co.projection
        idr = V.identity(r)
        left = V.factor_through_epi(q @ self._v(Y.left, r * Y.dim, Y.dim), V.tensor(idr, q))
        right = V.factor_through_epi(q @ self._v(Y.right, Y.dim * r, Y.dim), V.tensor(q, idr))
        Q = BimoduleObject(co.quotient, left.data, right.data)
        proj = Morphism(Y, Q, q.data, self)

        def factor(h):
            lift = co.factor(self._v(h.data, Y.dim, h.cod.dim))
            return Morphism(Q, h.cod, lift.data, self)

        return CoeqResult(Q, proj, factor)

    def equalizer(self, f, g):
        self.check_parallel(f, g)
        V = self.vec
        r = self.R.carrier
        X = f.dom
        eq = V.equalizer(self._v(f.data, X.dim, f.cod.dim), self._v(g.data, X.dim, f.cod.dim))
        e = eq.inclusion
        idr = V.identity(r)
        left = V.factor_through_mono(self._v(X.left, r * X.dim, X.dim) @ V.tensor(idr, e), e)
        right = V.factor_through_mono(self._v(X.right, X.dim * r, X.dim) @ V.tensor(e, idr), e)
        K = BimoduleObject(eq.subobject, left.data, right.data)
        inc = Morphism(K, X, e.data, self)

        def factor(h):
            lift = eq.factor(self._v(h.data, h.dom.dim, X.dim))
            return Morphism(h.dom, K, lift.data, self)

        return EqResult(K, inc, factor)

    def factor_through_epi(self, h, e):
        self.own(h, e)
        l = self.vec.factor_through_epi(self._v(h.data, h.dom.dim, h.cod.dim), self._v(e.data, e.dom.dim, e.cod.dim))
        return Morphism(e.cod, h.cod, l.data, self)

    def factor_through_mono(self, h, m):
        self.own(h, m)
        l = self.vec.factor_through_mono(self._v(h.data, h.dom.dim, h.cod.dim),
                                         self._v(m.data, m.dom.dim, m.cod.dim))
        return Morphism(h.dom, m.dom, l.data, self)

    def is_epi(self, f):
        return f.data.rank() == f.cod.dim

    def is_mono(self, f):
        return f.data.rank() == f.dom.dim

    def describe(self, f):
        return f.data.to_strings()

    # algebras given by lifts along the canonical projection

    def algebra_from_lift(self, carrier, mul_lift, unit, name=None):
        """Algebra whose multiplication ``A (x)_R A -> A`` is induced by ``mul_lift: A (x) A -> A``."""
        V = self.vec
        T, q, _ = self._tensor_data(carrier, carrier)
        lift = mul_lift if isinstance(mul_lift, Morphism) else V.mor(mul_lift, carrier.dim ** 2, carrier.dim)
        try:
            m = V.factor_through_epi(lift, q)
        except FactorError as exc:
            raise LawViolation("balanced multiplication", name or "") from exc
        mul = self.mor(T, carrier, m.data)
        u = self.mor(self._unit, carrier, unit.data if isinstance(unit, Morphism) else unit)
        return Algebra(self, carrier, mul, u, name=name)

    def unit_algebra(self):
        R = self._unit
        return Algebra(self, R, self.left_unitor(R), self.identity(R), name="R")

    def lift(self, f):
        """``f`` as a plain FinVec morphism."""
        return self._v(f.data, f.dom.dim, f.cod.dim)


def bimodule_category(R, name=None):
    return BimoduleBackend(R, name=name)
