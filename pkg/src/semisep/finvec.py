"""Finite-dimensional vector spaces over an exact field.

Objects are dimensions (``int``); a morphism ``m -> n`` carries an ``n x m``
``Matrix``.  The tensor product is the Kronecker product, so the category is
strict and skeletal.  ``FinVecSum`` is the same category with the direct sum
as monoidal product.
"""

from .category import Backend, Capabilities, CoeqResult, EqResult, Morphism
from .errors import FactorError, ShapeMismatch, SolveFailed
from .fields import parse_field
from .linalg import Matrix, nullspace, rref, solve_matrix


class LinearBackend(Backend):
    """Shared vector-space operations on hom-sets."""

    linear = True

    def add(self, f, g):
        self.check_parallel(f, g)
        return self._make(f.dom, f.cod, self._data_add(f.data, g.data))

    def sub(self, f, g):
        self.check_parallel(f, g)
        return self._make(f.dom, f.cod, self._data_sub(f.data, g.data))

    def scale(self, c, f):
        self.own(f)
        return self._make(f.dom, f.cod, self._data_scale(c, f.data))

    def combine(self, coeffs, morphisms, dom, cod):
        out = self.zero(dom, cod)
        for c, m in zip(coeffs, morphisms):
            if c:
                out = self.add(out, self.scale(c, m))
        return out

    def _make(self, dom, cod, data):
        return Morphism(dom, cod, data, self)


class FinVec(LinearBackend):
    caps = Capabilities(
        unit_is_left_tensor_generator=True,
        unit_is_two_sided_generator=True,
        unit_is_left_tensor_cogenerator=True,
        unit_is_two_sided_cogenerator=True,
        abelian=True,
        braided=True,
    )

    def __init__(self, field="Q"):
        self.field = parse_field(field)
        self.name = f"FinVec[{self.field.name}]"

    @property
    def key(self):
        return ("FinVec", self.field.name)

    # objects and morphisms

    def mor(self, entries, dom=None, cod=None):
        if isinstance(entries, Matrix):
            M = entries
        else:
            entries = list(entries)
            if cod is None:
                cod = len(entries)
            if cod == 0:
                M = Matrix(self.field, [], 0, dom or 0)
            else:
                M = Matrix(self.field, entries)
        if dom is not None and M.ncols != dom:
            raise ShapeMismatch(f"matrix has {M.ncols} columns, domain is {dom}")
        if cod is not None and M.nrows != cod:
            raise ShapeMismatch(f"matrix has {M.nrows} rows, codomain is {cod}")
        return Morphism(M.ncols, M.nrows, M, self)

    def unit(self):
        return 1

    def tensor_objects(self, a, b):
        return a * b

    def tensor_morphisms(self, f, g):
        return self._make(f.dom * g.dom, f.cod * g.cod, f.data.kron(g.data))

    def identity(self, x):
        return self._make(x, x, Matrix.identity(self.field, x))

    def zero(self, dom, cod):
        return self._make(dom, cod, Matrix.zeros(self.field, cod, dom))

    def compose(self, g, f):
        self.own(g, f)
        if g.dom != f.cod:
            raise ShapeMismatch(f"cannot compose {g.dom}->{g.cod} after {f.dom}->{f.cod}")
        return self._make(f.dom, g.cod, g.data @ f.data)

    def _data_add(self, a, b):
        return a + b

    def _data_sub(self, a, b):
        return a - b

    def _data_scale(self, c, a):
        return a.scale(c)

    def hom_basis(self, x, y):
        F = self.field
        return [self._make(x, y, Matrix.elementary(F, y, x, i, j)) for i in range(y) for j in range(x)]

    def to_vector(self, f):
        return f.data.vec()

    # limits and colimits

    def coequalizer(self, f, g):
        self.check_parallel(f, g)
        n = f.cod
        d = f.data - g.data
        R, pivots = rref(d.T)
        pset = set(pivots)
        keep = [j for j in range(n) if j not in pset]
        idx = {j: k for k, j in enumerate(keep)}
        F = self.field
        q_rows = [[0] * n for _ in keep]
        for j in keep:
            q_rows[idx[j]][j] = 1
        for r, p in enumerate(pivots):
            row = R.rows[r]
            for j in keep:
                if row[j]:
                    q_rows[idx[j]][p] = F.normalize(-row[j])
        Q = len(keep)
        q = self._make(n, Q, Matrix._raw(F, tuple(map(tuple, q_rows)), Q, n))
        section = Matrix._raw(F, tuple(tuple(1 if j == keep[k] else 0 for k in range(Q)) for j in range(n)), n, Q)

        def factor(h):
            self.own(h)
            if h.dom != n:
                raise ShapeMismatch("factor needs a morphism out of the coequalizer codomain")
            lift = self._make(Q, h.cod, h.data @ section)
            if lift @ q != h:
                raise FactorError("morphism does not coequalize the pair")
            return lift

        return CoeqResult(Q, q, factor)

    def equalizer(self, f, g):
        self.check_parallel(f, g)
        d = f.data - g.data
        basis = nullspace(d)
        n = f.dom
        K = len(basis)
        F = self.field
        e = self._make(K, n, Matrix.from_columns(F, basis, n) if K else Matrix.zeros(F, n, 0))
        # each kernel vector is 1 at its own free column and 0 at the other free columns
        pivots = set(rref(d)[1])
        free = [j for j in range(n) if j not in pivots]

        def factor(h):
            self.own(h)
            if h.cod != n:
                raise ShapeMismatch("factor needs a morphism into the equalizer domain")
            lift = self._make(h.dom, K, h.data.select_rows(free))
            if e @ lift != h:
                raise FactorError("morphism does not equalize the pair")
            return lift

        return EqResult(K, e, factor)

    def factor_through_epi(self, h, e):
        """The unique ``l`` with ``l e = h``."""
        self.own(h, e)
        if h.dom != e.dom:
            raise ShapeMismatch("factor_through_epi needs a common domain")
        try:
            s = solve_matrix(e.data, Matrix.identity(self.field, e.cod))
        except SolveFailed as exc:
            raise FactorError("not an epimorphism") from exc
        lift = self._make(e.cod, h.cod, h.data @ s)
        if lift @ e != h:
            raise FactorError("morphism is not constant on the fibres of the epimorphism")
        return lift

    def factor_through_mono(self, h, m):
        """The unique ``l`` with ``m l = h``."""
        self.own(h, m)
        if h.cod != m.cod:
            raise ShapeMismatch("factor_through_mono needs a common codomain")
        try:
            X = solve_matrix(m.data, h.data)
        except SolveFailed as exc:
            raise FactorError("morphism does not land in the image of the monomorphism") from exc
        lift = self._make(h.dom, m.dom, X)
        if m @ lift != h:
            raise FactorError("morphism does not factor through the monomorphism")
        return lift

    def is_epi(self, f):
        return f.data.rank() == f.cod

    def is_mono(self, f):
        return f.data.rank() == f.dom

    # symmetric structure and biproducts

    def braid(self, m, n):
        """``sigma: m (x) n -> n (x) m``."""
        rows = [[0] * (m * n) for _ in range(m * n)]
        for i in range(m):
            for j in range(n):
                rows[j * m + i][i * n + j] = 1
        return self._make(m * n, m * n, Matrix._raw(self.field, tuple(map(tuple, rows)), m * n, m * n))

    def direct_sum(self, f, g):
        if isinstance(f, Morphism):
            return self._make(f.dom + g.dom, f.cod + g.cod, f.data.direct_sum(g.data))
        return f + g

    def projection(self, a, b, which):
        """``p: a (+) b -> a`` (which=0) or ``-> b`` (which=1)."""
        F = self.field
        if which == 0:
            M = Matrix.identity(F, a).hstack(Matrix.zeros(F, a, b)) if a else Matrix.zeros(F, 0, a + b)
            return self._make(a + b, a, M)
        M = Matrix.zeros(F, b, a).hstack(Matrix.identity(F, b)) if b else Matrix.zeros(F, 0, a + b)
        return self._make(a + b, b, M)

    def injection(self, a, b, which):
        p = self.projection(a, b, which)
        return self._make(p.cod, p.dom, p.data.T)

    def pairing(self, f, g):
        """``<f, g>: x -> a (+) b``."""
        if f.dom != g.dom:
            raise ShapeMismatch("pairing needs a common domain")
        return self._make(f.dom, f.cod + g.cod, f.data.vstack(g.data))

    def describe(self, f):
        return f.data.to_strings()


class FinVecSum(FinVec):
    """FinVec with the direct sum as (strict) monoidal product and 0 as unit."""

    caps = Capabilities(abelian=True, braided=True)

    def __init__(self, field="Q"):
        super().__init__(field)
        self.name = f"FinVec(+)[{self.field.name}]"

    @property
    def key(self):
        return ("FinVecSum", self.field.name)

    def unit(self):
        return 0

    def tensor_objects(self, a, b):
        return a + b

    def tensor_morphisms(self, f, g):
        return self._make(f.dom + g.dom, f.cod + g.cod, f.data.direct_sum(g.data))
