"""The monoidal category Mat_n of n x n matrices of vector spaces.

``(V (x) W)_il = (+)_j V_ij (x) W_jl`` with the summands ordered by ``j`` and
each summand in Kronecker order.  That convention is unital on the nose but
only associative up to a basis permutation, which ``associator`` supplies.
Everything else (composition, (co)equalizers, hom spaces) is entrywise.
"""

from .category import Capabilities, CoeqResult, EqResult, Morphism
from .errors import ShapeMismatch
from .finvec import FinVec, LinearBackend
from .linalg import Matrix, permutation_matrix


class MatnObject:
    __slots__ = ("n", "dims")

    def __init__(self, dims):
        self.dims = tuple(tuple(int(d) for d in row) for row in dims)
        self.n = len(self.dims)
        if any(len(r) != self.n for r in self.dims):
            raise ShapeMismatch("Mat_n objects are square grids of dimensions")

    def __eq__(self, other):
        return isinstance(other, MatnObject) and self.dims == other.dims

    def __hash__(self):
        return hash(("Matn", self.dims))

    def __repr__(self):
        return f"MatnObject({self.dims})"


class Matn(LinearBackend):
    strict = False
    caps = Capabilities(abelian=True, braided=False)

    def __init__(self, n, field="Q"):
        self.vec = FinVec(field)
        self.field = self.vec.field
        self.n = n
        self.name = f"Mat_{n}[{self.field.name}]"

    @property
    def key(self):
        return ("Matn", self.n, self.field.name)

    def _grid(self, fn):
        return tuple(tuple(fn(i, j) for j in range(self.n)) for i in range(self.n))

    def _entry(self, f, i, j):
        return Morphism(f.dom.dims[i][j], f.cod.dims[i][j], f.data[i][j], self.vec)

    def _assemble(self, dom, cod, fn):
        return self._make(dom, cod, self._grid(lambda i, j: fn(i, j).data))

    def mor(self, dom, cod, blocks):
        F = self.field
        data = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                b = blocks[i][j]
                M = b if isinstance(b, Matrix) else (
                    Matrix(F, b) if cod.dims[i][j] else Matrix.zeros(F, 0, dom.dims[i][j]))
                if M.shape != (cod.dims[i][j], dom.dims[i][j]):
                    raise ShapeMismatch(f"block ({i},{j}) has shape {M.shape}")
                row.append(M)
            data.append(tuple(row))
        return self._make(dom, cod, tuple(data))

    def unit(self):
        return MatnObject(self._grid(lambda i, j: 1 if i == j else 0))

    def tensor_objects(self, a, b):
        n = self.n
        return MatnObject(self._grid(lambda i, l: sum(a.dims[i][j] * b.dims[j][l] for j in range(n))))

    def tensor_morphisms(self, f, g):
        n = self.n

        def block(i, l):
            out = None
            for j in range(n):
                k = f.data[i][j].kron(g.data[j][l])
                out = k if out is None else out.direct_sum(k)
            return out

        dom = self.tensor_objects(f.dom, g.dom)
        cod = self.tensor_objects(f.cod, g.cod)
        return self._make(dom, cod, self._grid(block))

    def identity(self, x):
        return self._make(x, x, self._grid(lambda i, j: Matrix.identity(self.field, x.dims[i][j])))

    def zero(self, dom, cod):
        return self._make(dom, cod, self._grid(lambda i, j: Matrix.zeros(self.field, cod.dims[i][j], dom.dims[i][j])))

    def compose(self, g, f):
        self.own(g, f)
        if g.dom != f.cod:
            raise ShapeMismatch("domain/codomain mismatch in composition")
        return self._make(f.dom, g.cod, self._grid(lambda i, j: g.data[i][j] @ f.data[i][j]))

    def _data_add(self, a, b):
        return self._grid(lambda i, j: a[i][j] + b[i][j])

    def _data_sub(self, a, b):
        return self._grid(lambda i, j: a[i][j] - b[i][j])

    def _data_scale(self, c, a):
        return self._grid(lambda i, j: a[i][j].scale(c))

    def hom_basis(self, x, y):
        out = []
        for i in range(self.n):
            for j in range(self.n):
                for e in self.vec.hom_basis(x.dims[i][j], y.dims[i][j]):
                    data = self._grid(lambda a, b: e.data if (a, b) == (i, j)
                                      else Matrix.zeros(self.field, y.dims[a][b], x.dims[a][b]))
                    out.append(self._make(x, y, data))
        return out

    def to_vector(self, f):
        return tuple(v for row in f.data for M in row for v in M.vec())

    def associator(self, x, y, z):
        n = self.n
        X, Y, Z = x.dims, y.dims, z.dims

        def block(i, m):
            left = []
            for l in range(n):
                for j in range(n):
                    for a in range(X[i][j]):
                        for b in range(Y[j][l]):
                            for c in range(Z[l][m]):
                                left.append((j, l, a, b, c))
            right = {}
            for j in range(n):
                for a in range(X[i][j]):
                    for l in range(n):
                        for b in range(Y[j][l]):
                            for c in range(Z[l][m]):
                                right[(j, l, a, b, c)] = len(right)
            return permutation_matrix(self.field, [right[t] for t in left])

        dom = self.tensor_objects(self.tensor_objects(x, y), z)
        cod = self.tensor_objects(x, self.tensor_objects(y, z))
        return self._make(dom, cod, self._grid(block))

    def associator_inv(self, x, y, z):
        a = self.associator(x, y, z)
        return self._make(a.cod, a.dom, self._grid(lambda i, j: a.data[i][j].T))

    def coequalizer(self, f, g):
        self.check_parallel(f, g)
        parts = self._grid(lambda i, j: self.vec.coequalizer(self._entry(f, i, j), self._entry(g, i, j)))
        Q = MatnObject(self._grid(lambda i, j: parts[i][j].quotient))
        q = self._assemble(f.cod, Q, lambda i, j: parts[i][j].projection)

        def factor(h):
            return self._assemble(Q, h.cod, lambda i, j: parts[i][j].factor(self._entry(h, i, j)))

        return CoeqResult(Q, q, factor)

    def equalizer(self, f, g):
        self.check_parallel(f, g)
        parts = self._grid(lambda i, j: self.vec.equalizer(self._entry(f, i, j), self._entry(g, i, j)))
        K = MatnObject(self._grid(lambda i, j: parts[i][j].subobject))
        e = self._assemble(K, f.dom, lambda i, j: parts[i][j].inclusion)

        def factor(h):
            return self._assemble(h.dom, K, lambda i, j: parts[i][j].factor(self._entry(h, i, j)))

        return EqResult(K, e, factor)

    def factor_through_epi(self, h, e):
        self.own(h, e)
        return self._assemble(e.cod, h.cod, lambda i, j: self.vec.factor_through_epi(self._entry(h, i, j),
                                                                                      self._entry(e, i, j)))

    def factor_through_mono(self, h, m):
        self.own(h, m)
        return self._assemble(h.dom, m.dom, lambda i, j: self.vec.factor_through_mono(self._entry(h, i, j),
                                                                                       self._entry(m, i, j)))

    def is_epi(self, f):
        return all(self.vec.is_epi(self._entry(f, i, j)) for i in range(self.n) for j in range(self.n))

    def is_mono(self, f):
        return all(self.vec.is_mono(self._entry(f, i, j)) for i in range(self.n) for j in range(self.n))

    def describe(self, f):
        return [[M.to_strings() for M in row] for row in f.data]
