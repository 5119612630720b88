"""Exact dense matrices over a ``Field`` and the RREF-based solvers.

Pivoting rule everywhere: scan columns left to right, take the first row
(smallest index) with a nonzero entry.  All derived bases (kernels,
quotients, images) are read off this canonical form, so they are
deterministic.
"""

from dataclasses import dataclass

from .errors import ShapeMismatch, SolveFailed


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows", "_hash")

    def __init__(self, field, rows, nrows=None, ncols=None, normalize=True):
        rows = list(rows)
        if nrows is None:
            nrows = len(rows)
        if ncols is None:
            if not rows:
                raise ShapeMismatch("ncols required for a matrix without rows")
            ncols = len(rows[0])
        if len(rows) != nrows:
            raise ShapeMismatch(f"expected {nrows} rows, got {len(rows)}")
        conv = field if normalize else None
        out = []
        for r in rows:
            if len(r) != ncols:
                raise ShapeMismatch(f"ragged row of length {len(r)}, expected {ncols}")
            out.append(tuple(conv(x) for x in r) if conv else tuple(r))
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = tuple(out)
        self._hash = None

    @classmethod
    def _raw(cls, field, rows, nrows, ncols):
        m = cls.__new__(cls)
        m.field = field
        m.nrows = nrows
        m.ncols = ncols
        m.rows = rows
        m._hash = None
        return m

    # constructors

    @classmethod
    def zeros(cls, field, m, n):
        return cls._raw(field, tuple((0,) * n for _ in range(m)), m, n)

    @classmethod
    def identity(cls, field, n):
        return cls._raw(field, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def elementary(cls, field, m, n, i, j):
        rows = [[0] * n for _ in range(m)]
        rows[i][j] = 1
        return cls._raw(field, tuple(map(tuple, rows)), m, n)

    @classmethod
    def from_columns(cls, field, cols, nrows):
        cols = [tuple(field(x) for x in c) for c in cols]
        rows = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls._raw(field, rows, nrows, len(cols))

    @classmethod
    def from_vec(cls, field, vec, m, n):
        vec = tuple(vec)
        if len(vec) != m * n:
            raise ShapeMismatch("vector length does not match shape")
        return cls._raw(field, tuple(vec[i * n:(i + 1) * n] for i in range(m)), m, n)

    # basic protocol

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.nrows, self.ncols, self.rows))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(self.field.fmt(x) for x in r) for r in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def to_strings(self):
        return [[self.field.fmt(x) for x in r] for r in self.rows]

    def vec(self):
        return tuple(x for r in self.rows for x in r)

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def is_zero(self):
        return not any(x for r in self.rows for x in r)

    def is_identity(self):
        return self.nrows == self.ncols and self == Matrix.identity(self.field, self.nrows)

    @property
    def T(self):
        return Matrix._raw(self.field, tuple(zip(*self.rows)) if self.nrows else tuple(() for _ in range(self.ncols)),
                           self.ncols, self.nrows)

    # arithmetic

    def _check_same(self, other):
        if not isinstance(other, Matrix) or self.field != other.field or self.shape != other.shape:
            raise ShapeMismatch(f"incompatible matrices {self.shape} and {getattr(other, 'shape', None)}")

    def __add__(self, other):
        self._check_same(other)
        norm = self.field.normalize
        return Matrix._raw(self.field, tuple(tuple(norm(a + b) for a, b in zip(r, s))
                                             for r, s in zip(self.rows, other.rows)), self.nrows, self.ncols)

    def __sub__(self, other):
        self._check_same(other)
        norm = self.field.normalize
        return Matrix._raw(self.field, tuple(tuple(norm(a - b) for a, b in zip(r, s))
                                             for r, s in zip(self.rows, other.rows)), self.nrows, self.ncols)

    def __neg__(self):
        norm = self.field.normalize
        return Matrix._raw(self.field, tuple(tuple(norm(-a) for a in r) for r in self.rows), self.nrows, self.ncols)

    def scale(self, c):
        c = self.field(c)
        norm = self.field.normalize
        return Matrix._raw(self.field, tuple(tuple(norm(c * a) for a in r) for r in self.rows), self.nrows, self.ncols)

    def __matmul__(self, other):
        if not isinstance(other, Matrix) or self.field != other.field:
            raise ShapeMismatch("matrix product needs matrices over the same field")
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"cannot compose {self.shape} after {other.shape}")
        norm = self.field.normalize
        n = other.ncols
        orows = other.rows
        out = []
        for r in self.rows:
            acc = [0] * n
            for k, a in enumerate(r):
                if a:
                    for j, b in enumerate(orows[k]):
                        if b:
                            acc[j] += a * b
            out.append(tuple(norm(x) for x in acc))
        return Matrix._raw(self.field, tuple(out), self.nrows, n)

    def kron(self, other):
        if self.field != other.field:
            raise ShapeMismatch("kron needs matrices over the same field")
        norm = self.field.normalize
        rows = []
        zero_row = (0,) * (self.ncols * other.ncols)
        for r in self.rows:
            for s in other.rows:
                if not any(r) or not any(s):
                    rows.append(zero_row)
                    continue
                rows.append(tuple(norm(a * b) if a and b else 0 for a in r for b in s))
        return Matrix._raw(self.field, tuple(rows), self.nrows * other.nrows, self.ncols * other.ncols)

    def direct_sum(self, other):
        left = (0,) * other.ncols
        right = (0,) * self.ncols
        rows = tuple(r + left for r in self.rows) + tuple(right + s for s in other.rows)
        return Matrix._raw(self.field, rows, self.nrows + other.nrows, self.ncols + other.ncols)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ShapeMismatch("hstack needs equal row counts")
        return Matrix._raw(self.field, tuple(r + s for r, s in zip(self.rows, other.rows)),
                           self.nrows, self.ncols + other.ncols)

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise ShapeMismatch("vstack needs equal column counts")
        return Matrix._raw(self.field, self.rows + other.rows, self.nrows + other.nrows, self.ncols)

    def select_rows(self, idx):
        return Matrix._raw(self.field, tuple(self.rows[i] for i in idx), len(idx), self.ncols)

    def select_columns(self, idx):
        return Matrix._raw(self.field, tuple(tuple(r[j] for j in idx) for r in self.rows), self.nrows, len(idx))

    def apply(self, v):
        norm = self.field.normalize
        return tuple(norm(sum(a * b for a, b in zip(r, v) if a)) for r in self.rows)

    def rank(self):
        return len(rref(self)[1])


def _eliminate(rows, ncols, field):
    """In-place RREF of ``rows`` (lists); pivots are searched in the first ``ncols`` columns."""
    norm = field.normalize
    m = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        lead = pr[c]
        if lead != 1:
            inv = field.inv(lead)
            for j in range(c, len(pr)):
                if pr[j]:
                    pr[j] = norm(pr[j] * inv)
        nz = [j for j in range(c, len(pr)) if pr[j]]
        for i in range(m):
            if i != r:
                ri = rows[i]
                f = ri[c]
                if f:
                    for j in nz:
                        ri[j] = norm(ri[j] - f * pr[j])
        pivots.append(c)
        r += 1
    return pivots


def rref(M):
    """Return ``(R, pivots)`` with ``R`` the reduced row echelon form of ``M``."""
    rows = [list(r) for r in M.rows]
    pivots = _eliminate(rows, M.ncols, M.field)
    return Matrix._raw(M.field, tuple(map(tuple, rows)), M.nrows, M.ncols), tuple(pivots)


def nullspace(M):
    """Canonical kernel basis: one vector per free column, read from the RREF."""
    R, pivots = rref(M)
    free = [j for j in range(M.ncols) if j not in set(pivots)]
    norm = M.field.normalize
    basis = []
    for f in free:
        v = [0] * M.ncols
        v[f] = 1
        for k, p in enumerate(pivots):
            v[p] = norm(-R.rows[k][f])
        basis.append(tuple(v))
    return basis


def row_space_basis(M):
    """Nonzero rows of the RREF of ``M``: a canonical basis of its row space."""
    R, pivots = rref(M)
    return [R.rows[k] for k in range(len(pivots))], pivots


@dataclass(frozen=True)
class AffineSolution:
    particular: tuple
    basis: tuple
    feasible = True

    @property
    def dimension(self):
        return len(self.basis)


@dataclass(frozen=True)
class Infeasible:
    """``certificate`` is a row vector ``y`` with ``y A = 0`` and ``y b != 0``."""
    certificate: tuple
    feasible = False


def solve_affine(A, b, certify=True):
    """Solve ``A x = b`` exactly.

    Returns an ``AffineSolution`` (particular solution with free variables
    set to zero, plus a canonical nullspace basis) or ``Infeasible``.
    """
    field = A.field
    b = tuple(field(x) for x in b)
    if len(b) != A.nrows:
        raise ShapeMismatch("right-hand side length does not match rows")
    n = A.ncols
    seen = set()
    rows = []
    for r, bi in zip(A.rows, b):
        row = r + (bi,)
        if row in seen or not any(row):
            continue
        seen.add(row)
        rows.append(list(row))
    pivots = _eliminate(rows, n, field)
    k = len(pivots)
    if any(rows[i][n] for i in range(k, len(rows))):
        return Infeasible(_certificate(A, b) if certify else ())
    x = [0] * n
    for i, p in enumerate(pivots):
        x[p] = rows[i][n]
    pset = set(pivots)
    norm = field.normalize
    basis = []
    for f in range(n):
        if f in pset:
            continue
        v = [0] * n
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = norm(-rows[i][f])
        basis.append(tuple(v))
    return AffineSolution(tuple(x), tuple(basis))


def _certificate(A, b):
    field = A.field
    m, n = A.nrows, A.ncols
    rows = [list(r) + [bi] + [1 if j == i else 0 for j in range(m)] for i, (r, bi) in enumerate(zip(A.rows, b))]
    pivots = _eliminate(rows, n, field)
    for i in range(len(pivots), m):
        if rows[i][n]:
            y = tuple(rows[i][n + 1:])
            return y
    raise SolveFailed("no certificate found for an infeasible system")


def solve_matrix(A, B):
    """One solution ``X`` of ``A X = B`` (free variables zero); raises ``SolveFailed``."""
    if A.nrows != B.nrows:
        raise ShapeMismatch("A X = B needs matching row counts")
    field = A.field
    n = A.ncols
    rows = [list(r) + list(s) for r, s in zip(A.rows, B.rows)]
    pivots = _eliminate(rows, n, field)
    k = len(pivots)
    for i in range(k, len(rows)):
        if any(rows[i][n:]):
            raise SolveFailed("A X = B has no solution")
    out = [[0] * B.ncols for _ in range(n)]
    for i, p in enumerate(pivots):
        out[p] = rows[i][n:]
    return Matrix._raw(field, tuple(map(tuple, out)), n, B.ncols)


def inverse(M):
    if M.nrows != M.ncols:
        raise ShapeMismatch("only square matrices have inverses")
    if M.rank() != M.nrows:
        raise SolveFailed("matrix is singular")
    return solve_matrix(M, Matrix.identity(M.field, M.nrows))


def permutation_matrix(field, perm):
    """Matrix sending basis vector ``i`` to basis vector ``perm[i]``."""
    n = len(perm)
    rows = [[0] * n for _ in range(n)]
    for i, p in enumerate(perm):
        rows[p][i] = 1
    return Matrix._raw(field, tuple(map(tuple, rows)), n, n)
