"""Small named algebras and coalgebras in FinVec and FinSet."""

from .finset import FINSET, FinSetObject
from .linalg import Matrix
from .modalg import Algebra, AlgebraMorphism


def algebra_from_products(V, n, product, unit, name=None, check=True):
    """``product(i, j)`` gives the coordinates of ``e_i e_j``; ``unit`` the coordinates of 1."""
    F = V.field
    cols = [product(i, j) for i in range(n) for j in range(n)]
    mul = V.mor(Matrix.from_columns(F, cols, n) if n else Matrix.zeros(F, 0, 0))
    u = V.mor(Matrix.from_columns(F, [unit], n) if n else Matrix.zeros(F, 0, 1))
    return Algebra(V, n, mul, u, name=name, check=check)


def _e(n, k):
    v = [0] * n
    v[k] = 1
    return v


def group_algebra(V, order):
    """k[Z/order] with basis g^0, ..., g^(order-1)."""
    return algebra_from_products(V, order, lambda i, j: _e(order, (i + j) % order), _e(order, 0),
                                 name=f"k[Z/{order}]")


def matrix_algebra(V, k):
    """M_k(field), basis E_ab at index a*k+b."""
    n = k * k

    def prod(i, j):
        a, b = divmod(i, k)
        c, d = divmod(j, k)
        return _e(n, a * k + d) if b == c else [0] * n

    unit = [1 if i // k == i % k else 0 for i in range(n)]
    return algebra_from_products(V, n, prod, unit, name=f"M_{k}")


def diagonal_algebra(V, k):
    """field^k with componentwise product."""
    return algebra_from_products(V, k, lambda i, j: _e(k, i) if i == j else [0] * k, [1] * k, name=f"k^{k}")


def truncated_polynomials(V, k):
    """field[x]/(x^k)."""
    return algebra_from_products(V, k, lambda i, j: _e(k, i + j) if i + j < k else [0] * k, _e(k, 0),
                                 name=f"k[x]/x^{k}")


def upper_triangular(V):
    """2x2 upper triangular matrices, basis E11, E12, E22."""
    idx = {(0, 0): 0, (0, 1): 1, (1, 1): 2}
    pairs = [(0, 0), (0, 1), (1, 1)]

    def prod(i, j):
        a, b = pairs[i]
        c, d = pairs[j]
        return _e(3, idx[(a, d)]) if b == c else [0] * 3

    return algebra_from_products(V, 3, prod, [1, 0, 1], name="T_2")


def monoid_algebra(V, table, name=None):
    """Linearization of a monoid given by its table (unit = element 0)."""
    n = len(table)
    return algebra_from_products(V, n, lambda i, j: _e(n, table[i][j]), _e(n, 0), name=name)


def morphism(R, S, entries, name=None, check=True):
    return AlgebraMorphism(R, S, R.backend.mor(entries, R.carrier, S.carrier), name=name, check=check)


def monoid(table, labels=None, name=None):
    """A monoid as an algebra in FinSet; ``table[i][j]`` is the index of ``i*j``, unit is index 0."""
    n = len(table)
    X = FinSetObject(labels if labels is not None else range(n))
    XX = FINSET.tensor(X, X)
    mul = FINSET.mor(XX, X, [table[i][j] for i in range(n) for j in range(n)])
    unit = FINSET.mor(FINSET.unit(), X, [0])
    return Algebra(FINSET, X, mul, unit, name=name)


def monoid_morphism(R, S, table, name=None, check=True):
    return AlgebraMorphism(R, S, FINSET.mor(R.carrier, S.carrier, table), name=name, check=check)


def cyclic_multiplicative(n):
    """(Z/n, *) with the unit 1 listed first: elements 1, 0, 2, 3, ..., n-1."""
    elems = [1] + [x for x in range(n) if x != 1]
    pos = {x: i for i, x in enumerate(elems)}
    table = [[pos[(a * b) % n] for b in elems] for a in elems]
    return monoid(table, labels=elems, name=f"(Z/{n},*)"), elems, pos


def product_monoid(A, B, name=None):
    """Cartesian product of two FinSet monoids, unit first."""
    a, b = A.carrier.size, B.carrier.size
    ma, mb = A.mul.data, B.mul.data
    table = [[ma[i // b * a + j // b] * b + mb[i % b * b + j % b] for j in range(a * b)] for i in range(a * b)]
    labels = [f"({x},{y})" for x in A.carrier.labels for y in B.carrier.labels]
    return monoid(table, labels=labels, name=name)
