"""Independent reference implementations used as test oracles.

Nothing here imports the package's linear algebra: elimination uses full
pivoting (largest remaining block, row and column swaps) on plain lists, so a
bug in the package kernel cannot hide in both places at once.
"""

import itertools
from fractions import Fraction

from hypothesis import strategies as st


def _arith(p):
    if p is None:
        return (lambda x: Fraction(x)), (lambda x: 1 / x)
    return (lambda x: x % p), (lambda x: pow(x % p, p - 2, p))


def full_pivot(rows, ncols, p=None):
    """Row-reduce with full pivoting; returns ``(reduced rows, pivot columns in order found, rank)``."""
    norm, inv = _arith(p)
    A = [[norm(x) for x in r] for r in rows]
    m = len(A)
    cols = list(range(ncols))
    rank = 0
    pivots = []
    while rank < m:
        best = None
        for i in range(rank, m):
            for jj in range(rank, ncols):
                if A[i][cols[jj]] != 0:
                    best = (i, jj)
                    break
            if best:
                break
        if best is None:
            break
        i, jj = best
        A[rank], A[i] = A[i], A[rank]
        cols[rank], cols[jj] = cols[jj], cols[rank]
        c = cols[rank]
        piv = inv(A[rank][c])
        A[rank] = [norm(x * piv) for x in A[rank]]
        for k in range(m):
            if k != rank and A[k][c] != 0:
                f = A[k][c]
                A[k] = [norm(a - f * b) for a, b in zip(A[k], A[rank])]
        pivots.append(c)
        rank += 1
    return A, pivots, rank


def oracle_rank(rows, ncols, p=None):
    return full_pivot(rows, ncols, p)[2]


def oracle_solve(rows, b, ncols, p=None):
    """``(feasible, x)`` for ``A x = b`` by full-pivot elimination of the augmented system."""
    aug = [list(r) + [bi] for r, bi in zip(rows, b)]
    A, pivots, rank = full_pivot(aug, ncols, p)
    for r in A[rank:]:
        if r[ncols] != 0:
            return False, None
    norm, _ = _arith(p)
    x = [norm(0)] * ncols
    for k, c in enumerate(pivots):
        x[c] = A[k][ncols]
    return True, x


def mat_vec(rows, x, p=None):
    norm, _ = _arith(p)
    return [norm(sum(a * b for a, b in zip(r, x))) for r in rows]


def mat_mul(A, B, p=None):
    norm, _ = _arith(p)
    return [[norm(sum(A[i][k] * B[k][j] for k in range(len(B)))) for j in range(len(B[0]))] for i in range(len(A))]


def enumerate_solutions(rows, b, ncols, p):
    """All solutions of ``A x = b`` over ``F_p`` by brute force."""
    return [x for x in itertools.product(range(p), repeat=ncols) if mat_vec(rows, x, p) == [y % p for y in b]]


def random_invertible(rng, n, p=None):
    """A random invertible matrix as nested lists (product of random elementary operations)."""
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            c = rng.choice([2, 3] if p is None else [x for x in range(1, p)])
            M[i] = [c * x for x in M[i]]
        else:
            c = rng.choice([-1, 1, 2]) if p is None else rng.randrange(1, p)
            M[i] = [a + c * b for a, b in zip(M[i], M[j])]
    if p is not None:
        M = [[x % p for x in r] for r in M]
    return M


def invert(M, p=None):
    n = len(M)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(M)]
    A, pivots, rank = full_pivot(aug, n, p)
    assert rank == n
    out = [None] * n
    for k, c in enumerate(pivots):
        out[c] = A[k][n:]
    return out


small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def int_matrices(draw, max_rows=5, max_cols=5, min_rows=0, min_cols=0, elements=small_ints):
    m = draw(st.integers(min_value=min_rows, max_value=max_rows))
    n = draw(st.integers(min_value=min_cols, max_value=max_cols))
    return m, n, [[draw(elements) for _ in range(n)] for _ in range(m)]


def group_element_bimodule_check(E, n=2):
    """Check ``E: kG (x) kG -> kG`` is kG-bilinear for the diagonal actions, on group elements.

    ``E`` is given as a dict ``(a, b) -> coordinate list`` and the check uses only
    group arithmetic in Z/n: ``E(h.(a,b)) = h.E(a,b)`` and ``E((a,b).h) = E(a,b).h``.
    """
    def shift(v, h):
        out = [0] * n
        for g, c in enumerate(v):
            out[(g + h) % n] += c
        return out

    for h in range(n):
        for a in range(n):
            for b in range(n):
                moved = E[((a + h) % n, (b + h) % n)]
                if moved != shift(E[(a, b)], h):
                    return False
    return True
