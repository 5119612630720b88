"""Named fixtures shared by the CLI workspaces, the corpus runner and the demos."""

from .bimod import bimodule_category
from .catalog import (cyclic_multiplicative, diagonal_algebra, group_algebra, matrix_algebra, monoid, monoid_morphism,
                      morphism, product_monoid)
from .comodcoalg import Coalgebra
from .finset import FINSET
from .finvec import FinVec
from .linalg import Matrix
from .modalg import AlgebraMorphism


def _bimodule_matrices(F, n, dim, left, right):
    """Action matrices from index functions ``left(h, t)`` and ``right(t, h)`` giving target indices."""
    L = [[0] * (n * dim) for _ in range(dim)]
    Rm = [[0] * (dim * n) for _ in range(dim)]
    for h in range(n):
        for t in range(dim):
            L[left(h, t)][h * dim + t] = 1
            Rm[right(t, h)][t * n + h] = 1
    return Matrix(F, L), Matrix(F, Rm)


def group_bimodule_example(field="Q", order=2, index=2, component=0):
    """The group-algebra example: kG, k^I (x) kG, kG (x) kG and the maps between them.

    ``G = Z/order``; ``T = k^I (x) kG`` with the actions on the kG factor;
    ``S = kG (x) kG`` with diagonal actions.  Returns a dict of the backend,
    algebras, morphisms and the expected witnesses.
    """
    V = FinVec(field)
    F = V.field
    n = order
    G = group_algebra(V, n)
    B = bimodule_category(G, name=f"k[Z/{n}]")
    R = B.unit_algebra()

    # T = k^I (x) kG, basis a_i (x) g^j at i*n + j
    dT = index * n
    lT, rT = _bimodule_matrices(F, n, dT, lambda h, t: (t // n) * n + (h + t % n) % n,
                                lambda t, h: (t // n) * n + (t % n + h) % n)
    Tobj = B.obj(dT, lT, rT, name="k^I kG")
    mulT = [[0] * (dT * dT) for _ in range(dT)]
    for x in range(dT):
        for y in range(dT):
            if x // n == y // n:
                mulT[(x // n) * n + (x % n + y % n) % n][x * dT + y] = 1
    unitT = [[1 if t % n == g else 0 for g in range(n)] for t in range(dT)]
    T = B.algebra_from_lift(Tobj, Matrix(F, mulT), Matrix(F, unitT), name="k^I (x) kG")

    # S = kG (x) kG, basis g^a (x) g^b at a*n + b, diagonal actions
    dS = n * n
    lS, rS = _bimodule_matrices(F, n, dS, lambda h, t: ((h + t // n) % n) * n + (h + t % n) % n,
                                lambda t, h: ((t // n + h) % n) * n + (t % n + h) % n)
    Sobj = B.obj(dS, lS, rS, name="kG kG")
    mulS = [[0] * (dS * dS) for _ in range(dS)]
    for x in range(dS):
        for y in range(dS):
            mulS[((x // n + y // n) % n) * n + (x % n + y % n) % n][x * dS + y] = 1
    unitS = [[1 if t == g * n + g else 0 for g in range(n)] for t in range(dS)]
    S = B.algebra_from_lift(Sobj, Matrix(F, mulS), Matrix(F, unitS), name="kG (x) kG")

    phi_m = B.mor(R.carrier, Sobj, unitS)
    phi = AlgebraMorphism(R, S, phi_m, name="diagonal")
    psi_m = B.mor(Tobj, R.carrier, [[1 if t // n == component and t % n == g else 0 for t in range(dT)]
                                     for g in range(n)])
    psi = AlgebraMorphism(T, R, psi_m, name=f"psi_{component}")
    comp = psi.then(phi)
    comp.name = "diagonal . psi"
    E = B.mor(Sobj, R.carrier, [[1 if t % n == g else 0 for t in range(dS)] for g in range(n)])
    D = B.mor(R.carrier, Tobj, [[1 if t // n == component and t % n == g else 0 for g in range(n)]
                                 for t in range(dT)])
    return {"field": V, "G": G, "backend": B, "R": R, "T": T, "S": S, "phi": phi, "psi": psi,
            "composite": comp, "E": E, "D": D, "DE": D @ E}


def set_mod_example():
    """(Z/6, *) -> (Z/3, *), reduction mod 3."""
    Z6, e6, _ = cyclic_multiplicative(6)
    Z3, e3, p3 = cyclic_multiplicative(3)
    phi = monoid_morphism(Z6, Z3, [p3[x % 3] for x in e6], name="mod 3")
    E = FINSET.mor(Z3.carrier, Z6.carrier, {"0": "0", "1": "4", "2": "2"})
    return {"R": Z6, "S": Z3, "phi": phi, "E": E}


def set_chain_example():
    """Projection (Z/2,*) x (Z/2,*) -> (Z/2,*) followed by the diagonal back into the square."""
    Z2, _, _ = cyclic_multiplicative(2)
    P = product_monoid(Z2, Z2, name="(Z/2,*)^2")
    psi = monoid_morphism(P, Z2, [i // 2 for i in range(4)], name="projection")
    phi = monoid_morphism(Z2, P, [0, 3], name="diagonal")
    comp = psi.then(phi)
    comp.name = "diagonal . projection"
    return {"L": P, "R": Z2, "S": P, "psi": psi, "phi": phi, "composite": comp}


def image_example(field="Q"):
    """(a, b) -> a I_2 from field^2 into M_2."""
    V = FinVec(field)
    A = diagonal_algebra(V, 2)
    M = matrix_algebra(V, 2)
    f = morphism(A, M, [[1, 0], [0, 0], [0, 0], [1, 0]], name="(a,b) -> aI")
    return {"field": V, "A": A, "M": M, "f": f}


def set_coalgebra(X, name=None):
    """Diagonal coalgebra on a finite set."""
    d = FINSET.mor(X, FINSET.tensor(X, X), [i * X.size + i for i in range(X.size)])
    return Coalgebra(FINSET, X, d, FINSET.terminal_map(X), name=name)


def group_like_coalgebra(V, n, name=None):
    """field^n with basis of group-likes: Delta(e_i) = e_i e_i, eps(e_i) = 1."""
    d = V.mor(Matrix.from_columns(V.field, [[1 if k == i * n + i else 0 for k in range(n * n)] for i in range(n)],
                                  n * n))
    e = V.mor([[1] * n], n, 1)
    return Coalgebra(V, n, d, e, name=name or f"k^{n} grouplike")


def matrix_coalgebra(V, k, name=None):
    """Dual of M_k: Delta(E_ab) = sum_c E_ac E_cb, eps(E_ab) = delta_ab."""
    n = k * k
    cols = []
    for i in range(n):
        a, b = divmod(i, k)
        col = [0] * (n * n)
        for c in range(k):
            col[(a * k + c) * n + (c * k + b)] = 1
        cols.append(col)
    d = V.mor(Matrix.from_columns(V.field, cols, n * n))
    e = V.mor([[1 if i // k == i % k else 0 for i in range(n)]], n, 1)
    return Coalgebra(V, n, d, e, name=name or f"M_{k}^*")


def zero_coalgebra(V):
    return Coalgebra(V, 0, V.zero(0, 0), V.zero(0, 1), name="0")


__all__ = [
    "group_bimodule_example", "set_mod_example", "set_chain_example", "image_example", "set_coalgebra",
    "group_like_coalgebra", "matrix_coalgebra", "zero_coalgebra", "monoid", "group_algebra",
]
