"""Solution spaces of morphism equations.

An equation is a callable ``E -> (lhs, rhs)`` that is affine in the unknown
morphism ``E``.  In a linear backend the solutions form an affine subspace of
the hom space, found by evaluating the residual on a basis and solving the
resulting linear system exactly.  In a finite backend the hom set is
enumerated (subject to a cap) and filtered.
"""

from dataclasses import dataclass

from .errors import ShapeMismatch
from .finset import DEFAULT_CAP
from .linalg import Matrix, solve_affine


@dataclass(frozen=True)
class NoSolution:
    certificate: dict
    feasible = False


class LinearSpace:
    """``particular + span(basis)`` inside ``Hom(dom, cod)``."""

    feasible = True

    def __init__(self, backend, dom, cod, particular, basis):
        self.backend = backend
        self.dom = dom
        self.cod = cod
        self.particular = particular
        self.basis = list(basis)

    @classmethod
    def full(cls, backend, dom, cod):
        return cls(backend, dom, cod, backend.zero(dom, cod), backend.hom_basis(dom, cod))

    @property
    def dimension(self):
        return len(self.basis)

    def element(self, coeffs):
        out = self.particular
        for c, b in zip(coeffs, self.basis):
            if c:
                out = out + self.backend.scale(c, b)
        return out

    def representative(self):
        return self.particular

    def refine(self, equations):
        """Intersect with the solution set of ``equations``."""
        B = self.backend
        F = B.field

        def residual(E):
            out = []
            for eq in equations:
                lhs, rhs = eq(E)
                if lhs.dom != rhs.dom or lhs.cod != rhs.cod:
                    raise ShapeMismatch("equation sides are not parallel")
                out.extend(B.to_vector(lhs - rhs))
            return out

        r0 = residual(self.particular)
        cols = []
        for b in self.basis:
            rk = residual(self.particular + b)
            cols.append([F.normalize(x - y) for x, y in zip(rk, r0)])
        m = len(r0)
        A = Matrix._raw(F, tuple(tuple(c[i] for c in cols) for i in range(m)), m, len(cols))
        sol = solve_affine(A, [F.normalize(-x) for x in r0])
        if not sol.feasible:
            return NoSolution({"kind": "linear", "certificate": [F.fmt(y) for y in sol.certificate],
                               "equations": m, "unknowns": len(cols)})
        particular = self.element(sol.particular)
        basis = [_combine(B, v, self.basis, self.dom, self.cod) for v in sol.basis]
        return LinearSpace(B, self.dom, self.cod, particular, basis)

    def contains(self, E, equations):
        return all(lhs == rhs for lhs, rhs in (eq(E) for eq in equations))


def _combine(B, coeffs, morphisms, dom, cod):
    out = B.zero(dom, cod)
    for c, m in zip(coeffs, morphisms):
        if c:
            out = out + B.scale(c, m)
    return out


class FiniteSpace:
    """An explicit list of candidate morphisms, in enumeration order."""

    feasible = True

    def __init__(self, backend, dom, cod, candidates, searched):
        self.backend = backend
        self.dom = dom
        self.cod = cod
        self.candidates = list(candidates)
        self.searched = searched

    @classmethod
    def full(cls, backend, dom, cod, cap=DEFAULT_CAP):
        cands = list(backend.hom_iter(dom, cod, cap=cap))
        return cls(backend, dom, cod, cands, len(cands))

    @property
    def dimension(self):
        return len(self.candidates)

    def representative(self):
        return self.candidates[0]

    def refine(self, equations):
        keep = [E for E in self.candidates if all(lhs == rhs for lhs, rhs in (eq(E) for eq in equations))]
        if not keep:
            return NoSolution({"kind": "exhaustive", "candidates": len(self.candidates),
                               "searched": self.searched})
        return FiniteSpace(self.backend, self.dom, self.cod, keep, self.searched)

    def contains(self, E, equations):
        return all(lhs == rhs for lhs, rhs in (eq(E) for eq in equations))


def hom_space(backend, dom, cod, cap=DEFAULT_CAP):
    if getattr(backend, "linear", False):
        return LinearSpace.full(backend, dom, cod)
    return FiniteSpace.full(backend, dom, cod, cap=cap)


def solve(backend, dom, cod, equations, cap=DEFAULT_CAP):
    return hom_space(backend, dom, cod, cap).refine(equations)
