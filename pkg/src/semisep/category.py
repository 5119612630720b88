"""Backend-agnostic monoidal category interface.

A backend owns its objects (any hashable values) and wraps morphism data in
``Morphism``.  Strict backends have identity associators and unitors; the
non-strict ones (matrix bicategory, bimodules) override the coherence
morphisms and every generic construction routes through them.
"""

from dataclasses import dataclass
from typing import Any, Callable

from .errors import BackendMismatch, NonParallel


@dataclass(frozen=True)
class Capabilities:
    unit_is_left_tensor_generator: bool = False
    unit_is_two_sided_generator: bool = False
    unit_is_left_tensor_cogenerator: bool = False
    unit_is_two_sided_cogenerator: bool = False
    abelian: bool = False
    braided: bool = False
    coflat: bool = True
    flat: bool = True


@dataclass(frozen=True, eq=False)
class Morphism:
    dom: Any
    cod: Any
    data: Any
    backend: Any

    def __eq__(self, other):
        return (isinstance(other, Morphism) and self.backend == other.backend
                and self.dom == other.dom and self.cod == other.cod and self.data == other.data)

    def __hash__(self):
        return hash((self.dom, self.cod, self.data))

    def __repr__(self):
        return f"Morphism({self.dom!r} -> {self.cod!r}, {self.data!r})"

    def __matmul__(self, other):
        return self.backend.compose(self, other)

    def __add__(self, other):
        return self.backend.add(self, other)

    def __sub__(self, other):
        return self.backend.sub(self, other)

    def __neg__(self):
        return self.backend.scale(-1, self)

    def __rmul__(self, c):
        return self.backend.scale(c, self)


@dataclass(frozen=True)
class CoeqResult:
    quotient: Any
    projection: Morphism
    factor: Callable


@dataclass(frozen=True)
class EqResult:
    subobject: Any
    inclusion: Morphism
    factor: Callable


class Backend:
    name = "abstract"
    caps = Capabilities()
    strict = True
    linear = False

    @property
    def key(self):
        return (self.name,)

    def __eq__(self, other):
        return isinstance(other, Backend) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"

    # required in subclasses: unit, tensor_objects, tensor_morphisms, identity,
    # compose, coequalizer, equalizer, factor_through_epi, factor_through_mono,
    # is_epi, is_mono

    def tensor(self, a, b):
        if isinstance(a, Morphism) != isinstance(b, Morphism):
            raise TypeError("tensor needs two objects or two morphisms")
        if isinstance(a, Morphism):
            self.own(a, b)
            return self.tensor_morphisms(a, b)
        return self.tensor_objects(a, b)

    def tensor_many(self, *items):
        out = items[0]
        for x in items[1:]:
            out = self.tensor(out, x)
        return out

    def own(self, *morphisms):
        for f in morphisms:
            if not isinstance(f, Morphism) or f.backend != self:
                raise BackendMismatch(f"morphism does not belong to {self.name}")

    def check_parallel(self, f, g):
        self.own(f, g)
        if f.dom != g.dom or f.cod != g.cod:
            raise NonParallel(f"{f.dom!r}->{f.cod!r} vs {g.dom!r}->{g.cod!r}")

    # coherence; identities for strict backends

    def associator(self, x, y, z):
        """``(x y) z -> x (y z)``."""
        return self.identity(self.tensor(self.tensor(x, y), z))

    def associator_inv(self, x, y, z):
        return self.identity(self.tensor(x, self.tensor(y, z)))

    def left_unitor(self, x):
        """``1 x -> x``."""
        return self.identity(x)

    def left_unitor_inv(self, x):
        return self.identity(x)

    def right_unitor(self, x):
        """``x 1 -> x``."""
        return self.identity(x)

    def right_unitor_inv(self, x):
        return self.identity(x)

    def equal(self, f, g):
        return f == g

    def is_iso(self, f):
        return self.is_epi(f) and self.is_mono(f)

    def describe(self, f):
        """JSON-friendly rendering of a morphism."""
        return repr(f.data)


def check_coequalizer(backend, res, f, g):
    q = res.projection
    return backend.equal(q @ f, q @ g)


def check_equalizer(backend, res, f, g):
    e = res.inclusion
    return backend.equal(f @ e, g @ e)
