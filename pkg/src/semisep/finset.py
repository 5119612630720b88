"""Finite sets with the cartesian product.

Objects are ``FinSetObject`` values compared by cardinality only (labels are
for display), so the product ``i * |Y| + j`` indexing makes the category
strict and skeletal.  A morphism carries its table: a tuple of codomain
indices.
"""

import itertools

from .category import Backend, Capabilities, CoeqResult, EqResult, Morphism
from .errors import CapExceeded, FactorError, ShapeMismatch, UnknownReference

DEFAULT_CAP = 10 ** 6


class FinSetObject:
    __slots__ = ("_labels", "_size", "_factors", "_index")

    def __init__(self, labels):
        self._labels = tuple(str(x) for x in labels)
        self._size = len(self._labels)
        self._factors = None
        self._index = None

    @classmethod
    def of_size(cls, n):
        return cls(range(n))

    @classmethod
    def product(cls, a, b):
        """``a x b`` with pair labels built only when asked for."""
        obj = cls.__new__(cls)
        obj._labels = None
        obj._size = a.size * b.size
        obj._factors = (a, b)
        obj._index = None
        return obj

    @property
    def labels(self):
        if self._labels is None:
            a, b = self._factors
            self._labels = tuple(f"({x},{y})" for x in a.labels for y in b.labels)
        return self._labels

    @property
    def size(self):
        return self._size

    def __len__(self):
        return self._size

    def __eq__(self, other):
        return isinstance(other, FinSetObject) and self._size == other._size

    def __hash__(self):
        return hash(("FinSet", self._size))

    def __repr__(self):
        return "{" + ", ".join(self.labels) + "}"

    def index(self, label):
        if self._index is None:
            self._index = {l: i for i, l in enumerate(self.labels)}
        try:
            return self._index[str(label)]
        except KeyError:
            raise UnknownReference(f"{label!r} is not an element of {self!r}") from None


class UnionFind:
    """Disjoint sets over ``range(n)``; the root of a class is its least element."""

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra
        return ra


class FinSets(Backend):
    name = "FinSet"
    caps = Capabilities(
        unit_is_left_tensor_generator=True,
        unit_is_two_sided_generator=True,
        abelian=False,
        braided=True,
    )

    @property
    def key(self):
        return ("FinSet",)

    def mor(self, dom, cod, table):
        """``table`` is a sequence of codomain indices or a label -> label mapping."""
        if isinstance(table, dict):
            t = [None] * dom.size
            for k, v in table.items():
                t[dom.index(k)] = cod.index(v)
            if None in t:
                raise ShapeMismatch("map table does not cover the domain")
            table = t
        table = tuple(int(x) for x in table)
        if len(table) != dom.size:
            raise ShapeMismatch(f"table has {len(table)} entries, domain has {dom.size}")
        if any(not 0 <= x < cod.size for x in table):
            raise ShapeMismatch("table value outside the codomain")
        return Morphism(dom, cod, table, self)

    def _make(self, dom, cod, table):
        return Morphism(dom, cod, table, self)

    def unit(self):
        return FinSetObject(("*",))

    def tensor_objects(self, a, b):
        if a.size == 1 and a.labels == ("*",):
            return b
        if b.size == 1 and b.labels == ("*",):
            return a
        return FinSetObject.product(a, b)

    def tensor_morphisms(self, f, g):
        n = g.cod.size
        table = tuple(a * n + b for a in f.data for b in g.data)
        return self._make(self.tensor_objects(f.dom, g.dom), self.tensor_objects(f.cod, g.cod), table)

    def identity(self, x):
        return self._make(x, x, tuple(range(x.size)))

    def compose(self, g, f):
        self.own(g, f)
        if g.dom != f.cod:
            raise ShapeMismatch("domain/codomain mismatch in composition")
        gt = g.data
        return self._make(f.dom, g.cod, tuple(gt[i] for i in f.data))

    def pair(self, f, g):
        """``<f, g>: X -> A x B``."""
        n = g.cod.size
        return self._make(f.dom, self.tensor_objects(f.cod, g.cod), tuple(a * n + b for a, b in zip(f.data, g.data)))

    def terminal_map(self, x):
        return self._make(x, self.unit(), (0,) * x.size)

    def coequalizer(self, f, g):
        self.check_parallel(f, g)
        Y = f.cod
        uf = UnionFind(Y.size)
        for a, b in zip(f.data, g.data):
            uf.union(a, b)
        reps = sorted({uf.find(y) for y in range(Y.size)})
        pos = {r: k for k, r in enumerate(reps)}
        Q = FinSetObject(Y.labels[r] for r in reps)
        q = self._make(Y, Q, tuple(pos[uf.find(y)] for y in range(Y.size)))

        def factor(h):
            self.own(h)
            if h.dom != Y:
                raise ShapeMismatch("factor needs a morphism out of the coequalizer codomain")
            lift = self._make(Q, h.cod, tuple(h.data[r] for r in reps))
            if lift @ q != h:
                raise FactorError("map does not coequalize the pair")
            return lift

        return CoeqResult(Q, q, factor)

    def equalizer(self, f, g):
        self.check_parallel(f, g)
        X = f.dom
        keep = [x for x in range(X.size) if f.data[x] == g.data[x]]
        pos = {x: k for k, x in enumerate(keep)}
        K = FinSetObject(X.labels[x] for x in keep)
        e = self._make(K, X, tuple(keep))

        def factor(h):
            self.own(h)
            if h.cod != X or any(x not in pos for x in h.data):
                raise FactorError("map does not equalize the pair")
            return self._make(h.dom, K, tuple(pos[x] for x in h.data))

        return EqResult(K, e, factor)

    def factor_through_epi(self, h, e):
        self.own(h, e)
        if h.dom != e.dom:
            raise ShapeMismatch("factor_through_epi needs a common domain")
        out = [None] * e.cod.size
        for a, b in enumerate(e.data):
            if out[b] is None:
                out[b] = h.data[a]
            elif out[b] != h.data[a]:
                raise FactorError("map is not constant on the fibres")
        if None in out:
            raise FactorError("not an epimorphism")
        return self._make(e.cod, h.cod, tuple(out))

    def factor_through_mono(self, h, m):
        self.own(h, m)
        if h.cod != m.cod:
            raise ShapeMismatch("factor_through_mono needs a common codomain")
        if not self.is_mono(m):
            raise FactorError("not a monomorphism")
        inv = {y: x for x, y in enumerate(m.data)}
        try:
            return self._make(h.dom, m.dom, tuple(inv[y] for y in h.data))
        except KeyError:
            raise FactorError("map does not land in the image") from None

    def is_epi(self, f):
        return len(set(f.data)) == f.cod.size

    def is_mono(self, f):
        return len(set(f.data)) == f.dom.size

    def hom_iter(self, x, y, cap=DEFAULT_CAP):
        return enumerate_maps(x, y, cap=cap)

    def hom_count(self, x, y):
        return y.size ** x.size

    def describe(self, f):
        return {f.dom.labels[i]: f.cod.labels[j] for i, j in enumerate(f.data)}


FINSET = FinSets()


def enumerate_maps(A, B, filter=None, cap=DEFAULT_CAP):
    """All maps ``A -> B`` (optionally filtered) in lexicographic table order.

    Raises ``CapExceeded`` up front when ``|B|^|A|`` exceeds ``cap``.
    """
    count = B.size ** A.size
    if count > cap:
        raise CapExceeded(count, cap)

    def gen():
        for table in itertools.product(range(B.size), repeat=A.size):
            f = Morphism(A, B, table, FINSET)
            if filter is None or filter(f):
                yield f

    return gen()


def set_coequalizer(f, g):
    return FINSET.coequalizer(f, g)
