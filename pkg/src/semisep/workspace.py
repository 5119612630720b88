"""Workspace files: named structures plus a task list, in JSON.

Layout::

    {
      "name": "...", "field": "Q" | "Fp:2",
      "backends":   {"B": {"kind": "bimodules", "algebra": "kG"}},
      "objects":    {"T": {"backend": "B", "dim": 4, "left": [[..]], "right": [[..]]}},
      "algebras":   {"kG": {"catalog": "group_algebra", "order": 2}},
      "coalgebras": {...}, "modules": {...}, "morphisms": {...}, "functors": {...},
      "tasks":      [{"id": "t1", "op": "classify-induction", "morphism": "phi", "expect": {...}}]
    }

The built-in backends ``vec`` (FinVec over the workspace field) and ``set``
(finite sets) always exist; ``vec`` is the default.  Matrix entries are
integers or ``"a/b"`` strings; floats are rejected.  Names resolve on first
use, so declaration order does not matter; a cycle is a parse error.
"""

import json
import re
from dataclasses import dataclass, field

from . import catalog
from .bimod import bimodule_category
from .comodcoalg import Coalgebra, CoalgebraMorphism, regular_comodule
from .errors import LawViolation, ParseError, SemisepError, UnknownReference
from .fields import parse_field
from .finset import FINSET, FinSetObject
from .finvec import FinVec
from .fixtures import group_like_coalgebra, matrix_coalgebra, set_coalgebra, zero_coalgebra
from .linalg import Matrix
from .matn import Matn
from .modalg import Algebra, AlgebraMorphism, Module, regular_module, right_module_along, left_module_along
from .transport import linearization, matn_inclusion

SECTIONS = ("backends", "objects", "algebras", "coalgebras", "modules", "morphisms", "functors")
OPS = ("check", "classify-induction", "classify-coinduction", "tensor", "factorize", "transport", "duoidal", "oracle")


@dataclass
class Workspace:
    name: str
    field: str
    path: str = ""
    backends: dict = field(default_factory=dict)
    objects: dict = field(default_factory=dict)
    algebras: dict = field(default_factory=dict)
    coalgebras: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)
    morphisms: dict = field(default_factory=dict)
    functors: dict = field(default_factory=dict)
    tasks: list = field(default_factory=list)

    def lookup(self, section, name, where):
        table = getattr(self, section)
        if not isinstance(name, str) or name not in table:
            raise UnknownReference(f"{where}: no {section[:-1]} named {name!r}")
        return table[name]


class _Ctx:
    def __init__(self, text, path):
        self.text = text
        self.path = path

    def line_of(self, key):
        m = re.search(r'"' + re.escape(key) + r'"\s*:', self.text)
        return self.text.count("\n", 0, m.start()) + 1 if m else None

    def where(self, section, key):
        line = self.line_of(key)
        loc = f"{self.path}:{line}" if line else self.path
        return f"{loc}: {section}.{key}"


def _entry(x, F, where):
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"{where}: matrix entries must be integers or 'a/b' strings, got {x!r}")
    try:
        return F(x)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ParseError(f"{where}: bad matrix entry {x!r}") from exc


def parse_matrix(rows, F, where, nrows=None, ncols=None):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError(f"{where}: a matrix is a list of rows")
    if rows and len({len(r) for r in rows}) != 1:
        raise ParseError(f"{where}: rows have different lengths")
    vals = [[_entry(x, F, where) for x in r] for r in rows]
    nr = len(vals) if nrows is None else nrows
    nc = (len(vals[0]) if vals else 0) if ncols is None else ncols
    if len(vals) != nr or (vals and len(vals[0]) != nc):
        raise ParseError(f"{where}: expected a {nr}x{nc} matrix")
    return Matrix(F, vals, nr, nc)


def _require(spec, key, where):
    if key not in spec:
        raise ParseError(f"{where}: missing field {key!r}")
    return spec[key]


class _Builder:
    def __init__(self, ws, ctx, vec):
        self.ws = ws
        self.ctx = ctx
        self.vec = vec
        ws.backends["vec"] = vec
        ws.backends["set"] = FINSET
        self.pending = {}
        self.building = set()
        self.builders = {
            "backends": lambda spec, where, key: self.build_backend(spec, where),
            "objects": self.build_object, "algebras": self.build_algebra, "coalgebras": self.build_coalgebra,
            "modules": self.build_module, "morphisms": self.build_morphism, "functors": self.build_functor,
        }

    def backend(self, spec, where):
        return self.ref("backends", spec.get("backend", "vec"), where)

    def ref(self, section, name, where):
        """Resolve a name, building its entry on first use so declaration order does not matter."""
        table = getattr(self.ws, section)
        key = (section, name)
        if isinstance(name, str) and name not in table and key in self.pending:
            if key in self.building:
                raise ParseError(f"{where}: {section}.{name} depends on itself")
            self.building.add(key)
            ewhere = self.ctx.where(section, name)
            spec = self.pending[key]
            try:
                if not isinstance(spec, dict):
                    raise ParseError(f"{ewhere}: entry must be an object")
                table[name] = self.builders[section](spec, ewhere, name)
            except LawViolation as exc:
                raise LawViolation(exc.law, ewhere) from None
            except (ParseError, UnknownReference):
                raise
            except (SemisepError, ValueError, TypeError, KeyError, IndexError) as exc:
                raise ParseError(f"{ewhere}: {exc}") from None
            finally:
                self.building.discard(key)
        return self.ws.lookup(section, name, where)

    def matrix(self, B, rows, dom, cod, where):
        F = self.vec.field
        if isinstance(B, FinVec):
            return B.mor(parse_matrix(rows, F, where, cod, dom), dom, cod)
        if B.__class__.__name__ == "BimoduleBackend":
            return B.mor(dom, cod, parse_matrix(rows, F, where, cod.dim, dom.dim))
        raise ParseError(f"{where}: backend {B.name} does not take matrices")

    def set_map(self, dom, cod, table, where):
        if isinstance(table, dict):
            return FINSET.mor(dom, cod, {str(k): str(v) for k, v in table.items()})
        if not isinstance(table, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in table):
            raise ParseError(f"{where}: a map table is a list of indices or a label dict")
        return FINSET.mor(dom, cod, table)

    def morphism_data(self, B, spec, dom, cod, where):
        if B is FINSET:
            return self.set_map(dom, cod, _require(spec, "map", where), where)
        return self.matrix(B, _require(spec, "matrix", where), dom, cod, where)

    def object(self, B, ref, where):
        if B is FINSET:
            if isinstance(ref, int):
                return FinSetObject.of_size(ref)
            if isinstance(ref, list):
                return FinSetObject(ref)
        elif isinstance(B, FinVec) and isinstance(ref, int):
            return ref
        if ref == "unit":
            return B.unit()
        if isinstance(ref, str):
            obj = self.ref("objects", ref, where)
            B.own(B.identity(obj))
            return obj
        raise ParseError(f"{where}: cannot read an object from {ref!r}")

    # sections

    def build_backend(self, spec, where):
        kind = _require(spec, "kind", where)
        if kind == "bimodules":
            R = self.ref("algebras", _require(spec, "algebra", where), where)
            return bimodule_category(R, name=spec.get("name"))
        if kind == "matn":
            return Matn(int(spec.get("n", 2)), self.vec.field.name)
        raise ParseError(f"{where}: unknown backend kind {kind!r}")

    def build_object(self, spec, where, name):
        B = self.backend(spec, where)
        if B is FINSET:
            labels = spec.get("labels")
            return FinSetObject(labels) if labels is not None else FinSetObject.of_size(_require(spec, "size", where))
        if B.__class__.__name__ == "BimoduleBackend":
            d = _require(spec, "dim", where)
            r = B.R.carrier
            F = self.vec.field
            left = parse_matrix(_require(spec, "left", where), F, where + ".left", d, r * d)
            right = parse_matrix(_require(spec, "right", where), F, where + ".right", d, d * r)
            return B.obj(d, left, right, name=name)
        raise ParseError(f"{where}: objects of {B.name} are written inline")

    def build_algebra(self, spec, where, name):
        if "catalog" in spec:
            return self._catalog_algebra(spec, where, name)
        B = self.backend(spec, where)
        if spec.get("unit_algebra"):
            return B.unit_algebra() if hasattr(B, "unit_algebra") else _unit_algebra(B)
        if B is FINSET:
            table = _require(spec, "table", where)
            if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
                raise ParseError(f"{where}: table must be a list of rows")
            return catalog.monoid(table, labels=spec.get("labels"), name=name)
        carrier = self.object(B, _require(spec, "carrier", where), where)
        if "mul_lift" in spec:
            F = self.vec.field
            d = carrier.dim
            lift = parse_matrix(spec["mul_lift"], F, where + ".mul_lift", d, d * d)
            unit = parse_matrix(_require(spec, "unit", where), F, where + ".unit", d, B.unit().dim)
            return B.algebra_from_lift(carrier, lift, unit, name=name)
        mul = self.matrix(B, _require(spec, "mul", where), B.tensor(carrier, carrier), carrier, where + ".mul")
        unit = self.matrix(B, _require(spec, "unit", where), B.unit(), carrier, where + ".unit")
        return Algebra(B, carrier, mul, unit, name=name)

    def _catalog_algebra(self, spec, where, name):
        kind = spec["catalog"]
        V = self.vec
        makers = {
            "group_algebra": lambda: catalog.group_algebra(V, int(_require(spec, "order", where))),
            "matrix_algebra": lambda: catalog.matrix_algebra(V, int(_require(spec, "k", where))),
            "diagonal_algebra": lambda: catalog.diagonal_algebra(V, int(_require(spec, "k", where))),
            "truncated_polynomials": lambda: catalog.truncated_polynomials(V, int(_require(spec, "k", where))),
            "upper_triangular": lambda: catalog.upper_triangular(V),
            "monoid_algebra": lambda: catalog.monoid_algebra(V, _require(spec, "table", where)),
            "cyclic_multiplicative": lambda: catalog.cyclic_multiplicative(int(_require(spec, "n", where)))[0],
            "product_monoid": lambda: catalog.product_monoid(
                self.ref("algebras", _require(spec, "left", where), where),
                self.ref("algebras", _require(spec, "right", where), where)),
        }
        if kind not in makers:
            raise ParseError(f"{where}: unknown catalog algebra {kind!r}")
        A = makers[kind]()
        A.name = name
        return A

    def build_coalgebra(self, spec, where, name):
        V = self.vec
        if "catalog" in spec:
            kind = spec["catalog"]
            if kind == "group_like":
                C = group_like_coalgebra(V, int(_require(spec, "n", where)))
            elif kind == "matrix_coalgebra":
                C = matrix_coalgebra(V, int(_require(spec, "k", where)))
            elif kind == "zero":
                C = zero_coalgebra(V)
            elif kind == "diagonal_set":
                C = set_coalgebra(self.object(FINSET, _require(spec, "set", where), where))
            else:
                raise ParseError(f"{where}: unknown catalog coalgebra {kind!r}")
            C.name = name
            return C
        B = self.backend(spec, where)
        if spec.get("unit_coalgebra"):
            from .comodcoalg import unit_coalgebra

            return unit_coalgebra(B)
        carrier = self.object(B, _require(spec, "carrier", where), where)
        if B is FINSET:
            comul = self.set_map(carrier, FINSET.tensor(carrier, carrier), _require(spec, "comul", where), where)
            return Coalgebra(B, carrier, comul, FINSET.terminal_map(carrier), name=name)
        comul = self.matrix(B, _require(spec, "comul", where), carrier, B.tensor(carrier, carrier), where + ".comul")
        counit = self.matrix(B, _require(spec, "counit", where), carrier, B.unit(), where + ".counit")
        return Coalgebra(B, carrier, comul, counit, name=name)

    def build_module(self, spec, where, name):
        side = spec.get("side", "right")
        if side not in ("left", "right"):
            raise ParseError(f"{where}: side must be 'left' or 'right'")
        if "regular" in spec:
            A = self.ref("algebras", spec["regular"], where)
            return regular_module(A, side)
        if "along" in spec:
            phi = self.ref("morphisms", spec["along"], where)
            return right_module_along(phi) if side == "right" else left_module_along(phi)
        if "regular_comodule" in spec:
            return regular_comodule(self.ref("coalgebras", spec["regular_comodule"], where), side)
        A = self.ref("algebras", _require(spec, "algebra", where), where)
        B = A.backend
        X = self.object(B, _require(spec, "carrier", where), where)
        R = A.carrier
        dom = B.tensor(X, R) if side == "right" else B.tensor(R, X)
        act = self.morphism_data(B, {"matrix": spec.get("action"), "map": spec.get("action")}, dom, X, where)
        return Module(A, X, act, side, name=name)

    def build_morphism(self, spec, where, name):
        if "compose" in spec:
            chain = spec["compose"]
            if not isinstance(chain, list) or not chain:
                raise ParseError(f"{where}: compose takes a non-empty list, applied left to right")
            parts = [self.ref("morphisms", n, where) for n in chain]
            out = parts[0]
            for p in parts[1:]:
                out = out.then(p)
            out.name = name
            return out
        kind = spec.get("kind", "algebra")
        if kind == "algebra":
            src = self.ref("algebras", _require(spec, "src", where), where)
            dst = self.ref("algebras", _require(spec, "dst", where), where)
            m = self.morphism_data(src.backend, spec, src.carrier, dst.carrier, where)
            return AlgebraMorphism(src, dst, m, name=name)
        if kind == "coalgebra":
            src = self.ref("coalgebras", _require(spec, "src", where), where)
            dst = self.ref("coalgebras", _require(spec, "dst", where), where)
            if spec.get("counit"):
                m = src.counit
            else:
                m = self.morphism_data(src.backend, spec, src.carrier, dst.carrier, where)
            return CoalgebraMorphism(src, dst, m, name=name)
        if kind == "plain":
            B = self.backend(spec, where)
            dom = self.object(B, _require(spec, "dom", where), where)
            cod = self.object(B, _require(spec, "cod", where), where)
            return self.morphism_data(B, spec, dom, cod, where)
        raise ParseError(f"{where}: unknown morphism kind {kind!r}")

    def build_functor(self, spec, where, name):
        kind = _require(spec, "kind", where)
        if kind == "linearization":
            F = linearization(self.vec.field.name)
        elif kind == "matn_inclusion":
            F = matn_inclusion(int(spec.get("n", 2)), self.vec.field.name)
        else:
            raise ParseError(f"{where}: unknown functor kind {kind!r}")
        F.name = name
        return F


def _unit_algebra(B):
    from .modalg import unit_algebra

    return unit_algebra(B)


def parse_workspace_text(text, path="<workspace>", field=None):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    unknown = set(doc) - set(SECTIONS) - {"name", "field", "tasks", "schema", "description"}
    if unknown:
        raise ParseError(f"{path}: unknown top-level keys {sorted(unknown)}")
    fname = field or doc.get("field", "Q")
    try:
        F = parse_field(fname)
    except (ValueError, SemisepError) as exc:
        raise ParseError(f"{path}: bad field {fname!r}: {exc}") from None
    ws = Workspace(name=doc.get("name", path), field=F.name, path=path)
    ctx = _Ctx(text, path)
    b = _Builder(ws, ctx, FinVec(F.name))
    for section in SECTIONS:
        entries = doc.get(section, {})
        if not isinstance(entries, dict):
            raise ParseError(f"{path}: {section} must be an object")
        for key, spec in entries.items():
            if section == "backends" and key in ("vec", "set"):
                raise ParseError(f"{ctx.where(section, key)}: {key!r} is a reserved backend name")
            b.pending[(section, key)] = spec
    for section in SECTIONS:
        for key in doc.get(section, {}):
            b.ref(section, key, ctx.where(section, key))
    tasks = doc.get("tasks", [])
    if not isinstance(tasks, list):
        raise ParseError(f"{path}: tasks must be a list")
    seen = set()
    for i, t in enumerate(tasks):
        where = f"{path}: tasks[{i}]"
        if not isinstance(t, dict):
            raise ParseError(f"{where}: a task is an object")
        tid = t.get("id", f"t{i + 1}")
        if tid in seen:
            raise ParseError(f"{where}: duplicate task id {tid!r}")
        seen.add(tid)
        if t.get("op") not in OPS:
            raise ParseError(f"{where}: unknown op {t.get('op')!r}")
        ws.tasks.append(dict(t, id=tid))
    return ws


def parse_workspace(path, field=None):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"{path}: cannot read workspace: {exc}") from None
    return parse_workspace_text(text, path=str(path), field=field)
