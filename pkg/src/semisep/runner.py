"""Task execution for workspaces.

Each task produces a ``TaskResult`` holding JSON-ready ``data``, the observed
values that ``expect`` entries are compared against, and a status:
``pass``, ``fail`` (an expectation or built-in assertion failed), ``error``
(the task raised) or ``cap`` (a search hit the candidate cap).
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

from .category import Morphism
from .classify import (PROPERTIES, YES, check_composition_rule, classify_coinduction, classify_induction,
                       classify_tensor_functor_algebra, classify_tensor_functor_coalgebra, coinduction_bicomodule_equations,
                       coinduction_conditions, factorization_consistency, finset_coinduction_rule, induced_idempotent,
                       induction_bimodule_equations, induction_conditions)
from .comodcoalg import (Coalgebra, CoalgebraMorphism, Comodule, check_coalgebra, check_coalgebra_morphism,
                         check_comodule)
from .errors import SemisepError
from .finset import DEFAULT_CAP, FINSET
from .modalg import (Algebra, AlgebraMorphism, Module, canonical_isos, check_algebra, check_algebra_morphism,
                     check_module, regular_module, tensor_over)

SCHEMA = "1"


@dataclass
class TaskResult:
    id: str
    op: str
    status: str
    summary: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    observed: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    error: str = ""
    seconds: float = None

    def to_dict(self, timing=False):
        out = asdict(self)
        if not timing:
            out.pop("seconds")
        return out

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


class _Task:
    def __init__(self, ws, spec, cap, side):
        self.ws = ws
        self.spec = spec
        self.cap = cap
        self.side = side
        self.summary = []
        self.data = {}
        self.observed = {}
        self.failures = []
        self.capped = False

    def get(self, section, key, required=True):
        name = self.spec.get(key)
        if name is None:
            if required:
                raise SemisepError(f"task {self.spec['id']}: missing {key!r}")
            return None
        return self.ws.lookup(section, name, f"task {self.spec['id']}")

    def assert_(self, ok, what):
        if not ok:
            self.failures.append(what)

    def report(self, rep, prefix=""):
        self.capped |= rep.cap_exceeded
        for p in PROPERTIES:
            self.observed[prefix + p] = rep[p].status
            self.summary.append(f"{prefix + p:<28}{rep[p].status}")
        if rep.witness_space_dimension is not None:
            self.observed[prefix + "witness_space_dimension"] = rep.witness_space_dimension
        return rep.to_dict()


def _describe(f):
    return f.backend.describe(f)


def _named_morphism(ws, name, where):
    if name in ws.morphisms:
        m = ws.morphisms[name]
        return m.map if isinstance(m, (AlgebraMorphism, CoalgebraMorphism)) else m
    raise SemisepError(f"{where}: no morphism named {name!r}")


# ops


def op_check(t):
    ws, target = t.ws, t.spec.get("target")
    names = [target] if target else None
    items = []
    for section in ("algebras", "coalgebras", "modules", "morphisms"):
        for name, obj in getattr(ws, section).items():
            if names is None or name in names:
                items.append((name, obj))
    if names and not items:
        raise SemisepError(f"task {t.spec['id']}: nothing named {target!r}")
    laws = {}
    for name, obj in items:
        if isinstance(obj, Algebra):
            rep = check_algebra(obj)
        elif isinstance(obj, Coalgebra):
            rep = check_coalgebra(obj)
        elif isinstance(obj, Module):
            rep = check_module(obj)
        elif isinstance(obj, Comodule):
            rep = check_comodule(obj)
        elif isinstance(obj, AlgebraMorphism):
            rep = check_algebra_morphism(obj)
        elif isinstance(obj, CoalgebraMorphism):
            rep = check_coalgebra_morphism(obj)
        else:
            continue
        laws[name] = {law: ok for law, ok in rep.results}
        ok = rep.ok
        t.summary.append(f"{name:<28}{'laws hold' if ok else 'failed: ' + ', '.join(rep.failed())}")
        t.assert_(ok, f"{name}: {', '.join(rep.failed())}")
    t.observed["checked"] = len(laws)
    t.observed["laws_hold"] = all(all(v.values()) for v in laws.values())
    t.data["laws"] = laws


def _witness_expectations(t, space_eqs, conds, rep):
    for key, check_in in (("witness_in_space", True), ("witness_equals", False)):
        for p, name in (t.spec.get("expect", {}).get(key) or {}).items():
            E = _named_morphism(t.ws, name, f"task {t.spec['id']}")
            if check_in:
                ok = all(l == r for l, r in (eq(E) for eq in space_eqs + [conds[p]]))
            else:
                ok = rep[p].witness is not None and rep[p].witness == E
            t.observed.setdefault(key, {})[p] = ok
            t.summary.append(f"{key.replace('_', ' ')} {p}: {name} {'yes' if ok else 'no'}")


def op_classify_induction(t):
    phi = t.get("morphisms", "morphism")
    side = t.side or t.spec.get("side", "right")
    formulation = t.spec.get("formulation", "unit")
    rep = classify_induction(phi, side=side, cap=t.cap, formulation=formulation, name=t.spec.get("morphism"))
    t.data["report"] = t.report(rep)
    _witness_expectations(t, induction_bimodule_equations(phi), induction_conditions(phi, formulation), rep)
    if "composition" in t.spec:
        first, second = (t.ws.lookup("morphisms", n, f"task {t.spec['id']}") for n in t.spec["composition"])
        r1 = classify_induction(first, cap=t.cap)
        r2 = classify_induction(second, cap=t.cap)
        if r1.cap_exceeded or r2.cap_exceeded:
            # premises undecided under the cap; the task reports cap, not a premise error
            t.capped = True
            t.summary.append("composition rule: undecided (cap)")
            return
        out = check_composition_rule(r1, r2, rep)
        t.data["composition"] = out
        t.observed["composition_holds"] = out["holds"]
        t.summary.append(f"composition rule ({'; '.join(out['premises'])}): {'holds' if out['holds'] else 'FAILS'}")
        t.assert_(out["holds"], "composition rule")
    if "modules" in t.spec and rep.semiseparable.status == YES:
        laws = {}
        for name in t.spec["modules"]:
            M = t.ws.lookup("modules", name, f"task {t.spec['id']}")
            d = induced_idempotent(phi, rep.semiseparable.witness, M)
            entry = {k: d[k] for k in ("idempotent", "module_map", "e_equals_nu_eta", "eta_regular",
                                       "induced_identity", "is_identity")}
            entry["e"] = _describe(d["e"])
            laws[name] = entry
            ok = all(entry[k] for k in ("idempotent", "module_map", "e_equals_nu_eta", "eta_regular",
                                        "induced_identity"))
            if rep.separable.status == YES:
                ok &= induced_idempotent(phi, rep.separable.witness, M)["is_identity"]
            t.summary.append(f"idempotent on {name}: {'laws hold' if ok else 'FAILS'}")
            t.assert_(ok, f"idempotent laws on {name}")
        t.data["idempotents"] = laws


def op_classify_coinduction(t):
    psi = t.get("morphisms", "morphism")
    formulation = t.spec.get("formulation", "counit")
    rep = classify_coinduction(psi, cap=t.cap, formulation=formulation, name=t.spec.get("morphism"))
    t.data["report"] = t.report(rep)
    _witness_expectations(t, coinduction_bicomodule_equations(psi), coinduction_conditions(psi, formulation), rep)
    if psi.backend is FINSET and not rep.cap_exceeded:
        rule = finset_coinduction_rule(psi)
        agree = all((rep[p].status == YES) == rule[p] for p in PROPERTIES)
        t.data["set_rule"] = rule
        t.observed["set_rule_agrees"] = agree
        t.summary.append(f"set rule agrees: {'yes' if agree else 'NO'}")
        t.assert_(agree, "set coinduction rule")


def op_tensor(t):
    s = t.spec
    if "algebra" in s:
        rep = classify_tensor_functor_algebra(t.get("algebras", "algebra"), cap=t.cap, name=s["algebra"])
        t.data["report"] = t.report(rep)
    elif "coalgebra" in s:
        rep = classify_tensor_functor_coalgebra(t.get("coalgebras", "coalgebra"), cap=t.cap, name=s["coalgebra"])
        t.data["report"] = t.report(rep)
    else:
        M = t.get("modules", "right")
        X = t.get("modules", "left")
        T = tensor_over(M, X)
        size = T.obj if isinstance(T.obj, int) else getattr(T.obj, "size", getattr(T.obj, "dim", None))
        t.observed["dimension"] = size
        t.data["dimension"] = size
        t.data["projection"] = _describe(T.q)
        t.summary.append(f"{s['right']} (x)_R {s['left']}: {size}")
        R = M.algebra
        if M.carrier == R.carrier and M.action == R.mul:
            iso = canonical_isos(Y=X)["upsilon_prime"][2]
        elif X.carrier == R.carrier and X.action == R.mul:
            iso = canonical_isos(M=M)["upsilon"][2]
        else:
            iso = None
        if iso is not None:
            t.observed["unit_iso"] = iso
            t.summary.append(f"canonical unit isomorphism: {'verified' if iso else 'FAILS'}")
            t.assert_(iso, "canonical isomorphism")


def op_factorize(t):
    f = t.get("morphisms", "morphism")
    out = factorization_consistency(f, cap=t.cap)
    Im = out["image"]
    t.data["image_dimension"] = Im.carrier
    t.data["psi"] = _describe(out["psi"].map)
    t.data["phi"] = _describe(out["phi"].map)
    t.data["report"] = t.report(out["report"])
    t.data["psi_report"] = t.report(out["psi_report"], "psi.")
    t.data["phi_report"] = t.report(out["phi_report"], "phi.")
    t.observed.update(image_dimension=Im.carrier, psi_naturally_full=out["psi_naturally_full"],
                      phi_separable=out["phi_separable"])
    t.summary.append(f"image dimension {Im.carrier}; {out['composite']}")
    if out["report"].semiseparable.status == YES:
        t.assert_(out["psi_naturally_full"], "corestriction to the image is not naturally full")
        t.assert_(out["phi_separable"], "image inclusion is not separable")


def op_transport(t):
    from .transport import (check_coherence, check_counit_preservation, check_preservation,
                            check_unit_preservation, phi_comparison)

    F = t.get("functors", "functor")
    s = t.spec
    if "morphism" in s:
        phi = t.get("morphisms", "morphism")
        src = classify_induction(phi, cap=t.cap)
        out = check_preservation(F, phi, src, cap=t.cap)
        t.data["source_report"] = t.report(src, "source.")
        t.data["target_report"] = t.report(out["target_report"], "target.")
        holds = all(e.get("holds", True) for e in out["properties"].values())
        t.data["properties"] = out["properties"]
        t.observed["holds"] = holds
        t.summary.append(f"positive verdicts carried over: {'yes' if holds else 'NO'}")
        t.assert_(holds, "preservation")
        if F.is_strong:
            names = s.get("modules")
            mods = [t.ws.lookup("modules", n, f"task {s['id']}") for n in names] if names else [
                regular_module(phi.src, "right")]
            ok = True
            for M in mods:
                d = phi_comparison(F, phi, M)
                ok &= d["iso"] and d["module_map"]
            t.observed["comparison_iso"] = ok
            t.data["comparison_instances"] = len(mods)
            t.summary.append(f"comparison map on {len(mods)} module(s): {'iso and linear' if ok else 'FAILS'}")
            t.assert_(ok, "comparison map")
        return
    if "algebra" in s:
        out = check_unit_preservation(F, t.get("algebras", "algebra"))
    elif "coalgebra" in s:
        out = check_counit_preservation(F, t.get("coalgebras", "coalgebra"))
    else:
        objs = s.get("objects", [0, 1, 2])
        objs = [F.source.unit() if o == "unit" else o for o in objs]
        mors = [_named_morphism(t.ws, n, f"task {s['id']}") for n in s.get("morphisms", [])]
        out = check_coherence(F, objs, mors)
        t.data["coherence"] = out
        for k, v in out.items():
            t.observed[k] = v
            t.summary.append(f"{k:<28}{'holds' if v else 'FAILS'}")
            t.assert_(v, k)
        return
    t.data["target_report"] = t.report(out["target_report"], "target.")
    props = {p: {k: v for k, v in e.items()} for p, e in out["properties"].items()}
    t.data["properties"] = props
    holds = all(e.get("holds", True) for e in props.values())
    t.observed["holds"] = holds
    for p, e in props.items():
        t.summary.append(f"{p}: {e['hypothesis']} {'met' if e['hypothesis_met'] else 'not met'}")
    t.assert_(holds, "unit/counit transport")


def op_duoidal(t):
    from .duoidal import additive, check_duoidal_propositions, diagonal_sum_coalgebra, prebraided

    s = t.spec
    inst = s.get("instance", "prebraided")
    if inst not in ("prebraided", "additive"):
        raise SemisepError(f"task {s['id']}: unknown duoidal instance {inst!r}")
    field = t.ws.field
    D = prebraided(field) if inst == "prebraided" else additive(field, zeta_sign=int(s.get("zeta_sign", 1)))
    failing = D.check_coherence()
    t.data["coherence_failures"] = {k: list(v) for k, v in failing.items()}
    t.observed["coherence"] = "fail" if failing else "pass"
    for law, tup in failing.items():
        t.summary.append(f"coherence {law} fails at {tup}")
    if not failing:
        t.summary.append("coherence holds")
    if "coherence" not in s.get("expect", {}):
        t.assert_(not failing, "duoidal coherence")
    if failing:
        t.summary.append("combination checks skipped: not a duoidal structure")
        t.observed.update(propositions_hold=None, propositions_checked=0, hypotheses_unmet=0)
        return
    where = f"task {s['id']}"

    def pairs(key, section):
        return [tuple(t.ws.lookup(section, n, where) for n in p) for p in s.get(key, [])]

    coalgebras = pairs("coalgebras", "coalgebras")
    if inst == "additive":
        coalgebras += [(diagonal_sum_coalgebra(D, a), diagonal_sum_coalgebra(D, b)) for a, b in s.get("sum_coalgebras", [])]
    res = check_duoidal_propositions(D, pairs("algebra_morphisms", "morphisms"), pairs("algebras", "algebras"),
                                     pairs("coalgebra_morphisms", "morphisms"), coalgebras)
    t.data["propositions"] = res
    met = [r for r in res if r["hypothesis_met"]]
    holds = all(r["holds"] for r in met)
    t.observed.update(propositions_hold=holds, propositions_checked=len(met),
                      hypotheses_unmet=len(res) - len(met))
    for r in res:
        state = ("holds" if r["holds"] else "FAILS") if r["hypothesis_met"] else "hypothesis not met"
        t.summary.append(f"{r['proposition']} [{r['property']}] {r['subject']}: {state}")
    t.assert_(holds, "duoidal propositions")


def op_oracle(t):
    from .corpus import run_corpus_checks
    from .oracle import PROPS, coinduction_set, induction_set

    s = t.spec
    if "corpus" in s:
        opts = s["corpus"] or {}
        fams = opts.get("families")
        kwargs = {"max_size": int(opts.get("max_size", 3)), "cap": t.cap}
        if fams:
            kwargs["families"] = tuple(fams)
        out = run_corpus_checks(**kwargs)
        t.data["families"] = out
        bad = sum(v["failures"] for v in out.values())
        t.observed["disagreements"] = bad
        t.observed["checked"] = {k: v["checked"] for k, v in out.items()}
        for k, v in out.items():
            t.summary.append(f"{k:<28}{v['checked']} checked, {v['failures']} failures, {v['unknown']} unknown")
        t.assert_(bad == 0, "corpus checks")
        return
    m = t.get("morphisms", "morphism")
    if m.backend is not FINSET:
        raise SemisepError(f"task {s['id']}: the oracle handles finite-set morphisms only")
    if isinstance(m, AlgebraMorphism):
        n, k = m.src.carrier.size, m.dst.carrier.size
        src = [list(m.src.mul.data[i * n:(i + 1) * n]) for i in range(n)]
        dst = [list(m.dst.mul.data[i * k:(i + 1) * k]) for i in range(k)]
        truth = induction_set(src, dst, m.map.data)
        rep = classify_induction(m, cap=t.cap)
    else:
        truth = coinduction_set(m.src.carrier.size, m.dst.carrier.size, m.map.data)
        rep = classify_coinduction(m, cap=t.cap)
    t.data["report"] = t.report(rep)
    t.data["oracle"] = truth
    bad = [p for p in PROPS if rep[p].status != "unknown" and (rep[p].status == YES) != truth[p]]
    t.observed["disagreements"] = len(bad)
    t.summary.append(f"oracle disagreements: {len(bad)}")
    t.assert_(not bad, f"oracle disagrees on {', '.join(bad)}")


OPS = {
    "check": op_check,
    "classify-induction": op_classify_induction,
    "classify-coinduction": op_classify_coinduction,
    "tensor": op_tensor,
    "factorize": op_factorize,
    "transport": op_transport,
    "duoidal": op_duoidal,
    "oracle": op_oracle,
}


def _compare(expected, observed, path=""):
    out = []
    for k, v in expected.items():
        key = f"{path}{k}"
        if k not in observed:
            out.append(f"expected {key} = {v!r}, not observed")
        elif isinstance(v, dict) and isinstance(observed[k], dict):
            out.extend(_compare(v, observed[k], key + "."))
        elif isinstance(v, list) and isinstance(observed[k], tuple):
            if tuple(v) != observed[k]:
                out.append(f"expected {key} = {v!r}, got {list(observed[k])!r}")
        elif observed[k] != v:
            out.append(f"expected {key} = {v!r}, got {observed[k]!r}")
    return out


def run_task(ws, spec, cap=None, side=None, timing=False):
    t = _Task(ws, spec, cap or spec.get("cap", DEFAULT_CAP), side)
    start = time.perf_counter()
    error = ""
    try:
        OPS[spec["op"]](t)
        expect = {k: v for k, v in spec.get("expect", {}).items() if k not in ("witness_in_space", "witness_equals")}
        failures = t.failures + _compare(expect, t.observed)
        for key in ("witness_in_space", "witness_equals"):
            for p in spec.get("expect", {}).get(key) or {}:
                if not t.observed.get(key, {}).get(p):
                    failures.append(f"{key} {p} not satisfied")
        if t.capped:
            status = "cap"
        else:
            status = "fail" if failures else "pass"
    except SemisepError as exc:
        failures = []
        status = "error"
        error = f"{type(exc).__name__}: {exc}"
    seconds = round(time.perf_counter() - start, 3) if timing else None
    return TaskResult(spec["id"], spec["op"], status, t.summary, _jsonable(t.data), _jsonable(t.observed), failures,
                      error, seconds)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Morphism):
        return x.backend.describe(x)
    return x


def run(ws, task_filter=None, cap=None, side=None, timing=False, jobs=1):
    """Run the selected tasks; results come back in declaration order."""
    if task_filter is None:
        tasks = list(ws.tasks)
    elif callable(task_filter):
        tasks = [t for t in ws.tasks if task_filter(t)]
    else:
        wanted = set(task_filter)
        tasks = [t for t in ws.tasks if t["id"] in wanted or t["op"] in wanted]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda s: run_task(ws, s, cap, side, timing), tasks))
    return [run_task(ws, s, cap, side, timing) for s in tasks]


def exit_code(results):
    """0 all pass, 1 an assertion failed, 2 a task could not run on its input, 3 a search hit the cap."""
    statuses = {r.status for r in results}
    if "error" in statuses:
        return 2
    if "fail" in statuses:
        return 1
    if "cap" in statuses:
        return 3
    return 0
