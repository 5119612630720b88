"""Generated monoid corpus used as oracle fuel.

Monoids live on ``{0, ..., n-1}`` with unit 0.  Each isomorphism class is
represented by its lexicographically least multiplication table over all
relabellings fixing 0.  The corpus is versioned by a checksum of its JSON form
so a change in the generator cannot go unnoticed.
"""

import hashlib
import itertools
import json
from dataclasses import dataclass

CORPUS_VERSION = "1"
# sha256 of corpus_json(4); regenerate deliberately and bump CORPUS_VERSION
CORPUS_CHECKSUM = "a182a325e485528aa1a0921344f3362c2aaf72d89c5bea8b5044b8fb3b246c66"


@dataclass(frozen=True)
class RawMonoid:
    name: str
    table: tuple  # table[a][b] = a*b

    @property
    def size(self):
        return len(self.table)


@dataclass(frozen=True)
class RawMorphism:
    src: RawMonoid
    dst: RawMonoid
    map: tuple

    @property
    def name(self):
        return f"{self.src.name}->{self.dst.name}:{''.join(map(str, self.map))}"


def _tables(n):
    """Associative tables on n elements with 0 as two-sided unit (backtracking)."""
    if n == 1:
        yield ((0,),)
        return
    cells = [(a, b) for a in range(1, n) for b in range(1, n)]
    t = [[None] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = x
        t[x][0] = x

    def consistent():
        for a in range(1, n):
            for b in range(1, n):
                ab = t[a][b]
                if ab is None:
                    continue
                for c in range(1, n):
                    bc = t[b][c]
                    if bc is None:
                        continue
                    l, r = t[ab][c], t[a][bc]
                    if l is not None and r is not None and l != r:
                        return False
        return True

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in t)
            return
        a, b = cells[k]
        for v in range(n):
            t[a][b] = v
            if consistent():
                yield from fill(k + 1)
        t[a][b] = None

    yield from fill(0)


def _relabel(table, perm):
    """Table of the monoid transported along ``x -> perm[x]``."""
    n = len(table)
    inv = [0] * n
    for x, y in enumerate(perm):
        inv[y] = x
    return tuple(tuple(perm[table[inv[a]][inv[b]]] for b in range(n)) for a in range(n))


def canonical(table):
    n = len(table)
    best = None
    for rest in itertools.permutations(range(1, n)):
        cand = _relabel(table, (0,) + rest)
        if best is None or cand < best:
            best = cand
    return best


def monoids_of_size(n):
    return sorted({canonical(t) for t in _tables(n)})


def homomorphisms(src, dst):
    """All unital multiplicative maps, lexicographic in the table."""
    n, m = src.size, dst.size
    out = []
    f = [0] * n

    def ok(k):
        # every product among already assigned elements is respected
        for a in range(k + 1):
            for b in range(k + 1):
                if a != k and b != k:
                    continue
                ab = src.table[a][b]
                if ab <= k and f[ab] != dst.table[f[a]][f[b]]:
                    return False
        return True

    def go(k):
        if k == n:
            if all(f[src.table[a][b]] == dst.table[f[a]][f[b]] for a in range(n) for b in range(n)):
                out.append(tuple(f))
            return
        for v in range(m):
            f[k] = v
            if ok(k):
                go(k + 1)

    go(1)
    return [RawMorphism(src, dst, t) for t in out]


def generate_monoid_corpus(max_size=4):
    """``(monoids, morphisms)``: every monoid up to isomorphism, all morphisms between them."""
    monoids = []
    for n in range(1, max_size + 1):
        for i, t in enumerate(monoids_of_size(n)):
            monoids.append(RawMonoid(f"M{n}.{i}", t))
    morphisms = [h for a in monoids for b in monoids for h in homomorphisms(a, b)]
    return monoids, morphisms


def corpus_json(max_size=4):
    monoids, morphisms = generate_monoid_corpus(max_size)
    doc = {
        "version": CORPUS_VERSION,
        "monoids": {m.name: [list(r) for r in m.table] for m in monoids},
        "morphisms": [[h.src.name, h.dst.name, list(h.map)] for h in morphisms],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def corpus_checksum(max_size=4):
    return hashlib.sha256(corpus_json(max_size).encode()).hexdigest()


# conversion into the engine's representation


def to_algebra(m):
    from .catalog import monoid

    return monoid([list(r) for r in m.table], name=m.name)


def to_algebra_morphism(h, cache=None):
    from .catalog import monoid_morphism

    cache = {} if cache is None else cache
    for x in (h.src, h.dst):
        if x.name not in cache:
            cache[x.name] = to_algebra(x)
    return monoid_morphism(cache[h.src.name], cache[h.dst.name], list(h.map), name=h.name)


# aggregated invariant checks

FAMILIES = ("induction-oracle", "coinduction-rule", "idempotents", "linearization", "duoidal-coherence")


class _Family:
    def __init__(self):
        self.checked = 0
        self.failures = 0
        self.unknown = 0
        self.counterexample = None

    def fail(self, what):
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = what

    def to_dict(self):
        return {"checked": self.checked, "failures": self.failures, "unknown": self.unknown,
                "counterexample": self.counterexample, "ok": self.failures == 0}


def _classified(morphisms, cap):
    from .classify import classify_induction

    cache = {}
    for h in morphisms:
        f = to_algebra_morphism(h, cache)
        yield h, f, classify_induction(f, cap=cap)


def check_induction_oracle(morphisms, cap=None):
    from .classify import NO, UNKNOWN, YES
    from .finset import DEFAULT_CAP
    from .oracle import PROPS, induction_set

    fam = _Family()
    for h, f, rep in _classified(morphisms, cap or DEFAULT_CAP):
        fam.checked += 1
        truth = induction_set(h.src.table, h.dst.table, h.map)
        for p in PROPS:
            st = rep[p].status
            if st == UNKNOWN:
                fam.unknown += 1
            elif (st == YES) != truth[p] or st not in (YES, NO):
                fam.fail(f"{h.name} {p}: classifier {st}, oracle {truth[p]}")
    return fam.to_dict()


def set_maps(max_size=4):
    """Every map between sets of size 0..max_size, lexicographic."""
    for n in range(max_size + 1):
        for m in range(max_size + 1):
            for table in itertools.product(range(m), repeat=n):
                yield n, m, table


def check_coinduction_rule(max_size=4, cap=None):
    from .classify import NO, UNKNOWN, YES, classify_coinduction, finset_coinduction_rule
    from .comodcoalg import CoalgebraMorphism
    from .finset import DEFAULT_CAP, FINSET, FinSetObject
    from .fixtures import set_coalgebra
    from .oracle import PROPS, coinduction_set

    fam = _Family()
    coalgebras = {k: set_coalgebra(FinSetObject.of_size(k)) for k in range(max_size + 1)}
    for n, m, table in set_maps(max_size):
        C, D = coalgebras[n], coalgebras[m]
        psi = CoalgebraMorphism(C, D, FINSET.mor(C.carrier, D.carrier, list(table)), check=False)
        rep = classify_coinduction(psi, cap=cap or DEFAULT_CAP)
        rule = finset_coinduction_rule(psi)
        truth = coinduction_set(n, m, table)
        fam.checked += 1
        for p in PROPS:
            st = rep[p].status
            if st == UNKNOWN:
                fam.unknown += 1
                continue
            if (st == YES) != rule[p] or rule[p] != truth[p] or st not in (YES, NO):
                fam.fail(f"{n}->{m} {table} {p}: classifier {st}, rule {rule[p]}, oracle {truth[p]}")
    return fam.to_dict()


def check_idempotents(morphisms, cap=None):
    from .classify import YES, induced_idempotent
    from .finset import DEFAULT_CAP
    from .modalg import regular_module, right_module_along

    fam = _Family()
    for h, f, rep in _classified(morphisms, cap or DEFAULT_CAP):
        if rep.semiseparable.status != YES:
            continue
        for M in (regular_module(f.src, "right"), right_module_along(f)):
            fam.checked += 1
            d = induced_idempotent(f, rep.semiseparable.witness, M)
            bad = [k for k in ("idempotent", "module_map", "e_equals_nu_eta", "eta_regular", "induced_identity")
                   if not d[k]]
            if rep.separable.status == YES and not induced_idempotent(f, rep.separable.witness, M)["is_identity"]:
                bad.append("separable witness gives identity")
            if bad:
                fam.fail(f"{h.name} on {M.name}: {', '.join(bad)}")
    return fam.to_dict()


def check_linearization(morphisms, field="Q", cap=None):
    from .classify import YES
    from .finset import DEFAULT_CAP
    from .transport import check_preservation, linearization

    F = linearization(field)
    fam = _Family()
    for h, f, rep in _classified(morphisms, cap or DEFAULT_CAP):
        if rep.semiseparable.status != YES:
            continue
        fam.checked += 1
        out = check_preservation(F, f, rep)
        bad = [p for p, e in out["properties"].items() if not e.get("holds", True)]
        if bad:
            fam.fail(f"{h.name}: {', '.join(bad)}")
    return fam.to_dict()


def check_duoidal_coherence(seed=0, samples=20):
    import random

    from .duoidal import additive, prebraided

    rng = random.Random(seed)
    extra = [tuple(rng.randint(0, 2) for _ in range(6)) for _ in range(samples)]
    fam = _Family()
    for D in (prebraided(), additive()):
        fam.checked += 1
        bad = D.check_coherence(samples=extra)
        if bad:
            fam.fail(f"{D.name}: {bad}")
    return fam.to_dict()


def run_corpus_checks(max_size=4, cap=None, families=FAMILIES):
    """Pass/fail per invariant family, with the first counterexample of each failing family."""
    unknown = set(families) - set(FAMILIES)
    if unknown:
        raise ValueError(f"unknown families {sorted(unknown)}")
    _, morphisms = generate_monoid_corpus(max_size)
    runners = {
        "induction-oracle": lambda: check_induction_oracle(morphisms, cap),
        "coinduction-rule": lambda: check_coinduction_rule(max_size, cap),
        "idempotents": lambda: check_idempotents(morphisms, cap),
        "linearization": lambda: check_linearization(morphisms, cap=cap),
        "duoidal-coherence": check_duoidal_coherence,
    }
    return {name: runners[name]() for name in FAMILIES if name in families}
