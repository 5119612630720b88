import itertools

import pytest

from semisep.corpus import (CORPUS_CHECKSUM, FAMILIES, corpus_checksum, corpus_json, generate_monoid_corpus,
                            run_corpus_checks)


def brute_monoids(n):
    """Unital associative tables on range(n) with unit 0, one per isomorphism class."""
    if n == 1:
        return [((0,),)]
    free = [(i, j) for i in range(1, n) for j in range(1, n)]
    seen, out = set(), []
    for vals in itertools.product(range(n), repeat=len(free)):
        t = [[j if i == 0 else (i if j == 0 else None) for j in range(n)] for i in range(n)]
        for (i, j), v in zip(free, vals):
            t[i][j] = v
        if any(t[t[a][b]][c] != t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n)):
            continue
        forms = []
        for perm in itertools.permutations(range(1, n)):
            p = (0,) + perm
            inv = {p[i]: i for i in range(n)}
            forms.append(tuple(tuple(p[t[inv[a]][inv[b]]] for b in range(n)) for a in range(n)))
        key = min(forms)
        if key not in seen:
            seen.add(key)
            out.append(key)
    return out


def test_size_one_is_trivial():
    monoids, morphisms = generate_monoid_corpus(1)
    assert [m.table for m in monoids] == [((0,),)]
    assert len(morphisms) == 1


def test_size_two_structures():
    monoids, _ = generate_monoid_corpus(2)
    two = sorted(m.table for m in monoids if m.size == 2)
    # a a = e and a a = a
    assert two == [((0, 1), (1, 0)), ((0, 1), (1, 1))]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_counts_match_brute_force(n):
    monoids, _ = generate_monoid_corpus(n)
    assert sum(1 for m in monoids if m.size == n) == len(brute_monoids(n))


def test_counts_up_to_four():
    monoids, morphisms = generate_monoid_corpus(4)
    assert [sum(1 for m in monoids if m.size == k) for k in (1, 2, 3, 4)] == [1, 2, 7, 35]
    assert len(morphisms) == 7894


def _is_hom(f, s, d):
    n = len(s)
    return f[0] == 0 and all(f[s[a][b]] == d[f[a]][f[b]] for a in range(n) for b in range(n))


def test_morphisms_between_size_three_monoids():
    monoids, morphisms = generate_monoid_corpus(3)
    threes = [m for m in monoids if m.size == 3]
    for src in threes:
        for dst in threes:
            expected = sum(1 for f in itertools.product(range(3), repeat=3) if _is_hom(f, src.table, dst.table))
            got = [h for h in morphisms if h.src.name == src.name and h.dst.name == dst.name]
            assert len(got) == expected
            assert all(_is_hom(h.map, src.table, dst.table) for h in got)


def test_checksum_and_determinism():
    assert corpus_checksum(4) == CORPUS_CHECKSUM
    assert corpus_json(3) == corpus_json(3)
    a, b = generate_monoid_corpus(3), generate_monoid_corpus(3)
    assert [m.table for m in a[0]] == [m.table for m in b[0]]
    assert [(h.src.name, h.dst.name, h.map) for h in a[1]] == [(h.src.name, h.dst.name, h.map) for h in b[1]]


def test_small_run_is_green():
    out = run_corpus_checks(max_size=2)
    assert set(out) == set(FAMILIES)
    assert all(v["ok"] and v["failures"] == 0 for v in out.values())


def test_low_cap_gives_unknowns_but_no_false_negatives():
    out = run_corpus_checks(max_size=3, cap=10, families=("induction-oracle", "coinduction-rule"))
    assert out["induction-oracle"]["unknown"] > 0
    assert out["coinduction-rule"]["unknown"] > 0
    assert all(v["failures"] == 0 for v in out.values())


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        run_corpus_checks(max_size=1, families=("nope",))
