"""Brute-force oracles working on raw tables.

Nothing here touches the category backends: monoids are multiplication
tables, maps are tuples, and finite-field algebras are structure constants.
The conditions use the composite forms ``phi E phi = phi``, ``E phi = id`` and
``phi E = id`` rather than the unit forms used by the classifier.
"""

import itertools

PROPS = ("semiseparable", "separable", "naturally_full")


def induction_set(src, dst, phi):
    """Exhaustive search over maps ``E: dst -> src`` for monoid tables ``src``, ``dst``.

    Returns ``{prop: bool, "bimodule_maps": count}``.
    """
    n, m = len(src), len(dst)
    found = dict.fromkeys(PROPS, False)
    count = 0
    for E in itertools.product(range(n), repeat=m):
        if not all(E[dst[phi[r]][s]] == src[r][E[s]] and E[dst[s][phi[r]]] == src[E[s]][r]
                   for r in range(n) for s in range(m)):
            continue
        count += 1
        if all(phi[E[phi[r]]] == phi[r] for r in range(n)):
            found["semiseparable"] = True
        if all(E[phi[r]] == r for r in range(n)):
            found["separable"] = True
        if all(phi[E[s]] == s for s in range(m)):
            found["naturally_full"] = True
    found["bimodule_maps"] = count
    return found


def coinduction_set(n, m, psi):
    """Exhaustive search over ``chi: m -> n`` for ``psi: n -> m`` between diagonal set coalgebras.

    The bicomodule condition unfolds to ``(psi chi y, chi y) = (y, chi y)``.
    """
    found = dict.fromkeys(PROPS, False)
    count = 0
    for chi in itertools.product(range(n), repeat=m):
        if not all(psi[chi[y]] == y for y in range(m)):
            continue
        count += 1
        # counits are constant maps to the point, so the semiseparable and separable conditions are vacuous
        found["semiseparable"] = found["separable"] = True
        if all(chi[psi[x]] == x for x in range(n)):
            found["naturally_full"] = True
    found["bicomodule_maps"] = count
    return found


def induction_fp(p, R_mul, S_mul, phi):
    """Exhaustive search over all ``E: S -> R`` over ``F_p``.

    ``R_mul[i][j]`` is the coordinate vector of ``r_i r_j``; ``phi[i]`` the
    coordinate vector of ``phi(r_i)`` in S.  Dimensions must be small:
    ``p ** (dim R * dim S)`` candidates are tried.
    """
    dR, dS = len(R_mul), len(S_mul)

    def smul(x, y, table, d):
        out = [0] * d
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        for k, c in enumerate(table[i][j]):
                            out[k] = (out[k] + a * b * c) % p
        return out

    basisS = [[int(i == j) for j in range(dS)] for i in range(dS)]
    found = dict.fromkeys(PROPS, False)
    count = 0
    for flat in itertools.product(range(p), repeat=dR * dS):
        cols = [list(flat[i * dR:(i + 1) * dR]) for i in range(dS)]  # E(s_i)

        def E(v):
            out = [0] * dR
            for i, a in enumerate(v):
                if a:
                    for k in range(dR):
                        out[k] = (out[k] + a * cols[i][k]) % p
            return out

        ok = True
        for r in range(dR):
            er = [int(k == r) for k in range(dR)]
            for s in basisS:
                if (E(smul(phi[r], s, S_mul, dS)) != smul(er, E(s), R_mul, dR)
                        or E(smul(s, phi[r], S_mul, dS)) != smul(E(s), er, R_mul, dR)):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        count += 1

        def phimap(v):
            out = [0] * dS
            for i, a in enumerate(v):
                if a:
                    for k in range(dS):
                        out[k] = (out[k] + a * phi[i][k]) % p
            return out

        if all(phimap(E(phi[r])) == phi[r] for r in range(dR)):
            found["semiseparable"] = True
        if all(E(phi[r]) == [int(k == r) for k in range(dR)] for r in range(dR)):
            found["separable"] = True
        if all(phimap(E(s)) == s for s in basisS):
            found["naturally_full"] = True
    found["bimodule_maps"] = count
    return found
