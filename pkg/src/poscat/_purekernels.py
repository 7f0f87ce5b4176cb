"""Bitmask kernels, pure-Python edition.

A relation on an n-point carrier is a tuple of n ints; bit j of row i set
means (i, j) is related. This module is the fallback used when the compiled
extension is unavailable (or POSCAT_PURE is set). Both backends must
produce identical output, element for element, in identical order.
"""

from __future__ import annotations

NAME = "pure"

# Enumeration targets tiny carriers; 16 points is already far beyond any
# budget the library accepts.
MAX_ENUM_POINTS = 16


def rtclosure(rows, n):
    """Reflexive-transitive closure of an n-point relation (Warshall)."""
    out = list(rows)
    for i in range(n):
        out[i] |= 1 << i
    for k in range(n):
        rk = out[k]
        bit = 1 << k
        for i in range(n):
            if out[i] & bit:
                out[i] |= rk
    return tuple(out)


def closed_extensions(rows, n, forbidden=None):
    """All reflexive-transitive relations containing ``rows`` and avoiding
    ``forbidden``, as a list of row tuples.

    Backtracks over one undecided pair at a time: the pair is either
    excluded for good or added together with its transitive consequences,
    so every closed superset is produced exactly once. Exclusion is tried
    first, which makes the output order run from the closure of ``rows``
    itself up to the full relation.
    """
    if n > MAX_ENUM_POINTS:
        raise ValueError(f"carrier too large for enumeration: {n} > {MAX_ENUM_POINTS}")
    full = (1 << n) - 1
    cur = list(rtclosure(rows, n))
    forb = list(forbidden) if forbidden is not None else [0] * n
    for i in range(n):
        if cur[i] & forb[i]:
            return []
    out = []

    def walk(cur, forb):
        for i in range(n):
            free = full & ~(cur[i] | forb[i])
            if free:
                j = (free & -free).bit_length() - 1
                nf = forb.copy()
                nf[i] |= 1 << j
                walk(cur, nf)
                # Adding (i, j) to a closed relation closes to: every
                # predecessor of i also reaches everything j reaches.
                nc = cur.copy()
                rj = nc[j]
                bi = 1 << i
                ok = True
                for a in range(n):
                    if nc[a] & bi:
                        na = nc[a] | rj
                        if na & forb[a]:
                            ok = False
                            break
                        nc[a] = na
                if ok:
                    walk(nc, forb)
                return
        out.append(tuple(cur))

    walk(cur, forb)
    return out
