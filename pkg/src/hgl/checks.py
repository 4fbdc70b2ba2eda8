"""Degreewise linear-algebra oracles that avoid Groebner bases entirely.

Used to cross-check the engine on small graded instances.  The degree cap
comes from the HGL_MAX_DEGREE environment variable.
"""

from __future__ import annotations

import itertools
import os

from .ring import Field

DEFAULT_MAX_DEGREE = 6


def max_check_degree():
    raw = os.environ.get("HGL_MAX_DEGREE", "")
    try:
        return max(0, int(raw)) if raw.strip() else DEFAULT_MAX_DEGREE
    except ValueError:
        return DEFAULT_MAX_DEGREE


def rank_mod_p(rows, p):
    """Rank of a list of sparse rows {column: value} over F_p (Q when p == 0)."""
    field = Field(p)
    pivots = {}
    rank = 0
    for row in rows:
        r = {k: field.coerce(v) for k, v in row.items()}
        r = {k: v for k, v in r.items() if v}
        while r:
            col = max(r)
            if col not in pivots:
                inv = field.inv(r[col])
                pivots[col] = {k: field.coerce(v * inv) for k, v in r.items()}
                rank += 1
                break
            c = r[col]
            for k, v in pivots[col].items():
                nv = field.coerce(r.get(k, 0) - c * v)
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return rank


def monomials_of_degree(weights, d):
    """All exponent tuples of weighted degree d."""
    if d < 0:
        return []
    n = len(weights)
    out = []

    def rec(i, left, acc):
        if i == n - 1:
            if left % weights[i] == 0:
                out.append(tuple(acc + [left // weights[i]]))
            return
        for a in range(left // weights[i] + 1):
            rec(i + 1, left - a * weights[i], acc + [a])

    if n == 0:
        return [()] if d == 0 else []
    rec(0, d, [])
    return out


def _shift(f_terms, m):
    return {tuple(a + b for a, b in zip(e, m)): c for e, c in f_terms.items()}


def quotient_hilbert_value(polys, ring, d):
    """dim_k (S/(polys + ring relations))_d by spanning f*m in S_d."""
    gens = list(polys) + [ring(r) for r in ring.relations]
    gens = [g for g in gens if g._terms]
    basis = monomials_of_degree(ring.weights, d)
    index = {m: k for k, m in enumerate(basis)}
    rows = []
    for g in gens:
        dg = g.degree()
        for m in monomials_of_degree(ring.weights, d - dg):
            rows.append({index[e]: c for e, c in _shift(g._terms, m).items()})
    return len(basis) - rank_mod_p(rows, ring.characteristic)


def syzygy_dimension(polys, ring, d):
    """dim_k of the degree-d piece of Syz(polys) over a polynomial ring, by brute force.

    The source is (+) S(-deg f_i); its degree-d piece maps onto S_d and the
    kernel dimension is source dimension minus rank.
    """
    target = {m: k for k, m in enumerate(monomials_of_degree(ring.weights, d))}
    rows = []
    for f in polys:
        for m in monomials_of_degree(ring.weights, d - f.degree()):
            rows.append({target[e]: c for e, c in _shift(f._terms, m).items()})
    return len(rows) - rank_mod_p(rows, ring.characteristic)


def submodule_dimension(vectors, ring, shifts, d):
    """dim_k of the degree-d piece of the submodule of (+) S(-shift) spanned by vectors."""
    cols = {}
    rows = []
    for v in vectors:
        if not v:
            continue
        c0, e0 = next(iter(v))
        dv = ring.weighted_degree(e0) + shifts[c0]
        for m in monomials_of_degree(ring.weights, d - dv):
            row = {}
            for (c, e), a in v.items():
                key = (c, tuple(x + y for x, y in zip(e, m)))
                row[cols.setdefault(key, len(cols))] = a
            rows.append(row)
    return rank_mod_p(rows, ring.characteristic)


def all_monomials_up_to(nvars, d):
    return [e for e in itertools.product(range(d + 1), repeat=nvars) if sum(e) <= d]
