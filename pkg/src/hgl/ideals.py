"""Ideals, subquotient modules and the operations built on Groebner bases.

Colon, saturation, intersection, powers, lengths, Hilbert functions, Krull
dimension and Artin-Rees indices.  Lengths are k-dimensions obtained by
counting standard monomials; they are exact integers or :data:`INFINITE`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .groebner import (
    FreeModuleElement,
    GroebnerBasis,
    ModuleOrder,
    buchberger,
    kernel_mod,
    minimal_generators,
    relation_columns,
    vec_axpy,
    vec_lincomb,
    vec_mul_poly,
    vector_degrees,
)
from .ring import MonomialOrder, Polynomial, RingError


class _Infinite:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INFINITE"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


class ContainmentError(RingError):
    """A submodule that should contain another does not."""


def _poly_vec(f):
    return {(0, e): c for e, c in f._terms.items()}


def _vec_poly(ring, v):
    return Polynomial(ring, {e: c for (_, e), c in v.items()})


class Ideal:
    """Ideal of a ring given by generators; the reduced basis is computed lazily."""

    def __init__(self, ring, generators=()):
        self.ring = ring
        gens = []
        for g in generators:
            g = ring(g)
            if g:
                gens.append(g)
        self.generators = tuple(gens)

    @cached_property
    def gb(self) -> GroebnerBasis:
        return buchberger(self.generators, self.ring)

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.generators)})"

    def __contains__(self, f):
        return self.gb.contains(self.ring(f))

    def contains_ideal(self, other):
        return all(g in self for g in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.gb.same_module(other.gb)

    __hash__ = None

    def is_unit(self):
        return self.gb.is_unit()

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def __add__(self, other):
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other):
        return Ideal(self.ring, _dedupe(self.ring, [a * b for a in self.generators
                                                    for b in other.generators]))

    def __pow__(self, n):
        return ideal_power(self, n)

    def minimal(self):
        """Same ideal with redundant generators dropped (minimal when homogeneous)."""
        vecs = minimal_generators([_poly_vec(g) for g in self.generators], self.ring, 1)
        return Ideal(self.ring, [_vec_poly(self.ring, v) for v in vecs])

    def quotient(self):
        """The cyclic module R/J."""
        return Module(self.ring, 1, None, [_poly_vec(g) for g in self.generators])

    def as_module(self):
        """J as a submodule of R^1."""
        return Module(self.ring, 1, [_poly_vec(g) for g in self.generators], [])


def _dedupe(ring, polys):
    """Drop zero and repeated products, compared by normal form modulo the relations."""
    if ring._rel_terms:
        rel = buchberger([], ring)
        polys = [rel.normal_form(f) for f in polys]
    seen = set()
    out = []
    for f in polys:
        if not f:
            continue
        k = frozenset(f._terms.items())
        if k not in seen:
            seen.add(k)
            out.append(f)
    return out


def ideal_power(I, n):
    """I^n from all degree-n products of the generators; I^0 is the unit ideal."""
    if n < 0:
        raise RingError("power must be nonnegative")
    if n == 0:
        return Ideal(I.ring, [1])
    cur = list(I.generators)
    for _ in range(n - 1):
        cur = _dedupe(I.ring, [a * b for a in cur for b in I.generators])
    return Ideal(I.ring, _dedupe(I.ring, cur))


def _colon_vecs(J_vecs, g_vec, ring, rank):
    mods = list(J_vecs) + relation_columns(ring, rank)
    return kernel_mod([g_vec], mods, ring, rank)


def colon(J, g):
    """(J : g) for a polynomial g, or (J : K) for an ideal K."""
    ring = J.ring
    if isinstance(g, Ideal):
        gens = g.generators
        if not gens:
            raise RingError("colon by the zero ideal")
        s = len(gens)
        # r with r*g_i in J for every i: one kernel computation in S^s
        vec = {(i, e): c for i, f in enumerate(gens) for e, c in f._terms.items()}
        mods = [{(i, e): c for e, c in f._terms.items()} for i in range(s)
                for f in J.generators]
        ker = kernel_mod([vec], mods + relation_columns(ring, s), ring, s)
    else:
        g = ring(g)
        if not g:
            raise RingError("colon by the zero polynomial")
        ker = _colon_vecs([_poly_vec(f) for f in J.generators], _poly_vec(g), ring, 1)
    return Ideal(ring, [_vec_poly(ring, v) for v in ker]).minimal()


def saturate(J, K):
    """(J : K^infinity) and the number of colon steps before it stabilizes."""
    if not K.generators:
        raise RingError("saturation by the zero ideal")
    cur = J
    k = 0
    while True:
        nxt = colon(cur, K)
        if nxt == cur:
            return cur, k
        cur = nxt
        k += 1


def intersect(A, B):
    """Intersection of two ideals (elimination) or two submodules (syzygies)."""
    if isinstance(A, Ideal):
        return _intersect_ideals(A, B)
    return _intersect_modules(A, B)


def _intersect_ideals(A, B):
    ring = A.ring
    T = ring.extend(("_t",), order=MonomialOrder("elim", 1), front=True)

    def lift(f):
        return Polynomial(T, {(0,) + e: c for e, c in f._terms.items()})

    t = T.var(0)
    gens = [t * lift(f) for f in A.generators] + [(1 - t) * lift(f) for f in B.generators]
    gb = buchberger(gens, T)
    out = [Polynomial(ring, {e[1:]: c for e, c in f._terms.items()})
           for f in gb.polynomials() if all(e[0] == 0 for e in f._terms)]
    return Ideal(ring, out).minimal()


def _intersect_modules(A, B):
    if A.rank != B.rank or A.ring != B.ring:
        raise RingError("submodules of different free modules")
    ring, r = A.ring, A.rank
    ga, gb_ = A._gens, B._gens
    ker = kernel_mod(ga, list(gb_) + relation_columns(ring, r), ring, r, A.shifts)
    polys = [[{e: c for (k, e), c in v.items() if k == i} for i in range(len(ga))] for v in ker]
    vecs = [vec_lincomb(cs, ga, ring.characteristic) for cs in polys]
    vecs = minimal_generators(vecs, ring, r, A.shifts)
    return Module(ring, r, vecs, [], A.shifts)


# -- modules ---------------------------------------------------------------------

class Module:
    """Subquotient (span(generators) + span(relations)) / span(relations) of R^rank.

    ``generators=None`` means the standard basis, i.e. the cokernel of the
    relation columns.  Ring relations are always implied.  ``shifts`` are the
    degrees of the ambient basis vectors.
    """

    def __init__(self, ring, rank, generators=None, relations=(), shifts=None):
        self.ring = ring
        self.rank = rank
        self.shifts = tuple(shifts) if shifts is not None else (0,) * rank
        if len(self.shifts) != rank:
            raise RingError("one shift per ambient basis vector")
        if generators is None:
            self._gens = [{(i, ring.zero_exp): 1} for i in range(rank)]
            self.is_cokernel = True
        else:
            self._gens = [_raw(v) for v in generators]
            self.is_cokernel = False
        self._rels = [_raw(v) for v in relations if v]

    @classmethod
    def free(cls, ring, rank, shifts=None):
        return cls(ring, rank, None, [], shifts)

    @classmethod
    def cokernel(cls, ring, rank, columns, shifts=None):
        return cls(ring, rank, None, columns, shifts)

    @property
    def generators(self):
        return [FreeModuleElement(self.ring, self.rank, v) for v in self._gens]

    @property
    def relations(self):
        return [FreeModuleElement(self.ring, self.rank, v) for v in self._rels]

    def __repr__(self):
        kind = "coker" if self.is_cokernel else "subquotient"
        return f"Module({kind}, rank={self.rank}, gens={len(self._gens)}, rels={len(self._rels)})"

    @cached_property
    def relation_gb(self) -> GroebnerBasis:
        return buchberger(self._rels, self.ring, ModuleOrder("top", self.shifts), self.rank)

    @cached_property
    def presentation(self):
        """An isomorphic cokernel module with constant entries pruned."""
        if self.is_cokernel:
            return prune_presentation(self)
        return present_subquotient(self._gens, self._rels, self.ring, self.rank, self.shifts)

    def length(self):
        return length(self)

    def hilbert_function(self, d):
        return hilbert_function(self, d)

    def dim(self):
        return module_dim(self)

    def annihilator(self):
        return annihilator(self)

    def is_zero(self):
        return self.length() == 0


def _raw(v):
    if isinstance(v, FreeModuleElement):
        return dict(v._terms)
    return dict(v)


def prune_presentation(M):
    """Remove generators killed by relations with a unit entry (graded minimal pruning)."""
    ring = M.ring
    rank = M.rank
    rels = [dict(v) for v in M._rels]
    shifts = list(M.shifts)
    z = ring.zero_exp
    p = ring.characteristic
    alive = list(range(rank))
    changed = True
    while changed:
        changed = False
        for k, v in enumerate(rels):
            pivot = None
            for (c, e), a in v.items():
                if e == z and all(cc != c or ee == z for (cc, ee) in v):
                    pivot = c
                    break
            if pivot is None:
                continue
            inv = ring.field.inv(v[(pivot, z)])
            new = []
            for j, w in enumerate(rels):
                if j == k:
                    continue
                comp = {e: a for (c, e), a in w.items() if c == pivot}
                if comp:
                    w = dict(w)
                    for e, a in comp.items():
                        vec_axpy(w, v, e, a * inv, p)
                new.append(w)
            rels = [w for w in new if w]
            alive.remove(pivot)
            changed = True
            break
    if not alive:
        return Module(ring, 1, None, [{(0, z): 1}], (0,))
    remap = {c: i for i, c in enumerate(alive)}
    rels = [{(remap[c], e): a for (c, e), a in v.items()} for v in rels]
    rels = minimal_generators(rels, ring, len(alive), tuple(shifts[c] for c in alive))
    return Module(ring, len(alive), None, rels, tuple(shifts[c] for c in alive))


def present_subquotient(K, Jsub, ring, rank, shifts=None):
    """Cokernel presentation of (span K + span Jsub)/span Jsub on K's generators."""
    K = [_raw(v) for v in K]
    Jsub = [_raw(v) for v in Jsub]
    sh = tuple(shifts) if shifts is not None else (0,) * rank
    K = minimal_generators(K, ring, rank, sh, mods=Jsub)
    if not K:
        return Module(ring, 1, None, [{(0, ring.zero_exp): 1}], (0,))
    ker = kernel_mod(K, Jsub + relation_columns(ring, rank), ring, rank, sh)
    degs = vector_degrees(K, ring, rank, sh)
    return prune_presentation(Module(ring, len(K), None, ker, degs))


def check_contained(Jsub, K, ring, rank):
    gb = buchberger([_raw(v) for v in K], ring, rank=rank)
    for v in Jsub:
        if not gb.contains(_raw(v)):
            raise ContainmentError("subquotient relations are not inside the generators' span")


def subquotient(K, Jsub, ring=None, rank=None, shifts=None, check=True):
    """K/Jsub for ideals, or for lists of FreeModuleElements or polynomials."""
    for X in (K, Jsub):
        if isinstance(X, Ideal):
            ring = ring or X.ring
    K = list(K.generators) if isinstance(K, Ideal) else list(K)
    Jsub = list(Jsub.generators) if isinstance(Jsub, Ideal) else list(Jsub)
    if not K and not Jsub and ring is None:
        raise RingError("cannot infer the ring of an empty subquotient")
    first = (K + Jsub)[0] if K or Jsub else None
    if ring is None:
        ring = first.ring
    if rank is None:
        rank = first.rank if isinstance(first, FreeModuleElement) else 1
    K = [_as_vec(v, ring) for v in K]
    Jsub = [_as_vec(v, ring) for v in Jsub]
    if check:
        check_contained(Jsub, K, ring, rank)
    return present_subquotient(K, Jsub, ring, rank, shifts)


def _as_vec(v, ring):
    if isinstance(v, FreeModuleElement):
        return dict(v._terms)
    if isinstance(v, dict):
        return dict(v)
    return _poly_vec(ring(v))


# -- counting --------------------------------------------------------------------

def _standard_count(leads, nvars):
    """Number of monomials outside the monomial ideal generated by ``leads``."""
    if not leads:
        return INFINITE
    if any(not any(e) for e in leads):
        return 0
    bounds = [None] * nvars
    for e in leads:
        nz = [i for i, a in enumerate(e) if a]
        if len(nz) == 1:
            i = nz[0]
            if bounds[i] is None or e[i] < bounds[i]:
                bounds[i] = e[i]
    if any(b is None for b in bounds):
        return INFINITE
    return _count_box(leads, bounds)


def _count_box(leads, bounds):
    n = len(bounds)
    count = 0

    def rec(i, prefix, live):
        nonlocal count
        if i == n:
            count += 1
            return
        for a in range(bounds[i]):
            cur = prefix + (a,)
            # keep only generators whose first i+1 coordinates still fit
            nl = [e for e in live if e[i] <= a]
            if any(all(x == 0 for x in e[i + 1:]) for e in nl):
                break
            rec(i + 1, cur, nl)

    rec(0, (), list(leads))
    return count


def length(M):
    """k-dimension of R/J (for an Ideal) or of a Module; INFINITE when not finite."""
    if isinstance(M, Ideal):
        M = M.quotient()
    P = M.presentation
    gb = P.relation_gb
    total = 0
    for c, leads in gb.lead_exponents_by_component().items():
        n = _standard_count(leads, M.ring.nvars)
        if n is INFINITE:
            return INFINITE
        total += n
    return total


def _monomials_of_degree(weights, d):
    n = len(weights)
    out = []

    def rec(i, rem, cur):
        if i == n - 1:
            if rem % weights[i] == 0:
                out.append(cur + (rem // weights[i],))
            return
        for a in range(rem // weights[i] + 1):
            rec(i + 1, rem - a * weights[i], cur + (a,))

    if d >= 0:
        rec(0, d, ())
    return out


def hilbert_function(M, d):
    """dim_k of the degree-d piece of a graded module (or of R/J)."""
    if isinstance(M, Ideal):
        if not M.is_homogeneous():
            raise RingError("Hilbert function of an inhomogeneous ideal")
        M = M.quotient()
    P = M.presentation
    ring = M.ring
    for v in P._rels:
        if len({ring.weighted_degree(e) + P.shifts[c] for c, e in v}) > 1:
            raise RingError("Hilbert function of an inhomogeneous module")
    gb = P.relation_gb
    total = 0
    for c, leads in gb.lead_exponents_by_component().items():
        for e in _monomials_of_degree(ring.weights, d - P.shifts[c]):
            if not any(all(x <= y for x, y in zip(g, e)) for g in leads):
                total += 1
    return total


def _monomial_dim(leads, nvars):
    if any(not any(e) for e in leads):
        return -1
    supports = [frozenset(i for i, a in enumerate(e) if a) for e in leads]
    for size in range(nvars, -1, -1):
        for U in itertools.combinations(range(nvars), size):
            U = frozenset(U)
            if not any(s <= U for s in supports):
                return size
    return -1


def krull_dim(J):
    """Dimension of R/J (ring relations included); -1 for the unit ideal."""
    if isinstance(J, Module):
        return module_dim(J)
    return _monomial_dim([e for _, e in J.gb.leading_terms], J.ring.nvars)


def module_dim(M):
    """Krull dimension of a module; -1 for the zero module."""
    P = M.presentation
    gb = P.relation_gb
    return max(_monomial_dim(leads, M.ring.nvars)
               for leads in gb.lead_exponents_by_component().values())


def annihilator(M):
    """ann_R(M) as an ideal: r with r*g in relations for every generator g."""
    ring = M.ring
    P = M.presentation
    r = P.rank
    gens = P._gens
    s = len(gens)
    vec = {}
    for i, g in enumerate(gens):
        for (c, e), a in g.items():
            vec[(i * r + c, e)] = a
    mods = []
    for i in range(s):
        for v in P._rels + relation_columns(ring, r):
            mods.append({(i * r + c, e): a for (c, e), a in v.items()})
    ker = kernel_mod([vec], mods, ring, s * r)
    return Ideal(ring, [_vec_poly(ring, v) for v in ker]).minimal()


# -- Artin-Rees --------------------------------------------------------------------

def ideal_times_module(I, A):
    """I*A for an ideal I and a submodule A (generators only)."""
    ring = A.ring
    p = ring.characteristic
    vecs = [vec_mul_poly(v, f._terms, p) for f in I.generators for v in A._gens]
    return Module(ring, A.rank, [v for v in vecs if v], [], A.shifts)


def submodule(ring, rank, vectors, shifts=None):
    """A plain submodule of R^rank (no relations)."""
    return Module(ring, rank, [_as_vec(v, ring) if rank == 1 else _raw(v) for v in vectors],
                  [], shifts)


def same_submodule(A, B):
    ga = buchberger(A._gens, A.ring, ModuleOrder("top", A.shifts), A.rank)
    gb = buchberger(B._gens, B.ring, ModuleOrder("top", B.shifts), B.rank)
    return ga.same_module(gb)


@dataclass
class ArtinReesResult:
    index: int | None
    window: tuple
    certified: list
    message: str = ""

    @property
    def ok(self):
        return self.index is not None


def artin_rees_index(M, N, I, window=(0, 8)):
    """Smallest k with I^n M cap N = I^(n-k) (I^k M cap N) for every n in [k, window max].

    Each equality is certified by mutual Groebner membership.  The result
    lists (n, k) pairs that were checked; ``index`` is None if the window
    runs out first.
    """
    lo, hi = window
    caps = {}
    powers = {}

    def power(n):
        if n not in powers:
            powers[n] = ideal_power(I, n)
        return powers[n]

    def cap(n):
        if n not in caps:
            caps[n] = intersect(ideal_times_module(power(n), M), N)
        return caps[n]

    for k in range(lo, hi + 1):
        certified = []
        ok = True
        for n in range(k, hi + 1):
            rhs = ideal_times_module(power(n - k), cap(k)) if n > k else cap(k)
            if not same_submodule(cap(n), rhs):
                ok = False
                break
            certified.append((n, k))
        if ok:
            return ArtinReesResult(k, (lo, hi), certified)
    return ArtinReesResult(None, (lo, hi), [], "window exhausted without stabilization")
