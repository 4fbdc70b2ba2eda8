"""Buchberger's algorithm for submodules of free modules, normal forms, syzygies.

Everything here works over the free polynomial ring S.  A quotient ring
S/(f) is handled by throwing the relation columns f*e_j in with the
generators, so a basis computed for a ring with a relation is a basis of the
preimage submodule of S^r.

Vectors are plain dicts ``{(component, exponent_tuple): coefficient}``; the
public :class:`FreeModuleElement` wraps one together with its ring and rank.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .ring import Polynomial, Ring, RingError, format_terms


@dataclass(frozen=True)
class ModuleOrder:
    """Extension of the ring's monomial order to a free module.

    ``top`` (term over position, the default) or ``pot`` (position over term).
    ``shifts`` are degree shifts of the basis vectors; with shifts, ``top``
    compares shifted degrees first.
    """

    kind: str = "top"
    shifts: tuple = None

    def __post_init__(self):
        if self.kind not in ("top", "pot"):
            raise RingError(f"unknown module order {self.kind!r}")

    def key_function(self, ring):
        mkey = ring.mkey
        cache = {}
        if self.kind == "pot":
            def key(t):
                try:
                    return cache[t]
                except KeyError:
                    r = cache[t] = (-t[0], mkey(t[1]))
                    return r
            return key
        if self.shifts is None:
            def key(t):
                try:
                    return cache[t]
                except KeyError:
                    r = cache[t] = (mkey(t[1]), -t[0])
                    return r
            return key
        sh = self.shifts
        wdeg = ring.weighted_degree

        def key(t):
            try:
                return cache[t]
            except KeyError:
                r = cache[t] = (wdeg(t[1]) + sh[t[0]], mkey(t[1]), -t[0])
                return r
        return key


class FreeModuleElement:
    """Element of a free module R^rank, stored sparsely over the ambient ring."""

    __slots__ = ("ring", "rank", "_terms")

    def __init__(self, ring, rank, terms=None):
        if rank < 1:
            raise RingError("a free module needs rank >= 1")
        self.ring = ring
        self.rank = rank
        p = ring.characteristic
        clean = {}
        for (c, e), v in (terms or {}).items():
            if not 0 <= c < rank:
                raise RingError(f"component {c} out of range for rank {rank}")
            if p:
                v %= p
            if v:
                clean[(c, tuple(e))] = v
        self._terms = clean

    @classmethod
    def from_polys(cls, polys, ring=None):
        polys = list(polys)
        if ring is None:
            ring = next(f.ring for f in polys if isinstance(f, Polynomial))
        terms = {}
        for c, f in enumerate(polys):
            f = ring(f)
            for e, v in f._terms.items():
                terms[(c, e)] = v
        return cls(ring, len(polys), terms)

    @classmethod
    def basis(cls, ring, rank, i):
        return cls(ring, rank, {(i, ring.zero_exp): 1})

    @property
    def components(self):
        comps = {}
        for (c, e), v in self._terms.items():
            comps.setdefault(c, {})[e] = v
        return {c: Polynomial(self.ring, t) for c, t in sorted(comps.items())}

    def __getitem__(self, i):
        return Polynomial(self.ring, {e: v for (c, e), v in self._terms.items() if c == i})

    def to_list(self):
        return [self[i] for i in range(self.rank)]

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _check(self, other):
        if not isinstance(other, FreeModuleElement) or other.rank != self.rank:
            raise RingError("rank mismatch")

    def __add__(self, other):
        self._check(other)
        return FreeModuleElement(self.ring, self.rank,
                                 vec_axpy(dict(self._terms), other._terms, None, -1,
                                          self.ring.characteristic))

    def __sub__(self, other):
        self._check(other)
        return FreeModuleElement(self.ring, self.rank,
                                 vec_axpy(dict(self._terms), other._terms, None, 1,
                                          self.ring.characteristic))

    def __neg__(self):
        return FreeModuleElement(self.ring, self.rank, {t: -v for t, v in self._terms.items()})

    def scale(self, f):
        """Multiply by a ring element."""
        f = self.ring(f)
        return FreeModuleElement(self.ring, self.rank,
                                 vec_mul_poly(self._terms, f._terms, self.ring.characteristic))

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, FreeModuleElement):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self):
        return hash((self.rank, frozenset(self._terms.items())))

    def degree(self, shifts=None):
        if not self._terms:
            return None
        sh = shifts or (0,) * self.rank
        return max(self.ring.weighted_degree(e) + sh[c] for c, e in self._terms)

    def __repr__(self):
        return f"FreeModuleElement({self})"

    def __str__(self):
        if self.rank == 1:
            return str(self[0])
        return "[" + ", ".join(str(f) for f in self.to_list()) + "]"


# -- raw vector kernels ---------------------------------------------------------

def _addexp(a, b):
    return tuple([x + y for x, y in zip(a, b)])


def vec_axpy(v, w, shift, c, p):
    """In place ``v -= c * x^shift * w`` (``shift=None`` means 1). Returns ``v``."""
    get = v.get
    if shift is None:
        for t, a in w.items():
            x = get(t, 0) - c * a
            if p:
                x %= p
            if x:
                v[t] = x
            elif t in v:
                del v[t]
        return v
    for (comp, e), a in w.items():
        t = (comp, tuple([x + y for x, y in zip(e, shift)]))
        x = get(t, 0) - c * a
        if p:
            x %= p
        if x:
            v[t] = x
        elif t in v:
            del v[t]
    return v


def vec_mul_poly(v, f, p):
    out = {}
    for (comp, e), a in v.items():
        for ef, b in f.items():
            t = (comp, _addexp(e, ef))
            x = out.get(t, 0) + a * b
            if p:
                x %= p
            if x:
                out[t] = x
            else:
                out.pop(t, None)
    return out


def vec_scale(v, c, p):
    if p:
        return {t: a * c % p for t, a in v.items()}
    return {t: a * c for t, a in v.items()}


def vec_lincomb(coeffs, vecs, p):
    """sum_k coeffs[k] * vecs[k]; ``coeffs`` are polynomial term dicts."""
    out = {}
    for f, v in zip(coeffs, vecs):
        if not f or not v:
            continue
        for ef, b in f.items():
            vec_axpy(out, v, ef, -b, p)
    return out


def relation_columns(ring, rank):
    """The vectors f*e_j spanning (f)R^rank for each defining relation f."""
    out = []
    for f in ring._rel_terms:
        for j in range(rank):
            out.append({(j, e): c for e, c in f.items()})
    return out


class _Elt:
    __slots__ = ("lead", "vec")

    def __init__(self, lead, vec):
        self.lead = lead
        self.vec = vec


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def reduce_vector(vec, by_comp, key, p, full=True):
    """Division of ``vec`` by monic elements grouped by lead component."""
    vec = dict(vec)
    rem = {}
    while vec:
        t = max(vec, key=key)
        c = vec[t]
        comp, e = t
        for g in by_comp.get(comp, ()):
            ge = g.lead[1]
            if _divides(ge, e):
                vec_axpy(vec, g.vec, tuple([y - x for x, y in zip(ge, e)]), c, p)
                break
        else:
            if not full:
                vec.update(rem)
                return vec
            rem[t] = c
            del vec[t]
    return rem


def _monic(vec, key, field):
    t = max(vec, key=key)
    inv = field.inv(vec[t])
    if inv != 1:
        vec = vec_scale(vec, inv, field.p)
    return t, vec


def _lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


class _Run:
    """State of one Buchberger computation (Gebauer-Moeller pair bookkeeping)."""

    def __init__(self, ring, key, sugar, product_criterion):
        self.ring = ring
        self.field = ring.field
        self.p = ring.characteristic
        self.key = key
        self.sugar = sugar
        self.product = product_criterion
        self.G = []
        self.by_comp = {}
        self.pairs = set()
        self.heap = []

    def seed(self, elts):
        for g in elts:
            self.G.append(g)
            self.by_comp.setdefault(g.lead[0], []).append(g)

    def _push(self, i, j, lcm):
        self.pairs.add((i, j))
        heapq.heappush(self.heap, ((self.sugar(lcm), self.key(lcm)), i, j))

    def add(self, vec):
        lead, vec = _monic(vec, self.key, self.field)
        h = len(self.G)
        comp, eh = lead
        cand = {}
        for i, g in enumerate(self.G):
            if g.lead[0] == comp:
                cand[i] = _lcm(g.lead[1], eh)
        # B criterion on existing pairs
        dead = []
        for (i, j) in self.pairs:
            gi, gj = self.G[i], self.G[j]
            if gi.lead[0] != comp:
                continue
            L = _lcm(gi.lead[1], gj.lead[1])
            if _divides(eh, L) and cand[i] != L and cand[j] != L:
                dead.append((i, j))
        for d in dead:
            self.pairs.discard(d)
        # M criterion
        items = list(cand.items())
        keep = {}
        for i, L in items:
            if any(L2 != L and _divides(L2, L) for _, L2 in items):
                continue
            keep[i] = L
        # F criterion plus product criterion
        groups = {}
        for i, L in keep.items():
            groups.setdefault(L, []).append(i)
        for L, idx in groups.items():
            if self.product:
                if any(all(a == 0 or b == 0 for a, b in zip(self.G[i].lead[1], eh)) for i in idx):
                    continue
            self._push(min(idx), h, (comp, L))
        g = _Elt(lead, vec)
        self.G.append(g)
        self.by_comp.setdefault(comp, []).append(g)

    def run(self):
        while self.heap:
            _, i, j = heapq.heappop(self.heap)
            if (i, j) not in self.pairs:
                continue
            self.pairs.discard((i, j))
            gi, gj = self.G[i], self.G[j]
            L = _lcm(gi.lead[1], gj.lead[1])
            s = {}
            vec_axpy(s, gi.vec, tuple([a - b for a, b in zip(L, gi.lead[1])]), -1, self.p)
            vec_axpy(s, gj.vec, tuple([a - b for a, b in zip(L, gj.lead[1])]), 1, self.p)
            r = reduce_vector(s, self.by_comp, self.key, self.p, full=False)
            if r:
                self.add(r)


def _make_sugar(ring, shifts):
    wdeg = ring.weighted_degree
    if shifts is None:
        return lambda t: wdeg(t[1])
    return lambda t: wdeg(t[1]) + shifts[t[0]]


def groebner_elements(vecs, ring, key, sugar=None, start=(), product_criterion=False):
    """Run Buchberger; returns the (non-reduced) list of monic basis elements."""
    run = _Run(ring, key, sugar or _make_sugar(ring, None), product_criterion)
    run.seed(start)
    todo = [dict(v) for v in vecs if v]
    todo.sort(key=lambda v: key(max(v, key=key)))
    for v in todo:
        r = reduce_vector(v, run.by_comp, key, run.p, full=False)
        if r:
            run.add(r)
    run.run()
    return run.G


def reduce_basis(G, key, ring):
    """Minimalize and interreduce a Groebner basis (monic, unique for the order)."""
    G = sorted(G, key=lambda g: key(g.lead))
    minimal = []
    for g in G:
        c, e = g.lead
        if any(h.lead[0] == c and _divides(h.lead[1], e) for h in minimal):
            continue
        minimal.append(g)
    out = []
    p = ring.characteristic
    for g in minimal:
        others = {}
        for h in minimal:
            if h is not g:
                others.setdefault(h.lead[0], []).append(h)
        v = reduce_vector(g.vec, others, key, p, full=True)
        lead, v = _monic(v, key, ring.field)
        out.append(_Elt(lead, v))
    return out


def _as_vector(x, ring, rank):
    if isinstance(x, FreeModuleElement):
        if x.rank != rank:
            raise RingError(f"rank mismatch: expected {rank}, got {x.rank}")
        return dict(x._terms)
    if isinstance(x, dict):
        return dict(x)
    if rank == 1:
        f = ring(x)
        return {(0, e): c for e, c in f._terms.items()}
    raise RingError(f"cannot interpret {x!r} as a vector of rank {rank}")


class GroebnerBasis:
    """Reduced Groebner basis of a submodule of R^rank (preimage in S^rank)."""

    def __init__(self, ring, rank, elts, order, reduced=True):
        self.ring = ring
        self.rank = rank
        self.order = order
        self.reduced = reduced
        self.key = order.key_function(ring)
        self._elts = list(elts)
        self._elts.sort(key=lambda g: self.key(g.lead), reverse=True)
        self._by_comp = {}
        for g in self._elts:
            self._by_comp.setdefault(g.lead[0], []).append(g)

    def __getstate__(self):
        d = dict(self.__dict__)
        d.pop("key")
        return d

    def __setstate__(self, d):
        self.__dict__.update(d)
        self.key = self.order.key_function(self.ring)

    @property
    def generators(self):
        return [FreeModuleElement(self.ring, self.rank, g.vec) for g in self._elts]

    def polynomials(self):
        if self.rank != 1:
            raise RingError("not an ideal basis")
        return [g[0] for g in self.generators]

    @property
    def leading_terms(self):
        return [g.lead for g in self._elts]

    def __len__(self):
        return len(self._elts)

    def reduce(self, v, full=True):
        return reduce_vector(_as_vector(v, self.ring, self.rank), self._by_comp, self.key,
                             self.ring.characteristic, full)

    def normal_form(self, v):
        """Remainder of ``v``; a polynomial in, a polynomial out (rank 1)."""
        r = FreeModuleElement(self.ring, self.rank, self.reduce(v))
        if self.rank == 1 and not isinstance(v, (FreeModuleElement, dict)):
            return r[0]
        return r

    def contains(self, v):
        return not self.reduce(v, full=False)

    def contains_all(self, vs):
        return all(self.contains(v) for v in vs)

    def same_module(self, other):
        """Mutual containment of the spanned modules."""
        return self.contains_all(g.vec for g in other._elts) and \
            other.contains_all(g.vec for g in self._elts)

    def lead_exponents_by_component(self):
        out = {c: [] for c in range(self.rank)}
        for c, e in self.leading_terms:
            out[c].append(e)
        return out

    def is_unit(self):
        return any(not any(e) for _, e in self.leading_terms) and self.rank == 1

    def __str__(self):
        lines = []
        for g in self.generators:
            if self.rank == 1:
                lines.append(str(g[0]))
            else:
                lines.append("[" + ", ".join(format_terms(g[i].terms, self.ring)
                                             for i in range(self.rank)) + "]")
        return "\n".join(lines)


def buchberger(gens, ring, order=None, rank=None, start=None):
    """Reduced Groebner basis of the module spanned by ``gens`` (plus relation columns).

    ``gens`` may be polynomials (rank 1), FreeModuleElements or raw vectors.
    ``start`` is an existing GroebnerBasis to extend incrementally.
    """
    gens = list(gens)
    if rank is None:
        if start is not None:
            rank = start.rank
        elif gens and isinstance(gens[0], FreeModuleElement):
            rank = gens[0].rank
        else:
            rank = 1
    order = order or (start.order if start is not None else ModuleOrder())
    key = order.key_function(ring)
    vecs = [_as_vector(g, ring, rank) for g in gens]
    if start is None:
        vecs += relation_columns(ring, rank)
        seed = ()
    else:
        seed = [_Elt(g.lead, g.vec) for g in start._elts]
    G = groebner_elements(vecs, ring, key, _make_sugar(ring, order.shifts), seed,
                          product_criterion=(rank == 1))
    return GroebnerBasis(ring, rank, reduce_basis(G, key, ring), order)


def normal_form(v, gb):
    """Remainder of ``v`` on division by ``gb``; zero iff ``v`` lies in the module."""
    return gb.normal_form(v)


def s_pair_remainders(gb):
    """Remainders of all S-pairs of ``gb`` (all zero for a Groebner basis)."""
    out = []
    p = gb.ring.characteristic
    elts = gb._elts
    for i in range(len(elts)):
        for j in range(i + 1, len(elts)):
            gi, gj = elts[i], elts[j]
            if gi.lead[0] != gj.lead[0]:
                continue
            L = _lcm(gi.lead[1], gj.lead[1])
            s = {}
            vec_axpy(s, gi.vec, tuple(a - b for a, b in zip(L, gi.lead[1])), -1, p)
            vec_axpy(s, gj.vec, tuple(a - b for a, b in zip(L, gj.lead[1])), 1, p)
            r = gb.reduce(s)
            if r:
                out.append(FreeModuleElement(gb.ring, gb.rank, r))
    return out


def is_groebner(gb):
    return not s_pair_remainders(gb)


# -- syzygies -------------------------------------------------------------------

def kernel_mod(gens, mods, ring, rank, shifts=None):
    """Vectors a with sum_k a_k gens_k in span(mods), as raw vectors of rank len(gens).

    Computed by eliminating the ambient block from the module spanned by
    (gens_k, e_k) and (mods_j, 0), with a Schreyer-twisted order on the tag
    block.  ``mods`` must already contain any ring relation columns needed.
    """
    p = ring.characteristic
    g = len(gens)
    amb = ModuleOrder("top", shifts).key_function(ring)
    wdeg = ring.weighted_degree
    sh = shifts or (0,) * rank
    leads = []
    gdeg = []
    for v in gens:
        if v:
            t = max(v, key=amb)
            leads.append(t)
            gdeg.append(wdeg(t[1]) + sh[t[0]])
        else:
            leads.append(None)
            gdeg.append(0)
    cache = {}

    def key(t):
        try:
            return cache[t]
        except KeyError:
            pass
        c, e = t
        if c < rank:
            r = (1, amb(t))
        else:
            k = c - rank
            lc, le = leads[k]
            r = (0, amb((lc, _addexp(le, e))), -k)
        cache[t] = r
        return r

    def sugar(t):
        c, e = t
        if c < rank:
            return wdeg(e) + sh[c]
        return wdeg(e) + gdeg[c - rank]

    vecs = []
    trivial = []
    for k, v in enumerate(gens):
        if not v:
            trivial.append({(k, ring.zero_exp): 1})
            continue
        w = dict(v)
        w[(rank + k, ring.zero_exp)] = 1
        vecs.append(w)
    vecs.extend(dict(m) for m in mods if m)
    G = groebner_elements(vecs, ring, key, sugar)
    G = [x for x in G if x.lead[0] >= rank]
    G = reduce_basis(G, key, ring)
    out = [{(c - rank, e): a for (c, e), a in x.vec.items()} for x in G]
    return trivial + out


def syzygies(m, ring, rank=None, minimal=False):
    """Generators of the kernel of R^len(m) -> R^rank, e_k -> m_k, over R = S/(relations)."""
    m = list(m)
    if not m:
        return []
    if rank is None:
        rank = m[0].rank if isinstance(m[0], FreeModuleElement) else 1
    vecs = [_as_vector(v, ring, rank) for v in m]
    syz = kernel_mod(vecs, relation_columns(ring, rank), ring, rank)
    if minimal:
        syz = minimal_generators(syz, ring, len(m),
                                 shifts=vector_degrees(vecs, ring, rank))
    return [FreeModuleElement(ring, len(m), s) for s in syz]


def vector_degrees(vecs, ring, rank, shifts=None):
    """Degree of each (homogeneous) vector; zero vectors get degree 0."""
    sh = shifts or (0,) * rank
    out = []
    for v in vecs:
        if v:
            out.append(max(ring.weighted_degree(e) + sh[c] for c, e in v))
        else:
            out.append(0)
    return tuple(out)


def is_homogeneous_vector(v, ring, shifts):
    return len({ring.weighted_degree(e) + shifts[c] for c, e in v}) <= 1


def minimal_generators(vecs, ring, rank, shifts=None, mods=None):
    """Drop generators lying in the span of the others (plus ``mods`` and relations).

    Generators are scanned by increasing degree, so for homogeneous input the
    survivors minimally generate the module modulo ``mods``.
    """
    sh = shifts or (0,) * rank
    order = ModuleOrder("top", tuple(sh))
    key = order.key_function(ring)
    sugar = _make_sugar(ring, tuple(sh))
    base = [dict(m) for m in (mods or [])] + relation_columns(ring, rank)
    G = reduce_basis(groebner_elements(base, ring, key, sugar), key, ring) if base else []
    by_comp = {}
    for x in G:
        by_comp.setdefault(x.lead[0], []).append(x)
    cands = [dict(v) for v in vecs if v]
    cands.sort(key=lambda v: (max(ring.weighted_degree(e) + sh[c] for c, e in v), len(v)))
    kept = []
    p = ring.characteristic
    for v in cands:
        if not reduce_vector(v, by_comp, key, p, full=False):
            continue
        kept.append(v)
        G = groebner_elements([v], ring, key, sugar, start=G)
        by_comp = {}
        for x in G:
            by_comp.setdefault(x.lead[0], []).append(x)
    return kept
