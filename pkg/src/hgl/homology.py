"""Free resolutions, Ext and Tor as explicit subquotients, H^0_m and symbolic powers.

Ext^i(A, B) is the cohomology of Hom(F, B) for a free resolution F of A;
Tor_i(A, B) is the homology of F (x) B.  B enters through a cokernel
presentation, so Hom(F_i, B) and F_i (x) B are both B^rank(F_i) and the maps
are the (transposed) differentials acting blockwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .groebner import (
    buchberger,
    kernel_mod,
    minimal_generators,
    relation_columns,
    vec_axpy,
    vector_degrees,
)
from .ideals import (
    INFINITE,
    Ideal,
    Module,
    ideal_power,
    module_dim,
    present_subquotient,
    saturate,
)


@dataclass
class FreeResolution:
    """F_L -> ... -> F_1 -> F_0 -> module.

    ``differentials[i-1]`` holds d_i as a list of columns (one per basis
    vector of F_i), each a raw vector in F_{i-1}.  ``shifts[i]`` are the
    degrees of the basis of F_i.
    """

    ring: object
    module: Module
    ranks: list
    shifts: list
    differentials: list

    @property
    def length(self):
        return len(self.differentials)

    @property
    def betti(self):
        return list(self.ranks)

    def is_complex(self):
        """d_i o d_(i+1) == 0 modulo the ring relations, for every i."""
        ring = self.ring
        p = ring.characteristic
        for i in range(1, len(self.differentials)):
            d_lo, d_hi = self.differentials[i - 1], self.differentials[i]
            rel = buchberger([], ring, rank=self.ranks[i - 1])
            for col in d_hi:
                img = compose_column(col, d_lo, p)
                if img and rel.reduce(img, full=False):
                    return False
        return True

    def has_constant_entries(self):
        z = self.ring.zero_exp
        return any(e == z for d in self.differentials for col in d for (_, e) in col)


def compose_column(col, columns, p):
    """Image of a vector (coefficients on a basis) under a matrix given by columns."""
    out = {}
    for (k, e), a in col.items():
        vec_axpy(out, columns[k], e, -a, p)
    return out


def free_resolution(M, L):
    """Minimal partial free resolution of length (at most) L."""
    ring = M.ring
    P = M.presentation
    rank0 = P.rank
    shifts0 = tuple(P.shifts)
    cols = minimal_generators(P._rels, ring, rank0, shifts0)
    ranks = [rank0]
    shifts = [shifts0]
    diffs = []
    if ring._rel_terms:
        zero = buchberger([], ring, rank=rank0)
        cols = [c for c in cols if zero.reduce(c, full=False)]
    while cols and len(diffs) < L:
        cur_shifts = vector_degrees(cols, ring, ranks[-1], shifts[-1])
        diffs.append(cols)
        ranks.append(len(cols))
        shifts.append(cur_shifts)
        if len(diffs) == L:
            break
        syz = kernel_mod(cols, relation_columns(ring, ranks[-2]), ring, ranks[-2], shifts[-2])
        cols = minimal_generators(syz, ring, len(cols), cur_shifts)
    return FreeResolution(ring, P, ranks, shifts, diffs)


@dataclass
class HomologyModule:
    """Homology of a functor complex at one spot, with its presentation."""

    presentation: Module
    index: int
    kind: str = ""
    _length: object = field(default=None, repr=False)

    def length(self):
        if self._length is None:
            self._length = self.presentation.length()
        return self._length

    @property
    def finite(self):
        return self.length() is not INFINITE

    def dim(self):
        return module_dim(self.presentation)


def _cokernel_data(B):
    P = B.presentation
    return P, P.rank, tuple(P.shifts), P._rels


def _block_relations(Q, b, count):
    out = []
    for k in range(count):
        for v in Q:
            out.append({(k * b + c, e): a for (c, e), a in v.items()})
    return out


def _tensor_columns(d, b):
    """Columns of d (x) id_B as a map B^src -> B^tgt."""
    out = []
    for col in d:
        for j in range(b):
            out.append({(l * b + j, e): a for (l, e), a in col.items()})
    return out


def _hom_columns(d, b, src_rank):
    """Columns of Hom(d, B): Hom(F_(i-1), B) -> Hom(F_i, B), basis (l, j) -> sum_k d[k]_l (k, j)."""
    out = [dict() for _ in range(src_rank * b)]
    for k, col in enumerate(d):
        for (l, e), a in col.items():
            for j in range(b):
                out[l * b + j][(k * b + j, e)] = a
    return out


def homology(g_cols, h_cols, mid_rank, next_rank, mid_rels, next_rels, ring, mid_shifts,
             next_shifts=None):
    """ker(h) / (im(g) + mid_rels) for maps between cokernel modules, as a cokernel."""
    if h_cols is None or next_rank == 0:
        K = [{(c, ring.zero_exp): 1} for c in range(mid_rank)]
    else:
        mods = list(next_rels) + relation_columns(ring, next_rank)
        K = kernel_mod(h_cols, mods, ring, next_rank, next_shifts)
    Jsub = list(g_cols or []) + list(mid_rels)
    if mid_rank == 0:
        return present_subquotient([], [], ring, 1)
    return present_subquotient(K, Jsub, ring, mid_rank, mid_shifts)


def ext(i, A, B, resolution=None):
    """Ext^i_R(A, B) from a free resolution of A."""
    ring = A.ring
    F = resolution if resolution is not None and resolution.length >= i + 1 \
        else free_resolution(A, i + 1)
    PB, b, sB, QB = _cokernel_data(B)
    ranks = F.ranks + [0] * (i + 2 - len(F.ranks))
    if ranks[i] == 0:
        return HomologyModule(present_subquotient([], [], ring, 1), i, "ext", 0)

    def hom_shifts(k):
        return tuple(-s + t for s in F.shifts[k] for t in sB)

    g = _hom_columns(F.differentials[i - 1], b, ranks[i - 1]) if i >= 1 else None
    if ranks[i + 1]:
        h = _hom_columns(F.differentials[i], b, ranks[i])
        next_shifts = hom_shifts(i + 1)
    else:
        h, next_shifts = None, None
    mid = ranks[i] * b
    H = homology(g, h, mid, ranks[i + 1] * b, _block_relations(QB, b, ranks[i]),
                 _block_relations(QB, b, ranks[i + 1]), ring, hom_shifts(i), next_shifts)
    return HomologyModule(H, i, "ext")


def tor(i, A, B, resolution=None):
    """Tor_i^R(A, B) from a free resolution of A tensored with B."""
    ring = A.ring
    F = resolution if resolution is not None and resolution.length >= i + 1 \
        else free_resolution(A, i + 1)
    PB, b, sB, QB = _cokernel_data(B)
    ranks = F.ranks + [0] * (i + 2 - len(F.ranks))
    if ranks[i] == 0:
        return HomologyModule(present_subquotient([], [], ring, 1), i, "tor", 0)

    def ten_shifts(k):
        return tuple(s + t for s in F.shifts[k] for t in sB)

    g = _tensor_columns(F.differentials[i], b) if ranks[i + 1] else None
    if i >= 1:
        h = _tensor_columns(F.differentials[i - 1], b)
        next_shifts = ten_shifts(i - 1)
        nrank = ranks[i - 1] * b
        nrels = _block_relations(QB, b, ranks[i - 1])
    else:
        h, next_shifts, nrank, nrels = None, None, 0, []
    H = homology(g, h, ranks[i] * b, nrank, _block_relations(QB, b, ranks[i]), nrels,
                 ring, ten_shifts(i), next_shifts)
    return HomologyModule(H, i, "tor")


def local_cohomology_h0(J, m):
    """H^0_m(R/J) = (J : m^infinity)/J."""
    sat, _ = saturate(J, m)
    P = present_subquotient([_pv(f) for f in sat.generators],
                            [_pv(f) for f in J.generators], J.ring, 1)
    return HomologyModule(P, 0, "h0")


def _pv(f):
    return {(0, e): c for e, c in f._terms.items()}


def symbolic_power(P, n, m):
    """P^(n) as the m-saturation of P^n.

    Valid when every component of P^n other than the P-primary one is
    m-primary, which is the graded situation this library is used in.
    """
    return saturate(ideal_power(P, n), m)[0]


def residue_field(ring):
    """k = R/m for the irrelevant ideal m."""
    return Ideal(ring, ring.gens()).quotient()


def composed_functor(j, kind, L, inner):
    """Tor_j(L, X) or Ext^j(L, X) for X the module presented by ``inner``."""
    X = inner.presentation if isinstance(inner, HomologyModule) else inner
    if kind == "tor":
        return tor(j, L, X)
    if kind == "ext":
        return ext(j, L, X)
    raise ValueError(f"unknown functor kind {kind!r}")


def module_mod_power(N, I, n):
    """N / I^n N for a module N (cokernel presentation) and ideal I."""
    P = N.presentation
    In = ideal_power(I, n)
    extra = [{(c, e): a for e, a in f._terms.items()} for f in In.generators
             for c in range(P.rank)]
    return Module(P.ring, P.rank, None, list(P._rels) + extra, P.shifts)


@dataclass
class FunctorSpec:
    """lambda(functor) as a function of n.

    ``kind`` is ``ext`` (Ext^i(N/I^nN, M)), ``tor`` (Tor_i(N/I^nN, M)),
    ``ext-swapped`` (Ext^i(M, N/I^nN)) or ``composed`` (an ext/tor ``inner``
    spec followed by Tor_j/Ext^j(L, -)).
    """

    kind: str
    i: int
    N: Module
    M: Module
    I: Ideal
    j: int = 0
    outer: str = "tor"
    L: Module = None
    inner_kind: str = "ext"

    def describe(self):
        if self.kind == "composed":
            return f"{self.outer}_{self.j}(L, {self.inner_kind}_{self.i}(N/I^nN, M))"
        if self.kind == "ext-swapped":
            return f"ext^{self.i}(M, N/I^nN)"
        return f"{self.kind}_{self.i}(N/I^nN, M)"


class FunctorEvaluator:
    """Evaluates a FunctorSpec at single n, reusing resolutions of fixed arguments."""

    def __init__(self, spec):
        self.spec = spec

    @cached_property
    def _res_M(self):
        return free_resolution(self.spec.M, self.spec.i + 1)

    @cached_property
    def _res_L(self):
        return free_resolution(self.spec.L, self.spec.j + 1)

    def module(self, n, kind=None):
        s = self.spec
        kind = kind or s.kind
        Nn = module_mod_power(s.N, s.I, n)
        if kind == "ext":
            return ext(s.i, Nn, s.M)
        if kind == "tor":
            # Tor is balanced: resolve the fixed M once and tensor with N/I^nN
            return tor(s.i, s.M, Nn, self._res_M)
        if kind == "ext-swapped":
            return ext(s.i, s.M, Nn, self._res_M)
        if kind == "composed":
            inner = self.module(n, s.inner_kind)
            if s.outer == "tor":
                return tor(s.j, s.L, inner.presentation, self._res_L)
            return ext(s.j, s.L, inner.presentation, self._res_L)
        raise ValueError(f"unknown functor kind {kind!r}")

    def length(self, n):
        return self.module(n).length()


def length_sequence(spec, n_range, workers=1):
    """LengthSequence of lambda(functor) for n in [n0, n1]."""
    from .growth import LengthSequence

    n0, n1 = n_range
    if n0 < 1:
        raise ValueError("n0 must be >= 1")
    ev = FunctorEvaluator(spec)
    ns = list(range(n0, n1 + 1))
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            values = list(pool.map(_eval_one, [(spec, n) for n in ns]))
    else:
        values = [ev.length(n) for n in ns]
    return LengthSequence(n0, values, spec.describe())


def _eval_one(args):
    spec, n = args
    return FunctorEvaluator(spec).length(n)
