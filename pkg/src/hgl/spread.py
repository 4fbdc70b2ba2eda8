"""Rees algebra and fiber cone presentations; analytic spread."""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import buchberger
from .ideals import Ideal, Module, annihilator, krull_dim
from .ring import MonomialOrder, Polynomial, RingError


@dataclass
class FiberConePresentation:
    """k[y_1..y_s]/defining_ideal, the special fiber of I (on R/J when J is given)."""

    ring: object
    y_names: tuple
    defining_ideal: Ideal
    source: dict

    def dim(self):
        return krull_dim(self.defining_ideal)


def _y_names(ring, s):
    names = []
    k = 1
    while len(names) < s:
        cand = f"y{k}"
        if cand not in ring.variables:
            names.append(cand)
        k += 1
    return tuple(names)


def rees_presentation(I, J=None):
    """Relations of the Rees algebra R[It] in R[y], y_i -> f_i t.

    Eliminates t from (y_i - t f_i) + J + ring relations.  Returns the ideal of
    relations in the ring R[y] (y variables first).
    """
    ring = I.ring
    gens = I.generators
    if not gens:
        raise RingError("Rees algebra of the zero ideal")
    ys = _y_names(ring, len(gens))
    # t first (eliminated), then y, then the ring variables
    T = ring.extend(("_t",) + ys, order=MonomialOrder("elim", 1), front=True)
    k = 1 + len(ys)

    def lift(f):
        return Polynomial(T, {(0,) * k + e: c for e, c in f._terms.items()})

    t = T.var(0)
    rels = [T.var(1 + i) - t * lift(f) for i, f in enumerate(gens)]
    if J is not None:
        rels += [lift(g) for g in J.generators]
    gb = buchberger(rels, T)
    Ry = ring.extend(ys, front=True)
    out = [Polynomial(Ry, {e[1:]: c for e, c in f._terms.items()})
           for f in gb.polynomials() if all(e[0] == 0 for e in f._terms)]
    return Ideal(Ry, out)


def fiber_cone(I, N=None):
    J = None
    if N is not None:
        J = annihilator(N) if isinstance(N, Module) else N
    rees = rees_presentation(I, J)
    Ry = rees.ring
    s = len(I.generators)
    m = [Ry.var(s + i) for i in range(I.ring.nvars)]
    F = Ideal(Ry, list(rees.generators) + m)
    return FiberConePresentation(Ry, Ry.variables[:s], F,
                                 {"ring": repr(I.ring), "I": repr(I),
                                  "N": None if N is None else repr(N)})


def analytic_spread(I, N=None):
    """ell_N(I): Krull dimension of the fiber cone of I on R/ann(N)."""
    if not I.generators:
        raise RingError("analytic spread of the zero ideal")
    return max(fiber_cone(I, N).dim(), 0)
