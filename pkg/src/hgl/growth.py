"""Exact (quasi-)polynomial fitting of integer length sequences.

Fits are found with finite differences and reconstructed with Newton's
forward-difference formula in rational arithmetic.  There is no
least-squares anywhere: a fit either reproduces every tail value exactly or
it is rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .ideals import INFINITE


class FitError(ValueError):
    pass


@dataclass
class LengthSequence:
    n0: int
    values: list
    provenance: str = ""

    @property
    def indices(self):
        return list(range(self.n0, self.n0 + len(self.values)))

    def items(self):
        return list(zip(self.indices, self.values))

    @property
    def admissible(self):
        return all(v is not INFINITE for v in self.values)

    def first_infinite(self):
        for n, v in self.items():
            if v is INFINITE:
                return n
        return None


@dataclass
class NoFit:
    reason: str

    def __bool__(self):
        return False


NO_FIT = NoFit("no fit")


# -- rational polynomial helpers (coefficients low -> high) -------------------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _padd(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def poly_eval(coeffs, n):
    v = Fraction(0)
    for c in reversed(coeffs):
        v = v * n + c
    return v


def poly_degree(coeffs):
    c = _trim(coeffs)
    return len(c) - 1 if c else None


def newton_polynomial(points, values):
    """Interpolating polynomial through equally spaced points, as rational coefficients."""
    s = points[0]
    h = points[1] - points[0] if len(points) > 1 else 1
    diffs = [Fraction(v) for v in values]
    lead = [diffs[0]]
    row = diffs
    for _ in range(1, len(values)):
        row = [b - a for a, b in zip(row, row[1:])]
        lead.append(row[0])
    out = []
    basis = [Fraction(1)]
    for k, d in enumerate(lead):
        if d:
            out = _padd(out, [d * c for c in basis])
        # binom((n - s)/h, k+1) = binom(.., k) * ((n - s)/h - k) / (k+1)
        basis = _pmul(basis, [Fraction(-s - k * h, h * (k + 1)), Fraction(1, h * (k + 1))])
    return _trim(out)


def format_polynomial(coeffs, var="n"):
    c = _trim(coeffs)
    if not c:
        return "0"
    parts = []
    for k in range(len(c) - 1, -1, -1):
        a = c[k]
        if a == 0:
            continue
        neg = a < 0
        a = abs(a)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else (f"{a.numerator}*{mono}" if a.denominator == 1
                                        else f"{a.numerator}/{a.denominator}*{mono}")
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


# -- reports ----------------------------------------------------------------------

@dataclass
class BoundAudit:
    dim_value: int
    spread_value: int
    bound: int
    degree: int
    satisfied: bool
    hypothesis: bool
    equality_applies: bool
    equality_case: bool
    equality_holds: object
    spread_branch_attained: bool

    def to_dict(self):
        return {
            "dim_value": self.dim_value,
            "spread_value": self.spread_value,
            "bound": self.bound,
            "degree": self.degree,
            "satisfied": self.satisfied,
            "support_hypothesis": self.hypothesis,
            "equality_applies": self.equality_applies,
            "equality_case": self.equality_case,
            "equality_holds": self.equality_holds,
            "spread_branch_attained": self.spread_branch_attained,
        }


@dataclass
class GrowthReport:
    period: int
    polynomials: list
    stable_from: int
    degree: object
    leading_coefficients: list
    normalized_leading_coefficient: object
    is_true_polynomial: bool
    n0: int = 1
    bound_audit: BoundAudit = None
    class_stable_from: list = field(default_factory=list)

    def __bool__(self):
        return True

    def evaluate(self, n):
        return poly_eval(self.polynomials[n % self.period], n)

    @property
    def degree_value(self):
        return -1 if self.degree is None else self.degree

    @property
    def normalized_is_integer(self):
        c = self.normalized_leading_coefficient
        return c is not None and Fraction(c).denominator == 1

    def describe(self):
        if self.period == 1:
            return format_polynomial(self.polynomials[0])
        return "; ".join(f"n = {r} mod {self.period}: {format_polynomial(c)}"
                         for r, c in enumerate(self.polynomials))

    def to_dict(self):
        def q(x):
            if x is None:
                return None
            x = Fraction(x)
            return f"{x.numerator}/{x.denominator}"

        d = {
            "period": self.period,
            "polynomials": [{"residue": r, "coefficients": [q(c) for c in coeffs],
                             "text": format_polynomial(coeffs)}
                            for r, coeffs in enumerate(self.polynomials)],
            "stable_from": self.stable_from,
            "degree": "zero" if self.degree is None else self.degree,
            "normalized_leading_coefficient": q(self.normalized_leading_coefficient),
            "normalized_is_integer": self.normalized_is_integer,
            "is_true_polynomial": self.is_true_polynomial,
        }
        if self.bound_audit is not None:
            d["bound_audit"] = self.bound_audit.to_dict()
        return d


# -- fitting ----------------------------------------------------------------------

def _fit_points(points, values, max_degree):
    """Best tail fit: longest certified tail, then smallest degree.

    A tail counts as certified when it has at least d + 2 points and covers
    at least half of the class, so one lucky coincidence at the end of the
    window cannot pass for a fit.  Returns (coeffs, first tail position) or None.
    """
    L = len(values)
    need = (L + 1) // 2
    best = None
    for d in range(0, max_degree + 1):
        if d + 2 > L:
            break
        coeffs = newton_polynomial(points[L - d - 1:], values[L - d - 1:])
        t = L
        while t > 0 and poly_eval(coeffs, points[t - 1]) == values[t - 1]:
            t -= 1
        if L - t < max(d + 2, need):
            continue
        if best is None or t < best[1]:
            best = (coeffs, t)
    return best


def _check_sequence(seq):
    if not seq.admissible:
        raise FitError(f"sequence has an INFINITE length at n = {seq.first_infinite()}; "
                       "the finite-length hypothesis fails")


def fit_polynomial(seq, max_degree=None):
    """Eventual polynomial through the tail of ``seq``, or a NoFit."""
    _check_sequence(seq)
    md = 3 if max_degree is None else max_degree
    if len(seq.values) < 2 * (md + 2):
        raise FitError(f"need at least {2 * (md + 2)} values to certify degree <= {md}")
    return _quasi(seq, 1, md) or NoFit("no polynomial of degree <= %d fits a tail" % md)


def fit_quasipolynomial(seq, max_period=6, max_degree=None):
    """Smallest period p whose residue classes all fit polynomials, or a NoFit."""
    _check_sequence(seq)
    md = 3 if max_degree is None else max_degree
    if len(seq.values) < md + 2:
        raise FitError("sequence too short")
    for p in range(1, max_period + 1):
        rep = _quasi(seq, p, md)
        if rep:
            return rep
    return NoFit(f"no quasi-polynomial with period <= {max_period} and degree <= {md}")


def _quasi(seq, p, md):
    ns = seq.indices
    vals = list(seq.values)
    polys = [None] * p
    class_start = [None] * p
    for r in range(p):
        pts = [n for n in ns if n % p == r]
        if not pts:
            return None
        vs = [vals[n - seq.n0] for n in pts]
        fit = _fit_points(pts, vs, md)
        if fit is None:
            return None
        polys[r] = fit[0]
        class_start[r] = pts[fit[1]]
    stable = seq.n0
    for n, v in zip(ns, vals):
        if poly_eval(polys[n % p], n) != v:
            stable = n + 1
    degs = [poly_degree(c) for c in polys]
    real = [d for d in degs if d is not None]
    degree = max(real) if real else None
    leads = [c[degree] if degree is not None and len(c) > degree else Fraction(0) for c in polys]
    if degree is None:
        norm = Fraction(0)
    elif len(set(leads)) == 1:
        norm = math.factorial(degree) * leads[0]
    else:
        norm = None
    return GrowthReport(period=p, polynomials=[tuple(c) for c in polys], stable_from=stable,
                        degree=degree, leading_coefficients=leads,
                        normalized_leading_coefficient=norm, is_true_polynomial=(p == 1),
                        n0=seq.n0, class_stable_from=class_start)


def audit_degree_bound(report, dim_value, spread_value, hypothesis=True, equality_applies=True):
    """Check degree <= max(dim, spread - 1) and the dim >= spread equality branch."""
    deg = report.degree_value
    bound = max(dim_value, spread_value - 1)
    fires = bool(hypothesis and equality_applies and dim_value >= spread_value)
    audit = BoundAudit(
        dim_value=dim_value,
        spread_value=spread_value,
        bound=bound,
        degree=deg,
        satisfied=deg <= bound,
        hypothesis=hypothesis,
        equality_applies=equality_applies,
        equality_case=fires,
        equality_holds=(deg == dim_value) if fires else None,
        spread_branch_attained=(deg == spread_value - 1),
    )
    report.bound_audit = audit
    return audit
