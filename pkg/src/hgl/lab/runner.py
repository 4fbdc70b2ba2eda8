"""Scenario execution: length sequences, fits, bound audits, oracles and reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from ..groebner import FreeModuleElement
from ..growth import (
    LengthSequence,
    NoFit,
    audit_degree_bound,
    fit_quasipolynomial,
    format_polynomial,
)
from ..homology import (
    FunctorEvaluator,
    FunctorSpec,
    ext,
    local_cohomology_h0,
    module_mod_power,
    tor,
)
from ..ideals import (
    INFINITE,
    Ideal,
    Module,
    annihilator,
    artin_rees_index,
    krull_dim,
    submodule,
)
from ..ring import Ring
from ..spread import analytic_spread
from .dsl import ScenarioError, parse_scenario


class InfiniteLengthError(RuntimeError):
    """A sampled module has infinite length, so the finite-length hypothesis fails."""

    def __init__(self, n, sequence):
        super().__init__(f"length is INFINITE at n = {n}: the module does not have finite "
                         "length, so polynomial growth cannot be asserted")
        self.n = n
        self.sequence = sequence


@dataclass
class RunReport:
    name: str
    provenance: str = ""
    sequence: LengthSequence = None
    fit: object = None
    audit: object = None
    dims: dict = field(default_factory=dict)
    oracle: dict = None
    extra: dict = None
    timing: dict = field(default_factory=dict)

    def to_dict(self, timing=False):
        d = {"scenario": self.name, "functor": self.provenance}
        if self.sequence is not None:
            d["sequence"] = {"n0": self.sequence.n0,
                             "values": [str(v) if v is INFINITE else v
                                        for v in self.sequence.values]}
        if self.fit is not None:
            d["fit"] = {"no_fit": self.fit.reason} if isinstance(self.fit, NoFit) \
                else self.fit.to_dict()
        if self.dims:
            d["audit_inputs"] = dict(self.dims)
        if self.oracle is not None:
            d["oracle"] = self.oracle
        if self.extra is not None:
            d["extra"] = self.extra
        if timing:
            d["timing"] = {k: round(v, 3) for k, v in self.timing.items()}
        return d

    def to_json(self, timing=False):
        return json.dumps(_jsonable(self.to_dict(timing)), sort_keys=True, indent=2) + "\n"

    def to_csv(self):
        lines = ["n,length"]
        if self.sequence is not None:
            for n, v in self.sequence.items():
                lines.append(f"{n},{v}")
        lines.extend("# " + s for s in self.summary_lines())
        return "\n".join(lines) + "\n"

    def summary_lines(self):
        out = []
        if isinstance(self.fit, NoFit):
            out.append(f"fitted: NO_FIT ({self.fit.reason})")
        elif self.fit is not None:
            f = self.fit
            deg = "zero" if f.degree is None else f.degree
            nlc = f.normalized_leading_coefficient
            out.append(f"fitted: period={f.period} degree={deg} "
                       f"normalized_leading_coefficient={_q(nlc)} stable_from={f.stable_from}")
            for r, c in enumerate(f.polynomials):
                out.append(f"class n = {r} mod {f.period}: {format_polynomial(c)}")
        if self.audit is not None:
            a = self.audit
            out.append(f"audit: degree={a.degree} dim={a.dim_value} spread={a.spread_value} "
                       f"bound={a.bound} satisfied={a.satisfied} "
                       f"equality_case={a.equality_case} equality_holds={a.equality_holds}")
        if self.oracle is not None:
            out.append(f"oracle: match={self.oracle['match']}")
        return out


def _q(x):
    if x is None:
        return "none"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _jsonable(x):
    if isinstance(x, Fraction):
        return _q(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if x is INFINITE:
        return "INFINITE"
    return x


# -- building ------------------------------------------------------------------

@dataclass
class Built:
    ring: Ring
    ideals: dict
    modules: dict
    functor: FunctorSpec


def build(spec):
    ring = spec.build_ring()
    ideals = {name: Ideal(ring, gens) for name, gens in spec.ideals.items()}
    modules = {}
    for name, decl in spec.modules.items():
        cols = []
        for c in range(decl.cols):
            col = [ring(decl.entries[r][c]) for r in range(decl.rows)]
            cols.append(dict(FreeModuleElement.from_polys(col, ring)._terms))
        modules[name] = Module.cokernel(ring, decl.rows, cols)

    def base(expr):
        return modules[expr.module] if expr.module else Module.free(ring, 1)

    def fixed(expr):
        m = base(expr)
        if expr.ideal is not None:
            m = module_mod_power(m, ideals[expr.ideal], 1)
        return m

    vary, other = (spec.first, spec.second) if spec.kind in ("ext", "tor") \
        else (spec.second, spec.first)
    f = FunctorSpec(kind=spec.functor_kind, i=spec.i, N=base(vary), M=fixed(other),
                    I=ideals[vary.ideal], inner_kind=spec.kind)
    if spec.compose_kind:
        f.outer, f.j, f.L = spec.compose_kind, spec.j, modules[spec.with_module]
    return Built(ring, ideals, modules, f)


def ring_dim(ring):
    return krull_dim(Ideal(ring, []))


def audit_inputs(b, want_dim=True, want_spread=True):
    """dim and spread values for the degree bound, plus the support hypothesis."""
    f = b.functor
    kind = f.inner_kind if f.kind == "composed" else f.kind
    out = {}
    if want_dim:
        if kind == "tor":
            out["dim"] = tor(f.i, f.M, f.N).dim()
        elif kind == "ext-swapped":
            out["dim"] = ext(f.i, f.M, f.N).dim()
        else:
            # Gorenstein base: H_i(Gamma_m(C)^dual (x) N) = Ext^(d-i)(M, N)
            d = ring_dim(b.ring)
            out["dim"] = ext(d - f.i, f.M, f.N).dim() if d - f.i >= 0 else -1
    if want_spread:
        out["spread"] = analytic_spread(f.I, f.N)
    J = f.I + annihilator(f.M) + annihilator(f.N)
    out["support_hypothesis"] = krull_dim(J) <= 0
    out["equality_applies"] = f.kind != "composed"
    return out


def evaluate_sequence(fspec, n_range, workers=1):
    ev = FunctorEvaluator(fspec)
    values = []
    n0, n1 = n_range
    if workers > 1:
        from ..homology import length_sequence
        seq = length_sequence(fspec, n_range, workers)
        values = seq.values
    else:
        for n in range(n0, n1 + 1):
            values.append(ev.length(n))
    seq = LengthSequence(n0, values, fspec.describe())
    if not seq.admissible:
        raise InfiniteLengthError(seq.first_infinite(), seq)
    return seq


def run_scenario(spec, name=None, workers=1):
    """Compute, fit, audit and (for built-ins) compare against the oracle."""
    t0 = time.perf_counter()
    b = build(spec)
    seq = evaluate_sequence(b.functor, spec.n_range, workers)
    t1 = time.perf_counter()
    md = ring_dim(b.ring)
    fit = fit_quasipolynomial(seq, spec.max_period, md)
    rep = RunReport(name or spec.name or "scenario", b.functor.describe(), seq, fit)
    if spec.audit_dim or spec.audit_spread:
        ins = audit_inputs(b, spec.audit_dim, spec.audit_spread)
        rep.dims = ins
        if fit and "dim" in ins and "spread" in ins:
            rep.audit = audit_degree_bound(fit, ins["dim"], ins["spread"],
                                           ins["support_hypothesis"], ins["equality_applies"])
    if spec.oracle:
        rep.oracle = oracle_comparison(spec, seq)
    rep.timing = {"lengths_s": t1 - t0, "total_s": time.perf_counter() - t0}
    return rep


# -- oracle ----------------------------------------------------------------------

def veronese_oracle_count(n):
    """#{(a, b): a + b even, a >= n, and no 0 <= j <= n with a >= 2n - j, b >= j}.

    Counts the monomials X^a Y^b of I^(n) outside I^n for I = (X^2, XY) in
    k[X^2, XY, Y^2].
    """
    count = 0
    for a in range(n, 2 * n + 1):
        for b in range(0, 2 * n + 1):
            if (a + b) % 2:
                continue
            if any(a >= 2 * n - j and b >= j for j in range(n + 1)):
                continue
            count += 1
    return count


def run_oracle_veronese(n_range):
    n0, n1 = n_range
    if n0 < 2:
        raise ValueError("the oracle needs n >= 2")
    return LengthSequence(n0, [veronese_oracle_count(n) for n in range(n0, n1 + 1)],
                          "monomial oracle for I^(n)/I^n")


def _is_veronese(spec):
    return (len(spec.variables) == 3 and len(spec.relations) == 1
            and spec.kind == "ext" and spec.i == 2 and not spec.compose_kind)


def oracle_comparison(spec, seq):
    if not _is_veronese(spec):
        return {"available": False, "match": None}
    lo = max(2, seq.n0)
    want = run_oracle_veronese((lo, seq.n0 + len(seq.values) - 1))
    got = seq.values[lo - seq.n0:]
    mism = [{"n": n, "computed": g, "oracle": w}
            for n, g, w in zip(want.indices, got, want.values) if g != w]
    return {"available": True, "match": not mism, "oracle": want.values, "mismatches": mism}


# -- built-in scenarios ---------------------------------------------------------

FILE_SCENARIOS = ("veronese-ext2", "kodiyalam-tor", "placekeeper-tor", "cm-degree", "top-soc")
BUILTINS = FILE_SCENARIOS + ("veronese-duality", "artin-rees-probe")


def scenario_text(name):
    return resources.files("hgl.lab").joinpath("scenarios", f"{name}.hgl").read_text("utf-8")


def load_scenario(name):
    if name not in FILE_SCENARIOS:
        raise ScenarioError(f"unknown scenario {name!r}", 1, 1)
    spec = parse_scenario(scenario_text(name))
    spec.name = name
    return spec


def veronese_ring():
    return Ring("U V W", relations=["V^2 - U*W"])


def run_veronese_duality(n_range=(2, 9), max_period=6):
    """Direct Ext^2, H^0_m saturation and monomial-oracle lengths side by side."""
    t0 = time.perf_counter()
    R = veronese_ring()
    U, V, W = R.gens()
    I = Ideal(R, [U, V])
    m = Ideal(R, [U, V, W])
    free = Module.free(R, 1)
    direct, h0 = [], []
    for n in range(n_range[0], n_range[1] + 1):
        In = I ** n
        direct.append(ext(2, In.quotient(), free).length())
        h0.append(local_cohomology_h0(In, m).length())
    oracle = run_oracle_veronese(n_range).values
    seq = LengthSequence(n_range[0], h0, "lambda(H^0_m(R/I^n)) = lambda(I^(n)/I^n)")
    fit = fit_quasipolynomial(seq, max_period, 2)
    agree = direct == h0 == oracle
    rep = RunReport("veronese-duality", seq.provenance, seq, fit)
    rep.oracle = {"available": True, "match": h0 == oracle, "oracle": oracle,
                  "mismatches": [{"n": n, "computed": a, "oracle": b}
                                 for n, a, b in zip(seq.indices, h0, oracle) if a != b]}
    rep.extra = {"direct_ext2": direct, "h0_saturation": h0, "monomial_oracle": oracle,
                 "three_way_agreement": agree}
    rep.timing = {"total_s": time.perf_counter() - t0}
    return rep


def artin_rees_triples():
    """(name, M, N, I) with M, N submodules of a common free module."""
    out = []
    P = Ring("x y")
    x, y = P.gens()
    mP = Ideal(P, [x, y])
    out.append(("k[x,y]: M = R, N = (x), I = m",
                submodule(P, 1, [1]), submodule(P, 1, [x]), mP))
    R = veronese_ring()
    U, V, W = R.gens()
    out.append(("Veronese: M = R, N = (U), I = (U, V)",
                submodule(R, 1, [1]), submodule(R, 1, [U]), Ideal(R, [U, V])))
    e = [FreeModuleElement.from_polys(c, P) for c in ([1, 0], [0, 1], [x, y])]
    out.append(("k[x,y]^2: M = R^2, N = R(x, y), I = m",
                submodule(P, 2, e[:2]), submodule(P, 2, e[2:]), mP))
    return out


def run_artin_rees_probe(window=(0, 7)):
    t0 = time.perf_counter()
    rows = []
    for name, M, N, I in artin_rees_triples():
        res = artin_rees_index(M, N, I, window)
        rows.append({"triple": name, "index": res.index, "window": list(res.window),
                     "certified_n": [n for n, _ in res.certified],
                     "certified_count": len(res.certified), "message": res.message})
    rep = RunReport("artin-rees-probe", "I^n M cap N = I^(n-k)(I^k M cap N)")
    rep.extra = {"triples": rows,
                 "all_certified": all(r["index"] is not None and r["certified_count"] >= 6
                                      for r in rows)}
    rep.timing = {"total_s": time.perf_counter() - t0}
    return rep


def run_builtin(name, max_period=None, workers=1):
    if name == "veronese-duality":
        return run_veronese_duality(max_period=max_period or 6)
    if name == "artin-rees-probe":
        return run_artin_rees_probe()
    spec = load_scenario(name)
    if max_period:
        spec.max_period = max_period
    return run_scenario(spec, name, workers)
