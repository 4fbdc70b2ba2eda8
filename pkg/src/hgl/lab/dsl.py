"""Line-oriented scenario language.

    # Veronese counterexample
    char 32003
    ring R vars U V W
    rel V^2 - U*W
    ideal I = U, V
    module k = coker 1x3 [ U, V, W ]
    functor ext i=2 first=quotient(I^n) second=R
    compose tor j=0 with=k
    range 2 12
    fit max_period 6
    audit dim spread
    oracle on

Matrix rows are separated by ``;`` and entries within a row by ``,``.
A module expression is the ring name, a module name, ``quotient(I^n)``
(R/I^n), ``quotient(I^n, N)`` (N/I^nN) or the same without ``^n`` for a
fixed quotient.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..ring import PolynomialSyntaxError, Ring, RingError, parse_polynomial


class ScenarioError(ValueError):
    """Error in a scenario, with a 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


@dataclass(frozen=True)
class ModExpr:
    ideal: str = None
    varying: bool = False
    module: str = None

    def text(self, ring_name):
        if self.ideal is None:
            return self.module or ring_name
        inner = self.ideal + ("^n" if self.varying else "")
        if self.module:
            inner += f", {self.module}"
        return f"quotient({inner})"


@dataclass
class ModuleDecl:
    rows: int
    cols: int
    entries: list


@dataclass
class ScenarioSpec:
    ring_name: str = None
    variables: tuple = ()
    weights: tuple = None
    characteristic: int = None
    relations: list = field(default_factory=list)
    ideals: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)
    kind: str = None
    i: int = 0
    first: ModExpr = None
    second: ModExpr = None
    compose_kind: str = None
    j: int = 0
    with_module: str = None
    n_range: tuple = None
    max_period: int = 6
    audit_dim: bool = False
    audit_spread: bool = False
    oracle: bool = False
    name: str = None

    @property
    def functor_kind(self):
        return "composed" if self.compose_kind else self.kind

    def pretty(self):
        out = []
        if self.name:
            out.append(f"# scenario {self.name}")
        if self.characteristic is not None:
            out.append(f"char {self.characteristic}")
        line = f"ring {self.ring_name} vars " + " ".join(self.variables)
        if self.weights:
            line += " weights " + " ".join(str(w) for w in self.weights)
        out.append(line)
        for r in self.relations:
            out.append(f"rel {r}")
        for name, gens in self.ideals.items():
            out.append(f"ideal {name} = " + ", ".join(gens))
        for name, m in self.modules.items():
            rows = " ; ".join(", ".join(r) for r in m.entries)
            out.append(f"module {name} = coker {m.rows}x{m.cols} [ {rows} ]")
        out.append(f"functor {self.kind} i={self.i} first={self.first.text(self.ring_name)} "
                   f"second={self.second.text(self.ring_name)}")
        if self.compose_kind:
            out.append(f"compose {self.compose_kind} j={self.j} with={self.with_module}")
        out.append(f"range {self.n_range[0]} {self.n_range[1]}")
        out.append(f"fit max_period {self.max_period}")
        flags = [w for w, on in (("dim", self.audit_dim), ("spread", self.audit_spread)) if on]
        if flags:
            out.append("audit " + " ".join(flags))
        if self.oracle:
            out.append("oracle on")
        return "\n".join(out) + "\n"

    def __eq__(self, other):
        if not isinstance(other, ScenarioSpec):
            return NotImplemented
        a, b = dict(self.__dict__), dict(other.__dict__)
        a.pop("name"), b.pop("name")
        return a == b

    def build_ring(self):
        return Ring(self.variables, self.characteristic if self.characteristic is not None
                    else 32003, self.weights, relations=self.relations)


_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_KEYWORDS = ("char", "ring", "rel", "ideal", "module", "functor", "compose", "range", "fit",
             "audit", "oracle")


class _Line:
    def __init__(self, no, text):
        self.no = no
        self.text = text

    def err(self, msg, col=None, at=None):
        if at is not None:
            i = self.text.find(at)
            col = i + 1 if i >= 0 else 1
        raise ScenarioError(msg, self.no, col or 1)


def _strip_comment(line):
    i = line.find("#")
    return line if i < 0 else line[:i]


def _int(line, tok, what):
    try:
        return int(tok)
    except ValueError:
        line.err(f"{what} must be an integer, got {tok!r}", at=tok)


def _parse_expr(line, text, ring_name):
    text = text.strip()
    m = re.fullmatch(rf"quotient\(\s*({_NAME})\s*(\^\s*n)?\s*(?:,\s*({_NAME})\s*)?\)", text)
    if m:
        return ModExpr(m.group(1), bool(m.group(2)), m.group(3))
    if re.fullmatch(_NAME, text):
        if text == ring_name:
            return ModExpr()
        return ModExpr(module=text)
    line.err(f"bad module expression {text!r}", at=text or None)


def parse_scenario(text, require_functor=True):
    """Parse and validate a scenario; raises ScenarioError with line:column.

    With ``require_functor=False`` a file holding only declarations is
    accepted (the ``gb`` subcommand reads those).
    """
    if not text.strip():
        raise ScenarioError("empty scenario", 1, 1)
    spec = ScenarioSpec()
    seen_functor = None
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        body = _strip_comment(raw)
        if body.strip():
            lines.append(_Line(no, body.rstrip()))
    if not lines:
        raise ScenarioError("empty scenario", 1, 1)
    for ln in lines:
        s = ln.text.strip()
        kw, _, rest = s.partition(" ")
        rest = rest.strip()
        if kw not in _KEYWORDS:
            ln.err(f"unknown keyword {kw!r}", at=kw)
        if kw == "char":
            p = _int(ln, rest, "characteristic")
            if spec.characteristic is not None and spec.characteristic != p:
                ln.err(f"inconsistent characteristic {p} (already {spec.characteristic})", at=rest)
            spec.characteristic = p
        elif kw == "ring":
            m = re.fullmatch(rf"({_NAME})\s+vars\s+(.+?)(?:\s+weights\s+(.+))?", rest)
            if not m:
                ln.err("expected: ring <name> vars <v1> ... [weights w1 ...]", at=kw)
            if spec.ring_name is not None:
                ln.err("ring declared twice", at=kw)
            spec.ring_name = m.group(1)
            spec.variables = tuple(m.group(2).split())
            for v in spec.variables:
                if not re.fullmatch(_NAME, v):
                    ln.err(f"bad variable name {v!r}", at=v)
            if m.group(3):
                spec.weights = tuple(_int(ln, w, "weight") for w in m.group(3).split())
                if len(spec.weights) != len(spec.variables):
                    ln.err("one weight per variable", at="weights")
        elif kw == "rel":
            _need_ring(spec, ln)
            spec.relations.append(_check_poly(ln, rest, spec))
        elif kw == "ideal":
            _need_ring(spec, ln)
            m = re.fullmatch(rf"({_NAME})\s*=\s*(.+)", rest)
            if not m:
                ln.err("expected: ideal <name> = <poly>, <poly>, ...", at=kw)
            name = m.group(1)
            _fresh(spec, ln, name)
            spec.ideals[name] = [_check_poly(ln, g.strip(), spec) for g in m.group(2).split(",")]
        elif kw == "module":
            _need_ring(spec, ln)
            m = re.fullmatch(rf"({_NAME})\s*=\s*coker\s+(\d+)\s*x\s*(\d+)\s*\[(.*)\]", rest)
            if not m:
                ln.err("expected: module <name> = coker <rows>x<cols> [ ... ]", at=kw)
            name = m.group(1)
            _fresh(spec, ln, name)
            r, c = int(m.group(2)), int(m.group(3))
            rows = [row for row in m.group(4).split(";")]
            entries = [[_check_poly(ln, e.strip(), spec) for e in row.split(",")] for row in rows]
            if len(entries) != r or any(len(row) != c for row in entries):
                ln.err(f"matrix is not {r}x{c}", at="[")
            spec.modules[name] = ModuleDecl(r, c, entries)
        elif kw == "functor":
            m = re.fullmatch(r"(ext-swapped|ext|tor)\s+i\s*=\s*(\d+)\s+first\s*=\s*(.+?)"
                             r"\s+second\s*=\s*(.+)", rest)
            if not m:
                ln.err("expected: functor <ext|tor|ext-swapped> i=<k> first=<expr> second=<expr>",
                       at=kw)
            _need_ring(spec, ln)
            spec.kind = m.group(1)
            spec.i = int(m.group(2))
            spec.first = _parse_expr(ln, m.group(3), spec.ring_name)
            spec.second = _parse_expr(ln, m.group(4), spec.ring_name)
            seen_functor = ln
        elif kw == "compose":
            m = re.fullmatch(rf"(tor|ext)\s+j\s*=\s*(\d+)\s+with\s*=\s*({_NAME})", rest)
            if not m:
                ln.err("expected: compose <tor|ext> j=<k> with=<module>", at=kw)
            spec.compose_kind, spec.j, spec.with_module = m.group(1), int(m.group(2)), m.group(3)
            spec._compose_line = ln
        elif kw == "range":
            parts = rest.split()
            if len(parts) != 2:
                ln.err("expected: range <n0> <n1>", at=kw)
            a, b = (_int(ln, t, "range bound") for t in parts)
            if a < 1 or b < a:
                ln.err("range must satisfy 1 <= n0 <= n1", at=parts[0])
            spec.n_range = (a, b)
        elif kw == "fit":
            parts = rest.split()
            if len(parts) != 2 or parts[0] != "max_period":
                ln.err("expected: fit max_period <p>", at=kw)
            spec.max_period = _int(ln, parts[1], "max_period")
            if spec.max_period < 1:
                ln.err("max_period must be >= 1", at=parts[1])
        elif kw == "audit":
            for w in rest.split():
                if w == "dim":
                    spec.audit_dim = True
                elif w == "spread":
                    spec.audit_spread = True
                else:
                    ln.err(f"unknown audit option {w!r}", at=w)
        elif kw == "oracle":
            if rest not in ("on", "off"):
                ln.err("expected: oracle on|off", at=kw)
            spec.oracle = rest == "on"
    _validate(spec, seen_functor, lines[-1], require_functor)
    spec.__dict__.pop("_compose_line", None)
    return spec


def _need_ring(spec, ln):
    if spec.ring_name is None:
        ln.err("declare the ring first", 1)


def _fresh(spec, ln, name):
    if name in spec.ideals or name in spec.modules or name == spec.ring_name:
        ln.err(f"name {name!r} already declared", at=name)


def _check_poly(ln, text, spec):
    ring = Ring(spec.variables, 0)
    try:
        parse_polynomial(text, ring)
    except PolynomialSyntaxError as exc:
        off = ln.text.find(text)
        ln.err(exc.reason, (off if off >= 0 else 0) + exc.column)
    except RingError as exc:
        ln.err(str(exc), at=text)
    return text.strip()


def _validate(spec, fline, last, require_functor=True):
    if spec.ring_name is None:
        last.err("no ring declared", 1)
    if spec.characteristic is not None:
        try:
            Ring(spec.variables, spec.characteristic)
        except RingError as exc:
            raise ScenarioError(str(exc), 1, 1) from None
    if len(spec.relations) > 1:
        last.err("at most one relation is supported", 1)
    if spec.kind is None:
        if not require_functor:
            return
        last.err("no functor line", 1)
    for e in (spec.first, spec.second):
        if e.ideal is not None and e.ideal not in spec.ideals:
            fline.err(f"unknown name {e.ideal!r}", at=e.ideal)
        if e.module is not None and e.module not in spec.modules:
            fline.err(f"unknown name {e.module!r}", at=e.module)
    vary = (spec.first.varying, spec.second.varying)
    if spec.kind in ("ext", "tor") and vary != (True, False):
        fline.err("first must be quotient(<ideal>^n[, N]) and second fixed", at="first")
    if spec.kind == "ext-swapped" and vary != (False, True):
        fline.err("ext-swapped needs a fixed first and second=quotient(<ideal>^n[, N])",
                  at="second")
    if spec.compose_kind and spec.with_module not in spec.modules:
        ln = getattr(spec, "_compose_line", last)
        ln.err(f"unknown name {spec.with_module!r}", at=spec.with_module)
    if spec.n_range is None:
        last.err("no range line", 1)
