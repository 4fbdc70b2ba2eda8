"""Exact coefficient fields, monomial orders, rings and sparse polynomials.

Scalars are plain Python numbers: ints reduced mod p for a prime field,
``fractions.Fraction`` in characteristic zero.  A :class:`Ring` knows which
one it uses and does every coefficient operation itself, so polynomials never
carry per-coefficient objects.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

DEFAULT_PRIME = 32003


class RingError(ValueError):
    """Raised for malformed ring data or operands living in different rings."""


class PolynomialSyntaxError(RingError):
    """Raised by :func:`parse_polynomial` with a 1-based column."""

    def __init__(self, message, column=1):
        super().__init__(f"column {column}: {message}")
        self.column = column
        self.reason = message


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Field:
    """Prime field F_p (p odd) or the rationals (p = 0)."""

    def __init__(self, characteristic=DEFAULT_PRIME):
        p = int(characteristic)
        if p != 0 and (p == 2 or not _is_prime(p)):
            raise RingError(f"characteristic must be 0 or an odd prime, got {p}")
        self.p = p

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def coerce(self, c):
        if self.p:
            if isinstance(c, Fraction):
                return c.numerator * pow(c.denominator, -1, self.p) % self.p
            return int(c) % self.p
        return Fraction(c)

    def inv(self, c):
        if not c:
            raise ZeroDivisionError("zero is not invertible")
        if self.p:
            return pow(c, -1, self.p)
        return 1 / Fraction(c)

    def lift(self, c):
        """Symmetric integer (or rational) representative, for printing."""
        if self.p and c > self.p // 2:
            return c - self.p
        return c


@dataclass(frozen=True)
class MonomialOrder:
    """Monomial order on the polynomial ring.

    ``kind`` is ``"grevlex"`` (default), ``"lex"`` or ``"elim"``.  The
    elimination order compares the weighted degree in the first ``split``
    variables first and breaks ties by weighted grevlex on all variables.
    """

    kind: str = "grevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise RingError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.split < 1:
            raise RingError("elimination order needs split >= 1")

    def key_function(self, weights):
        w = tuple(weights)
        cache = {}
        if self.kind == "lex":
            def key(e):
                return e
            return key
        k = self.split

        def key(e):
            try:
                return cache[e]
            except KeyError:
                pass
            d = sum(a * b for a, b in zip(w, e))
            rev = tuple(-a for a in reversed(e))
            if self.kind == "elim":
                r = (sum(a * b for a, b in zip(w[:k], e[:k])), d, rev)
            else:
                r = (d, rev)
            cache[e] = r
            return r

        return key


class Ring:
    """A polynomial ring S = k[vars], optionally modulo relations.

    With one relation ``f`` this is the hypersurface ring S/(f).  Relations are
    not reduced by polynomial arithmetic; the Groebner layer accounts for them.
    """

    def __init__(self, variables, characteristic=DEFAULT_PRIME, weights=None,
                 order=None, relations=()):
        if isinstance(variables, str):
            variables = variables.replace(",", " ").split()
        self.variables = tuple(variables)
        if not self.variables:
            raise RingError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise RingError("duplicate variable names")
        for v in self.variables:
            if not v.isidentifier():
                raise RingError(f"bad variable name {v!r}")
        self.field = Field(characteristic)
        self.characteristic = self.field.p
        n = len(self.variables)
        self.weights = tuple(int(a) for a in weights) if weights else (1,) * n
        if len(self.weights) != n or min(self.weights) < 1:
            raise RingError("weights must be positive, one per variable")
        self.order = order if order is not None else MonomialOrder()
        if isinstance(self.order, str):
            self.order = MonomialOrder(self.order)
        self.nvars = n
        self.zero_exp = (0,) * n
        self.mkey = self.order.key_function(self.weights)
        self._index = {v: i for i, v in enumerate(self.variables)}
        rels = []
        for f in relations:
            f = self._coerce_poly(f)
            if f.is_zero():
                raise RingError("relations must be nonzero")
            if not f.is_homogeneous():
                raise RingError(f"relation {f} is not homogeneous")
            rels.append(dict(f._terms))
        if len(rels) > 1:
            raise RingError("at most one defining relation (hypersurface) is supported")
        self._rel_terms = tuple(rels)

    # identity -----------------------------------------------------------------
    def _ident(self):
        rels = tuple(tuple(sorted(r.items())) for r in self._rel_terms)
        return (self.variables, self.characteristic, self.weights, self.order, rels)

    def __eq__(self, other):
        return isinstance(other, Ring) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __reduce__(self):
        # the cached order key is a closure; rebuild it on unpickling
        return (_rebuild_ring, (self.variables, self.characteristic, self.weights, self.order,
                                self._rel_terms))

    def __repr__(self):
        s = f"{self.field}[{', '.join(self.variables)}]"
        if self._rel_terms:
            s += "/(" + ", ".join(str(f) for f in self.relations) + ")"
        return s

    # derived rings ------------------------------------------------------------
    @property
    def relations(self):
        return tuple(Polynomial(self, r) for r in self._rel_terms)

    @property
    def ambient(self):
        """The free polynomial ring S underlying this ring."""
        if not self._rel_terms:
            return self
        return Ring(self.variables, self.characteristic, self.weights, self.order)

    def with_order(self, order):
        r = Ring(self.variables, self.characteristic, self.weights, order)
        r._rel_terms = tuple(dict(t) for t in self._rel_terms)
        return r

    def extend(self, names, weights=None, order=None, front=True):
        """Polynomial ring with extra variables; relations are carried over."""
        names = tuple(names)
        weights = tuple(weights) if weights else (1,) * len(names)
        k = len(names)
        if front:
            vs, ws = names + self.variables, weights + self.weights
            move = lambda e: (0,) * k + e
        else:
            vs, ws = self.variables + names, self.weights + weights
            move = lambda e: e + (0,) * k
        r = Ring(vs, self.characteristic, ws, order or self.order)
        r._rel_terms = tuple({move(e): c for e, c in t.items()} for t in self._rel_terms)
        return r

    # elements -----------------------------------------------------------------
    def __call__(self, x):
        return self._coerce_poly(x)

    def _coerce_poly(self, x):
        if isinstance(x, Polynomial):
            if x.ring.variables != self.variables or x.ring.characteristic != self.characteristic:
                raise RingError("polynomial from a different ring")
            return Polynomial(self, x._terms)
        if isinstance(x, str):
            return parse_polynomial(x, self)
        if isinstance(x, (int, Fraction)):
            return self.constant(x)
        raise RingError(f"cannot build a polynomial from {x!r}")

    def constant(self, c):
        c = self.field.coerce(c)
        return Polynomial(self, {self.zero_exp: c} if c else {})

    def gens(self):
        return [self.var(v) for v in self.variables]

    def var(self, name):
        i = self._index[name] if isinstance(name, str) else name
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.coerce(1)})

    def monomial(self, exp, c=1):
        c = self.field.coerce(c)
        return Polynomial(self, {tuple(exp): c} if c else {})

    def index(self, name):
        return self._index[name]

    def weighted_degree(self, exp):
        return sum(a * b for a, b in zip(self.weights, exp))


def _rebuild_ring(variables, characteristic, weights, order, rel_terms):
    r = Ring(variables, characteristic, weights, order)
    r._rel_terms = tuple(dict(t) for t in rel_terms)
    return r


def weighted_degree(m, ring):
    """Weighted degree of an exponent vector."""
    return ring.weighted_degree(m)


def monomial_compare(m1, m2, order=None, weights=None):
    """Return -1, 0 or 1 comparing exponent tuples in ``order``."""
    if len(m1) != len(m2):
        raise RingError("monomials have different numbers of variables")
    order = order or MonomialOrder()
    key = order.key_function(weights or (1,) * len(m1))
    a, b = key(tuple(m1)), key(tuple(m2))
    return (a > b) - (a < b)


def _add_terms(a, b, p, sign=1):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + sign * c
        if p:
            v %= p
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _mul_terms(a, b, p):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(e, 0) + ca * cb
            if p:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


class Polynomial:
    """Immutable sparse polynomial; ``terms`` are sorted descending in the ring order."""

    __slots__ = ("ring", "_terms", "_sorted")

    def __init__(self, ring, terms=None):
        self.ring = ring
        p = ring.characteristic
        clean = {}
        for e, c in (terms or {}).items():
            if p:
                c = c % p
            if c:
                clean[tuple(e)] = c
        self._terms = clean
        self._sorted = None

    @property
    def terms(self):
        if self._sorted is None:
            key = self.ring.mkey
            self._sorted = tuple(sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True))
        return self._sorted

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def lead(self):
        return self.terms[0] if self._terms else None

    @property
    def leading_monomial(self):
        return self.terms[0][0] if self._terms else None

    @property
    def leading_coefficient(self):
        return self.terms[0][1] if self._terms else 0

    def degree(self):
        if not self._terms:
            return -1
        return max(self.ring.weighted_degree(e) for e in self._terms)

    def is_homogeneous(self):
        return len({self.ring.weighted_degree(e) for e in self._terms}) <= 1

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def _other(self, b):
        if isinstance(b, Polynomial):
            if b.ring is not self.ring and (b.ring.variables != self.ring.variables
                                            or b.ring.characteristic != self.ring.characteristic):
                raise RingError("operands live in different rings")
            return b
        if isinstance(b, (int, Fraction)):
            return self.ring.constant(b)
        return NotImplemented

    def __add__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        return Polynomial(self.ring, _add_terms(self._terms, b._terms, self.ring.characteristic))

    __radd__ = __add__

    def __sub__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        return Polynomial(self.ring, _add_terms(self._terms, b._terms, self.ring.characteristic, -1))

    def __rsub__(self, b):
        return (-self) + b

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self._terms.items()})

    def __mul__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        return Polynomial(self.ring, _mul_terms(self._terms, b._terms, self.ring.characteristic))

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise RingError("exponent must be a nonnegative integer")
        out = self.ring.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.ring.variables == other.ring.variables
                and self.ring.characteristic == other.ring.characteristic
                and self._terms == other._terms)

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def monic(self):
        if not self._terms:
            return self
        inv = self.ring.field.inv(self.leading_coefficient)
        return Polynomial(self.ring, {e: c * inv for e, c in self._terms.items()})

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_terms(self.terms, self.ring)


def format_monomial(e, names):
    parts = []
    for v, a in zip(names, e):
        if a == 1:
            parts.append(v)
        elif a > 1:
            parts.append(f"{v}^{a}")
    return "*".join(parts)


def format_terms(terms, ring):
    """Render (exponent, coefficient) pairs in the polynomial text syntax."""
    if not terms:
        return "0"
    out = []
    for e, c in terms:
        c = ring.field.lift(c)
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(e, ring.variables)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def parse_polynomial(text, ring):
    """Parse ``V^2 - U*W`` style text; integer coefficients, explicit ``*``."""
    src = text.strip()
    if not src:
        raise PolynomialSyntaxError("empty polynomial", 1)
    lead = len(text) - len(text.lstrip())
    for bad in ("**", "//"):
        if bad in src:
            raise PolynomialSyntaxError(f"unexpected {bad!r}; use ^ for powers",
                                        lead + src.index(bad) + 1)
    try:
        tree = ast.parse(src.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise PolynomialSyntaxError("invalid polynomial syntax", lead + (exc.offset or 1)) from None

    def col(node):
        # "^" became "**", so shift by the number of carets before the node
        off = node.col_offset
        pre = src.replace("^", "**")[:off]
        return lead + off - pre.count("**") + 1

    def walk(node):
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                base = walk(node.left)
                ex = node.right
                if not (isinstance(ex, ast.Constant) and type(ex.value) is int and ex.value >= 0):
                    raise PolynomialSyntaxError("exponent must be a nonnegative integer", col(ex))
                return base ** ex.value
            ops = {ast.Add: lambda a, b: a + b, ast.Sub: lambda a, b: a - b,
                   ast.Mult: lambda a, b: a * b}
            f = ops.get(type(node.op))
            if f is None:
                raise PolynomialSyntaxError("only + - * ^ are allowed", col(node))
            return f(walk(node.left), walk(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return ring.constant(node.value)
        if isinstance(node, ast.Name):
            if node.id not in ring._index:
                raise PolynomialSyntaxError(f"unknown variable {node.id!r}", col(node))
            return ring.var(node.id)
        raise PolynomialSyntaxError("unexpected token", col(node))

    return walk(tree.body)


def as_polynomials(items: Iterable, ring: Ring) -> list:
    return [ring(x) for x in items]


def terms_from_mapping(ring: Ring, mapping: Mapping) -> Polynomial:
    return Polynomial(ring, {tuple(e): ring.field.coerce(c) for e, c in mapping.items()})
