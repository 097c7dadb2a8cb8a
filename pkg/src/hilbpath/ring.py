"""Polynomial rings with an x-block and a y-block of variables.

Monomials are exponent tuples over the concatenated variable list (x-block
first).  The monomial order is degree reverse lexicographic; the bidegree of
a monomial is (x-degree, y-degree).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .field import FieldSpec

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_MAX_EXP = 2**31


def grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True)
class PolyRing:
    field: FieldSpec
    xvars: tuple
    yvars: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "xvars", tuple(self.xvars))
        object.__setattr__(self, "yvars", tuple(self.yvars))
        names = self.xvars + self.yvars
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            dup = sorted({v for v in names if names.count(v) > 1})
            raise ValueError(f"duplicate variable name(s): {', '.join(dup)}")
        for v in names:
            if not _NAME_RE.match(v):
                raise ValueError(f"invalid variable name {v!r}")

    @property
    def variables(self) -> tuple:
        return self.xvars + self.yvars

    @property
    def nvars(self) -> int:
        return len(self.xvars) + len(self.yvars)

    @property
    def nx(self) -> int:
        return len(self.xvars)

    @property
    def ny(self) -> int:
        return len(self.yvars)

    @property
    def bigraded(self) -> bool:
        return bool(self.yvars)

    def __str__(self):
        s = f"{self.field}[{', '.join(self.xvars)}"
        if self.yvars:
            s += f"; {', '.join(self.yvars)}"
        return s + "]"

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def bidegree(self, e) -> tuple:
        nx = self.nx
        return (sum(e[:nx]), sum(e[nx:]))

    def with_field(self, field: FieldSpec) -> PolyRing:
        return PolyRing(field, self.xvars, self.yvars)

    # constructors

    def poly(self, terms=None) -> Polynomial:
        """Build a polynomial from a mapping exponent tuple -> coefficient."""
        f = self.field
        d = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != self.nvars:
                raise ValueError("exponent vector has wrong length")
            c = f(c)
            if c:
                d[e] = c
        return Polynomial(self, d)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name_or_index) -> Polynomial:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field(1)})

    def gens(self) -> list:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, e) -> Polynomial:
        return Polynomial(self, {tuple(e): self.field(1)})

    def parse(self, src: str) -> Polynomial:
        return parse_polynomial(src, self)

    def monomials_of_bidegree(self, d) -> list:
        return monomials_of_bidegree(self, d)

    def monomials_of_degree(self, d: int) -> list:
        """All monomials of total degree d, in descending monomial order."""
        if d < 0:
            return []
        out = [tuple(e) for e in _compositions(d, self.nvars)]
        out.sort(key=grevlex_key, reverse=True)
        return out


def _compositions(d, k):
    if k == 0:
        if d == 0:
            yield ()
        return
    for c in itertools.combinations(range(d + k - 1), k - 1):
        prev = -1
        parts = []
        for b in c:
            parts.append(b - prev - 1)
            prev = b
        parts.append(d + k - 1 - prev - 1)
        yield tuple(parts)


def monomials_of_bidegree(ring: PolyRing, d) -> list:
    """All monomials of bidegree ``d`` in descending monomial order.

    Their number is C(d1+nx-1, d1) * C(d2+ny-1, d2); a negative component
    gives the empty list.
    """
    d1, d2 = d
    if d1 < 0 or d2 < 0:
        return []
    if not ring.yvars and d2 > 0:
        return []
    xs = list(_compositions(d1, ring.nx))
    ys = list(_compositions(d2, ring.ny))
    out = [a + b for a in xs for b in ys]
    out.sort(key=grevlex_key, reverse=True)
    return out


def count_monomials_of_bidegree(ring: PolyRing, d) -> int:
    d1, d2 = d
    if d1 < 0 or d2 < 0:
        return 0
    cx = comb(d1 + ring.nx - 1, d1) if ring.nx else int(d1 == 0)
    cy = comb(d2 + ring.ny - 1, d2) if ring.ny else int(d2 == 0)
    return cx * cy


class Polynomial:
    """Immutable polynomial; terms kept as a dict exponent-tuple -> nonzero coefficient."""

    __slots__ = ("ring", "_d", "_hash")

    def __init__(self, ring: PolyRing, d: dict):
        self.ring = ring
        self._d = d
        self._hash = None

    # views

    def terms(self) -> list:
        """(coefficient, exponents) pairs in descending monomial order."""
        return [(self._d[e], e) for e in sorted(self._d, key=grevlex_key, reverse=True)]

    def as_dict(self) -> dict:
        return dict(self._d)

    def monomials(self) -> list:
        return sorted(self._d, key=grevlex_key, reverse=True)

    def coefficient(self, e):
        return self._d.get(tuple(e), 0)

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def __len__(self):
        return len(self._d)

    @property
    def lm(self):
        if not self._d:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._d, key=grevlex_key)

    @property
    def lc(self):
        return self._d[self.lm]

    def total_degree(self) -> int:
        if not self._d:
            return -1
        return max(sum(e) for e in self._d)

    def bidegree(self):
        """Bidegree of a bihomogeneous polynomial; None for zero."""
        if not self._d:
            return None
        degs = {self.ring.bidegree(e) for e in self._d}
        if len(degs) != 1:
            raise ValueError(f"{self} is not bihomogeneous")
        return degs.pop()

    def is_bihomogeneous(self) -> bool:
        return len({self.ring.bidegree(e) for e in self._d}) <= 1

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._d}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._d)

    # arithmetic

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        norm = self.ring.field.normalize
        d = dict(self._d)
        for e, c in other._d.items():
            v = norm(d.get(e, 0) + c)
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring.field.normalize
        return Polynomial(self.ring, {e: norm(-c) for e, c in self._d.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        norm = self.ring.field.normalize
        d = {}
        for e1, c1 in self._d.items():
            for e2, c2 in other._d.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, 0) + c1 * c2
        d = {e: v for e, v in ((e, norm(v)) for e, v in d.items()) if v}
        for e in d:
            if max(e, default=0) >= _MAX_EXP:
                raise OverflowError("exponent overflow")
        return Polynomial(self.ring, d)

    __rmul__ = __mul__

    def scale(self, c) -> Polynomial:
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero()
        d = {}
        for e, v in self._d.items():
            v = f.normalize(v * c)
            if v:
                d[e] = v
        return Polynomial(self.ring, d)

    def mul_monomial(self, m) -> Polynomial:
        return Polynomial(self.ring, {tuple(a + b for a, b in zip(e, m)): c for e, c in self._d.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self, var) -> Polynomial:
        i = var if isinstance(var, int) else self.ring.index(var)
        f = self.ring.field
        d = {}
        for e, c in self._d.items():
            if e[i]:
                v = f.normalize(c * e[i])
                if v:
                    e2 = list(e)
                    e2[i] -= 1
                    d[tuple(e2)] = v
        return Polynomial(self.ring, d)

    def homogeneous_part(self, bideg) -> Polynomial:
        bd = self.ring.bidegree
        return Polynomial(self.ring, {e: c for e, c in self._d.items() if bd(e) == tuple(bideg)})

    def map_coefficients(self, ring: PolyRing, fn=None) -> Polynomial:
        """Re-home the polynomial in ``ring`` (same variable count), coercing coefficients."""
        if ring.nvars != self.ring.nvars:
            raise ValueError("variable count mismatch")
        fn = fn or ring.field
        d = {}
        for e, c in self._d.items():
            v = fn(c)
            if v:
                d[e] = v
        return Polynomial(ring, d)

    def div_exact(self, c) -> Polynomial:
        f = self.ring.field
        return Polynomial(self.ring, {e: f.div(v, c) for e, v in self._d.items()})

    # comparison / printing

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._d.items())))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def _format_monomial(names, e) -> str:
    parts = []
    for v, k in zip(names, e):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    """Canonical text: descending monomial order, explicit ``*`` and ``^``."""
    if not f._d:
        return "0"
    names = f.ring.variables
    out = []
    for c, e in f.terms():
        neg = c < 0
        a = -c if neg else c
        mono = _format_monomial(names, e)
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


class ParseError(ValueError):
    """Syntax error in a polynomial expression; ``pos`` is a 0-based offset."""

    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.msg = msg
        self.pos = pos


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(src):
    toks = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            toks.append((ch, ch, m.start(3)))
        pos = m.end()
    toks.append(("end", None, len(src)))
    return toks


class _Parser:
    def __init__(self, src, ring):
        self.toks = _tokenize(src)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def parse(self):
        f = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected token {t[1]!r}", t[2])
        return f

    def expr(self):
        f = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            g = self.unary()
            if op == "*":
                f = f * g
            else:
                if not g.is_constant() or g.is_zero():
                    raise ParseError("division only by a nonzero constant", pos)
                f = f.scale(self.ring.field.inv(g.coefficient((0,) * self.ring.nvars)))
        return f

    def unary(self):
        t = self.peek()
        if t[0] == "-":
            self.take()
            return -self.unary()
        if t[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        f = self.atom()
        if self.peek()[0] == "^":
            self.take()
            t = self.peek()
            if t[0] == "-":
                raise ParseError("negative exponent", t[2])
            if t[0] != "int":
                raise ParseError("exponent must be an integer literal", t[2])
            self.take()
            if t[1] >= _MAX_EXP:
                raise ParseError("exponent too large", t[2])
            f = f ** t[1]
        return f

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return self.ring.constant(val)
        if kind == "name":
            if val not in self.ring.variables:
                raise ParseError(f"unknown variable {val!r}", pos)
            return self.ring.var(val)
        if kind == "(":
            f = self.expr()
            k2, v2, p2 = self.take()
            if k2 != ")":
                raise ParseError("expected ')'", p2)
            return f
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_polynomial(src: str, ring: PolyRing) -> Polynomial:
    """Parse ``src`` into a canonical polynomial of ``ring``.

    Grammar: integer literals, variable names, ``+ - * / ^`` and parentheses.
    Implicit multiplication is rejected; ``/`` only divides by constants.
    """
    return _Parser(src, ring).parse()
