"""Ideals with cached Groebner bases and the ideal operations built on them."""

from __future__ import annotations

import hashlib
from functools import cached_property

from . import engine
from .engine import Order
from .field import PRIME, RATIONAL
from .ring import Polynomial, PolyRing, grevlex_key, monomials_of_bidegree

INFINITE = "infinite"


def engine_modulus(ring: PolyRing):
    if ring.field.kind == PRIME:
        return ring.field.p
    if ring.field.kind == RATIONAL:
        return None
    raise ValueError("Groebner bases need a field; ZZ supports ring arithmetic only")


def to_keys(order: Order, f: Polynomial, c=0) -> dict:
    return {order.key(e, c): v for e, v in f._d.items()}


def from_keys(order: Order, ring: PolyRing, d: dict) -> Polynomial:
    return Polynomial(ring, {order.exps(k): v for k, v in d.items()})


class IdealHandle:
    """An ideal given by generators, with a write-once cached reduced Groebner basis.

    The basis is computed on first use and never recomputed; handles are
    effectively frozen after that and safe to share.
    """

    def __init__(self, ring: PolyRing, generators=()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            gens.append(g)
        self.ring = ring
        self.generators = gens
        self._order = Order(ring.nvars)
        self._p = engine_modulus(ring)
        self._nf_cache = {}

    def __repr__(self):
        return f"IdealHandle({self.ring}, [{', '.join(map(str, self.generators))}])"

    # Groebner basis

    @cached_property
    def _gb(self) -> engine.GBResult:
        o = self._order
        return engine.buchberger(o, [to_keys(o, g) for g in self.generators], self._p)

    @property
    def gb(self) -> list:
        """Reduced monic Groebner basis, ascending by leading monomial."""
        o = self._order
        return [from_keys(o, self.ring, g) for g in self._gb.basis]

    @cached_property
    def leading_monomials(self) -> list:
        o = self._order
        return [o.exps(max(g)) for g in self._gb.basis]

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("ring mismatch")
        o = self._order
        r, _ = engine.reduce(to_keys(o, f), self._gb.reducers, self._p)
        return from_keys(o, self.ring, r)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def contains_ideal(self, other: IdealHandle) -> bool:
        return all(self.contains(g) for g in other.generators)

    def same_ideal(self, other: IdealHandle) -> bool:
        return self.contains_ideal(other) and other.contains_ideal(self)

    def is_unit(self) -> bool:
        return any(not any(m) for m in self.leading_monomials)

    def nf_monomial(self, e) -> dict:
        """Normal form of a monomial as a dict exponents -> coefficient (cached)."""
        e = tuple(e)
        r = self._nf_cache.get(e)
        if r is None:
            o = self._order
            rem, _ = engine.reduce({o.key(e): 1}, self._gb.reducers, self._p)
            r = {o.exps(k): v for k, v in rem.items()}
            self._nf_cache[e] = r
        return r

    def nf_dict(self, d: dict) -> dict:
        """Normal form of a polynomial given as exponents -> coefficient."""
        o = self._order
        rem, _ = engine.reduce({o.key(e): v for e, v in d.items() if v}, self._gb.reducers, self._p)
        return {o.exps(k): v for k, v in rem.items()}

    def is_standard(self, e) -> bool:
        return not any(all(a <= b for a, b in zip(m, e)) for m in self.leading_monomials)

    def standard_monomials(self, d) -> list:
        """Monomials of bidegree ``d`` (or total degree, if ``d`` is an int) outside the leading-term ideal."""
        mons = self.ring.monomials_of_degree(d) if isinstance(d, int) else monomials_of_bidegree(self.ring, d)
        return [m for m in mons if self.is_standard(m)]

    def is_finite_colength(self) -> bool:
        if self.is_unit():
            return True
        n = self.ring.nvars
        pure = set()
        for m in self.leading_monomials:
            nz = [i for i in range(n) if m[i]]
            if len(nz) == 1:
                pure.add(nz[0])
        return len(pure) == n

    @cached_property
    def _all_standard(self) -> list:
        if not self.is_finite_colength():
            raise ValueError("ideal has infinite colength")
        if self.is_unit():
            return []
        n = self.ring.nvars
        seen = {(0,) * n}
        frontier = [(0,) * n]
        while frontier:
            nxt = []
            for e in frontier:
                for i in range(n):
                    f = list(e)
                    f[i] += 1
                    f = tuple(f)
                    if f not in seen and self.is_standard(f):
                        seen.add(f)
                        nxt.append(f)
            frontier = nxt
        return sorted(seen, key=grevlex_key, reverse=True)

    def all_standard_monomials(self) -> list:
        return list(self._all_standard)

    def colength(self):
        """dim_k T/I, or ``INFINITE``."""
        if not self.is_finite_colength():
            return INFINITE
        return len(self._all_standard)

    def support(self) -> dict:
        """Bidegree -> dim of (T/I) for the finitely many nonzero pieces."""
        out = {}
        for e in self._all_standard:
            d = self.ring.bidegree(e)
            out[d] = out.get(d, 0) + 1
        return out

    def hilbert_function(self, window) -> dict:
        """dim (T/I)_d for every bidegree d in ``window`` (an iterable of bidegrees)."""
        return {tuple(d): len(self.standard_monomials(d)) for d in window}

    # homogeneity and generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def is_bihomogeneous(self) -> bool:
        return all(g.is_bihomogeneous() for g in self.generators)

    @cached_property
    def _mingens(self) -> list:
        if not self.is_bihomogeneous():
            raise ValueError("minimal generators need a bihomogeneous ideal")
        o = self._order
        gens = [g for g in self.generators if g]
        res = engine.buchberger(o, [to_keys(o, g) for g in gens], self._p)
        chosen = [gens[i] for i in res.minimal_inputs]
        chosen.sort(key=lambda g: (g.bidegree(), grevlex_key(g.lm)))
        return chosen

    def minimal_generators(self) -> list:
        """Minimal bihomogeneous generators with their bidegrees, sorted by bidegree."""
        return [(g, g.bidegree()) for g in self._mingens]

    def fingerprint(self) -> str:
        """SHA-256 of the canonical serialized reduced Groebner basis."""
        text = f"{self.ring}\n" + "\n".join(str(g) for g in self.gb)
        return hashlib.sha256(text.encode()).hexdigest()

    # arithmetic on ideals

    def __add__(self, other: IdealHandle) -> IdealHandle:
        if other.ring != self.ring:
            raise ValueError("ring mismatch")
        return IdealHandle(self.ring, self.generators + other.generators)

    def __mul__(self, other: IdealHandle) -> IdealHandle:
        if other.ring != self.ring:
            raise ValueError("ring mismatch")
        return IdealHandle(self.ring, [f * g for f in self.generators for g in other.generators])

    def power(self, k: int) -> IdealHandle:
        out = IdealHandle(self.ring, [self.ring.one()])
        for _ in range(k):
            out = out * self
        return out


def groebner_basis(ideal: IdealHandle) -> list:
    return ideal.gb


def normal_form(f: Polynomial, ideal: IdealHandle) -> Polynomial:
    return ideal.normal_form(f)


def standard_monomials(ideal: IdealHandle, d) -> list:
    return ideal.standard_monomials(d)


def colength(ideal: IdealHandle):
    return ideal.colength()


def power_of_variables(ring: PolyRing, indices, k: int) -> IdealHandle:
    """The ideal (x_i : i in indices)^k generated by monomials."""
    indices = list(indices)
    gens = []

    def rec(pos, left, e):
        if pos == len(indices) - 1:
            e = list(e)
            e[indices[pos]] = left
            gens.append(ring.monomial(e))
            return
        for a in range(left, -1, -1):
            e2 = list(e)
            e2[indices[pos]] = a
            rec(pos + 1, left - a, e2)

    if indices:
        rec(0, k, [0] * ring.nvars)
    return IdealHandle(ring, gens)


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g, raising ArithmeticError if g does not divide f."""
    ring = f.ring
    o = Order(ring.nvars)
    p = engine_modulus(ring)
    gk = to_keys(o, g)
    lead = max(gk)
    inv = engine.inverse(gk[lead], p)
    gk = engine.scale(gk, inv, p)
    red = engine.Reducers(o)
    red.add(lead, gk, 0)
    rem, quots = engine.reduce(to_keys(o, f), red, p, track=True)
    if rem:
        raise ArithmeticError(f"{g} does not divide {f}")
    q = quots.get(0, {})
    q = engine.scale(q, inv, p)
    return Polynomial(ring, {o.exps(k): v for k, v in q.items()})


def intersect(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """I ∩ J by eliminating t from t*I + (1 - t)*J."""
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    ring = I.ring
    if not I.generators or not J.generators:
        return IdealHandle(ring, [])
    n = ring.nvars
    heads = [(0,) * n + (1,), (1,) * n + (0,)]
    o = Order(n + 1, heads)
    p = I._p
    minus = (p - 1) if p else -1
    inputs = []
    for f in I.generators:
        inputs.append({o.key(e + (1,)): v for e, v in f._d.items()})
    for g in J.generators:
        d = {o.key(e + (0,)): v for e, v in g._d.items()}
        for e, v in g._d.items():
            d[o.key(e + (1,))] = (v * minus) % p if p else v * minus
        inputs.append(d)
    res = engine.buchberger(o, inputs, p)
    out = []
    for g in res.basis:
        if all(o.exps(k)[n] == 0 for k in g):
            out.append(Polynomial(ring, {o.exps(k)[:n]: v for k, v in g.items()}))
    return IdealHandle(ring, out)


def _quotient_by_variable(I: IdealHandle, v: int) -> IdealHandle:
    # homogeneous I, revlex with x_v last: x_v | lm(g) implies x_v | g
    ring = I.ring
    n = ring.nvars
    perm = [i for i in range(n) if i != v] + [v]
    o = Order(n)
    p = I._p

    def fwd(e):
        return tuple(e[i] for i in perm)

    inv = [0] * n
    for pos, i in enumerate(perm):
        inv[i] = pos

    def back(e):
        return tuple(e[inv[i]] for i in range(n))

    inputs = [{o.key(fwd(e)): c for e, c in g._d.items()} for g in I.generators]
    res = engine.buchberger(o, inputs, p)
    gens = []
    for g in res.basis:
        lead = o.exps(max(g))
        if lead[n - 1] > 0:
            d = {}
            for k, c in g.items():
                e = list(o.exps(k))
                if e[n - 1] == 0:
                    raise ArithmeticError("revlex divisibility property violated")
                e[n - 1] -= 1
                d[back(e)] = c
            gens.append(Polynomial(ring, d))
        else:
            gens.append(Polynomial(ring, {back(o.exps(k)): c for k, c in g.items()}))
    return IdealHandle(ring, gens)


def ideal_quotient(I: IdealHandle, f: Polynomial, *, fast=True) -> IdealHandle:
    """(I : f) = {g : g f in I}.

    General route: intersect with (f) and divide.  For a homogeneous ideal and
    a single variable the revlex shortcut is used unless ``fast`` is False.
    """
    if f.is_zero():
        raise ValueError("quotient by the zero polynomial")
    ring = I.ring
    if fast and I.is_homogeneous() and len(f) == 1 and f.lc == 1:
        e = f.lm
        if sum(e) == 1:
            return _quotient_by_variable(I, e.index(1))
    if f.is_constant():
        return IdealHandle(ring, list(I.generators))
    K = intersect(I, IdealHandle(ring, [f]))
    return IdealHandle(ring, [divide_exact(g, f) for g in K.gb])


def quotient(I: IdealHandle, J: IdealHandle, *, fast=True) -> IdealHandle:
    """(I : J) as the intersection of (I : g) over generators g of J."""
    gens = [g for g in J.generators if g]
    if not gens:
        return IdealHandle(I.ring, [I.ring.one()])
    out = ideal_quotient(I, gens[0], fast=fast)
    for g in gens[1:]:
        out = intersect(out, ideal_quotient(I, g, fast=fast))
    return IdealHandle(I.ring, out.gb)


def saturate(I: IdealHandle, J: IdealHandle, *, fast=True, max_steps=100) -> IdealHandle:
    """(I : J^∞) as the stable value of iterated quotients."""
    if not any(J.generators):
        raise ValueError("saturation by the zero ideal")
    cur = IdealHandle(I.ring, I.gb)
    for _ in range(max_steps):
        nxt = quotient(cur, J, fast=fast)
        if cur.contains_ideal(nxt):
            return cur
        cur = nxt
    raise RuntimeError("saturation did not stabilize within the step budget")


def maximal_ideal(ring: PolyRing, block=None) -> IdealHandle:
    """The ideal of the origin; ``block`` = 'x' or 'y' restricts to one block."""
    if block == "x":
        idx = range(ring.nx)
    elif block == "y":
        idx = range(ring.nx, ring.nvars)
    else:
        idx = range(ring.nvars)
    return IdealHandle(ring, [ring.var(i) for i in idx])
