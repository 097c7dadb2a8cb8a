"""Buchberger engine over exact fields, for ideals and submodules of free modules.

Terms are stored as *order keys*: for exponent vector ``e`` in component
``c`` the key is ``W.e (+ shift[c] on the first row), -e[n-1], ..., -e[0], c``.
Every coordinate except the last is linear in ``e``, so multiplying by a ring
monomial is coordinatewise addition of its key (which has ``c = 0``), native
tuple comparison is the monomial order, and divisibility compares the negated
exponent block.  With ``W = [1, ..., 1]`` this is degree reverse lexicographic
(term over position when several components share a degree and monomial).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from operator import add, ge, sub


class Order:
    def __init__(self, n: int, heads=None, shifts=None):
        self.n = n
        self.heads = tuple(tuple(w) for w in (heads or [(1,) * n]))
        self.h = len(self.heads)
        self.shifts = tuple(shifts) if shifts is not None else None
        self._rev = tuple(tuple(reversed(w)) for w in self.heads)
        self.grevlex = self.heads == ((1,) * n,)

    def key(self, e, c=0):
        head = [sum(w * x for w, x in zip(row, e)) for row in self.heads]
        if self.shifts is not None:
            head[0] += self.shifts[c]
        return tuple(head) + tuple(-x for x in reversed(e)) + (c,)

    def mult(self, e):
        """Key of a ring monomial (a multiplier)."""
        head = tuple(sum(w * x for w, x in zip(row, e)) for row in self.heads)
        return head + tuple(-x for x in reversed(e)) + (0,)

    def exps(self, k):
        h, n = self.h, self.n
        return tuple(-k[h + n - 1 - i] for i in range(n))

    def tail(self, k):
        return k[self.h:self.h + self.n]

    def mult_from_tail(self, t):
        head = tuple(-sum(w * x for w, x in zip(row, t)) for row in self._rev)
        return head + tuple(t) + (0,)

    def lcm_mults(self, a, b):
        """Multipliers (ma, mb) with ma*a == mb*b == lcm(a, b); same component assumed."""
        h, n = self.h, self.n
        ta, tb = a[h:h + n], b[h:h + n]
        tl = tuple(map(min, ta, tb))
        return self.mult_from_tail(tuple(map(sub, tl, ta))), self.mult_from_tail(tuple(map(sub, tl, tb)))

    def degree(self, mult):
        """Total degree of a multiplier key."""
        h, n = self.h, self.n
        return -sum(mult[h:h + n])


def mono_mul(k, m):
    return tuple(map(add, k, m))


def divides(order, a, b):
    """Whether key ``a`` divides key ``b`` (same component, exponents componentwise <=)."""
    if a[-1] != b[-1]:
        return False
    h, n = order.h, order.n
    return all(map(ge, a[h:h + n], b[h:h + n]))


def sub_mul(f, g, coef, mult, p):
    """In place: f -= coef * mult * g."""
    if p:
        for t, a in g.items():
            k = tuple(map(add, t, mult))
            v = (f.get(k, 0) - coef * a) % p
            if v:
                f[k] = v
            else:
                f.pop(k, None)
    else:
        for t, a in g.items():
            k = tuple(map(add, t, mult))
            v = f.get(k, 0) - coef * a
            if v:
                f[k] = v
            else:
                f.pop(k, None)


def add_mul(f, g, coef, mult, p):
    sub_mul(f, g, -coef, mult, p)


def scale(f, c, p):
    if p:
        return {k: v * c % p for k, v in f.items()}
    return {k: v * c for k, v in f.items()}


def inverse(c, p):
    return pow(c, -1, p) if p else 1 / c


class Reducers:
    """Leading-term index used for division."""

    def __init__(self, order):
        self.order = order
        self.by_comp = {}

    def add(self, lead, poly, idx):
        o = self.order
        self.by_comp.setdefault(lead[-1], []).append((o.tail(lead), lead[0], lead, poly, idx))

    def find(self, m):
        lst = self.by_comp.get(m[-1])
        if not lst:
            return None
        o = self.order
        mt = m[o.h:o.h + o.n]
        d = m[0]
        for t, d0, lead, poly, idx in lst:
            if (not o.grevlex or d0 <= d) and all(map(ge, t, mt)):
                return lead, poly, idx
        return None


def reduce(f, reducers, p, track=False):
    """Full reduction of ``f``; returns (remainder, quotients).

    Reducers must be monic.  ``quotients`` maps reducer index to a multiplier
    polynomial (keys with c = 0) such that f = sum q_i g_i + remainder.
    """
    f = dict(f)
    rem = {}
    quots = {} if track else None
    while f:
        m = max(f)
        r = reducers.find(m)
        if r is None:
            rem[m] = f.pop(m)
            continue
        lead, g, idx = r
        c = f[m]
        mult = tuple(map(sub, m, lead))
        sub_mul(f, g, c, mult, p)
        if track:
            q = quots.setdefault(idx, {})
            v = q.get(mult, 0) + c
            if p:
                v %= p
            if v:
                q[mult] = v
            else:
                del q[mult]
    return rem, quots


@dataclass
class _Elt:
    lead: tuple
    poly: dict
    sugar: int
    cof: dict | None = None


@dataclass
class GBResult:
    order: Order
    basis: list
    cofactors: list | None
    minimal_inputs: list
    reducers: Reducers = field(repr=False, default=None)


def buchberger(order, inputs, p, *, module=False, track=False, degree_bound=None):
    """Reduced Groebner basis of the span of ``inputs`` (list of key dicts).

    Pairs and inputs are processed by ascending sugar, pairs before inputs of
    the same sugar, ties broken by lcm key; so for homogeneous inputs under a
    degree order the inputs that survive reduction form a minimal generating
    set (``minimal_inputs``).  With ``track`` each basis element carries its
    cofactor vector over the inputs, as a dict keyed like ``(deg, -e.., input)``.
    Gebauer-Moeller criteria prune pairs; the coprime-lead criterion is only
    used for ideals.
    """
    if track and not order.grevlex:
        raise ValueError("cofactor tracking needs a degree order")
    elts: list[_Elt] = []
    active: list[int] = []
    heap = []
    n = order.n
    zero_mult = order.mult((0,) * n)
    minimal = []
    for i, f in enumerate(inputs):
        if not f:
            continue
        sug = _sugar_of(order, f)
        heapq.heappush(heap, (sug, 1, max(f), i, -1))
    reducers = Reducers(order)
    pairs_lcm = {}

    while heap:
        sug, kind, lk, i, j = heapq.heappop(heap)
        if degree_bound is not None and sug > degree_bound:
            break
        if kind == 1:
            s = dict(inputs[i])
            cof = {zero_mult[:-1] + (i,): 1} if track else None
        else:
            if (i, j) not in pairs_lcm:
                continue
            del pairs_lcm[(i, j)]
            ei, ej = elts[i], elts[j]
            mi, mj = order.lcm_mults(ei.lead, ej.lead)
            s = {}
            add_mul(s, ei.poly, 1, mi, p)
            sub_mul(s, ej.poly, 1, mj, p)
            cof = None
            if track:
                cof = {}
                add_mul(cof, ei.cof, 1, mi, p)
                sub_mul(cof, ej.cof, 1, mj, p)
        r, quots = reduce(s, reducers, p, track)
        if not r:
            continue
        inv = inverse(r[max(r)], p)
        r = scale(r, inv, p)
        if track:
            for k, q in quots.items():
                qc = elts[k].cof
                for qm, qv in q.items():
                    sub_mul(cof, qc, qv, qm, p)
            cof = scale(cof, inv, p)
        if kind == 1:
            minimal.append(i)
        h = len(elts)
        elts.append(_Elt(max(r), r, sug, cof))
        _update(order, elts, active, heap, pairs_lcm, h, module)
        reducers = Reducers(order)
        for a in active:
            reducers.add(elts[a].lead, elts[a].poly, a)

    basis, cofs = _interreduce(order, [elts[a] for a in active], p, track)
    red = Reducers(order)
    for idx, g in enumerate(basis):
        red.add(max(g), g, idx)
    return GBResult(order, basis, cofs, sorted(minimal), red)


def _sugar_of(order, f):
    if order.grevlex:
        return max(k[0] for k in f)
    return max(sum(order.exps(k)) for k in f)


def _update(order, elts, active, heap, pairs_lcm, h, module):
    eh = elts[h]
    lh = eh.lead
    comp = lh[-1]
    cands = [g for g in active if elts[g].lead[-1] == comp]
    lcms = {}
    coprime = {}
    for g in cands:
        mg, mh = order.lcm_mults(elts[g].lead, lh)
        lcms[g] = mono_mul(elts[g].lead, mg)
        coprime[g] = (not module) and lcms[g] == mono_mul(elts[g].lead, order.mult(order.exps(lh)))

    # chain criterion among the new pairs
    C = list(cands)
    D = []
    while C:
        g1 = C.pop(0)
        if coprime[g1] or not any(divides(order, lcms[g2], lcms[g1]) for g2 in C + D):
            D.append(g1)
    E = [g for g in D if not coprime[g]]

    # chain criterion against old pairs
    for (a, b), L in list(pairs_lcm.items()):
        if L[-1] != comp or not divides(order, lh, L):
            continue
        la = mono_mul(elts[a].lead, order.lcm_mults(elts[a].lead, lh)[0])
        lb = mono_mul(elts[b].lead, order.lcm_mults(elts[b].lead, lh)[0])
        if la != L and lb != L:
            del pairs_lcm[(a, b)]

    for g in E:
        L = lcms[g]
        eg = elts[g]
        mg, mh = order.lcm_mults(eg.lead, lh)
        if order.grevlex:
            sug = L[0]
        else:
            sug = max(eg.sugar + order.degree(mg), eh.sugar + order.degree(mh))
        pairs_lcm[(g, h)] = L
        heapq.heappush(heap, (sug, 0, L, g, h))

    active[:] = [g for g in active if not divides(order, lh, elts[g].lead)] + [h]


def _interreduce(order, elts, p, track):
    # leads are already minimal; one pass of tail reduction against all leads suffices
    elts = sorted(elts, key=lambda e: e.lead)
    red = Reducers(order)
    for j, e in enumerate(elts):
        red.add(e.lead, e.poly, j)
    basis = []
    cofs = [] if track else None
    for e in elts:
        tail = {k: v for k, v in e.poly.items() if k != e.lead}
        r, quots = reduce(tail, red, p, track)
        r[e.lead] = e.poly[e.lead]
        basis.append(r)
        if track:
            cof = dict(e.cof)
            for k, q in quots.items():
                for qm, qv in q.items():
                    sub_mul(cof, elts[k].cof, qv, qm, p)
            cofs.append(cof)
    return basis, cofs


def schreyer_pairs(order, leads):
    """Index pairs (i, j), i < j, whose lifted S-syzygies generate all syzygies.

    For each j the kept i are those where lcm(lead_i, lead_j)/lead_j is a
    minimal generator of the monomial ideal of such quotients (smallest i on
    ties).
    """
    out = []
    for j, lj in enumerate(leads):
        cand = []
        for i in range(j):
            li = leads[i]
            if li[-1] != lj[-1]:
                continue
            _, mj = order.lcm_mults(li, lj)
            cand.append((i, mj))
        for i, mj in cand:
            t = order.tail(mj)
            dominated = False
            for i2, mj2 in cand:
                if i2 == i:
                    continue
                t2 = order.tail(mj2)
                if all(map(ge, t2, t)) and (t2 != t or i2 < i):
                    dominated = True
                    break
            if not dominated:
                out.append((i, j))
    return out


def lift_syzygies(order, basis, reducers, p, pairs):
    """Syzygies of a monic Groebner basis from S-pair reductions.

    Each syzygy is a dict basis-index -> multiplier polynomial.
    """
    out = []
    for i, j in pairs:
        gi, gj = basis[i], basis[j]
        mi, mj = order.lcm_mults(max(gi), max(gj))
        s = {}
        add_mul(s, gi, 1, mi, p)
        sub_mul(s, gj, 1, mj, p)
        r, quots = reduce(s, reducers, p, True)
        if r:
            raise ArithmeticError("S-polynomial of a Groebner basis did not reduce to zero")
        syz = {}
        for k, q in quots.items():
            syz[k] = scale(q, -1 % p if p else -1, p)
        _acc(syz, i, {mi: 1}, p)
        _acc(syz, j, {mj: (p - 1) if p else -1}, p)
        syz = {k: v for k, v in syz.items() if v}
        if syz:
            out.append(syz)
    return out


def _acc(syz, k, poly, p):
    d = syz.setdefault(k, {})
    for m, v in poly.items():
        w = d.get(m, 0) + v
        if p:
            w %= p
        if w:
            d[m] = w
        else:
            d.pop(m, None)
