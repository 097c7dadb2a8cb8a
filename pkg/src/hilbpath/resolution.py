"""Syzygies, minimal free resolutions, Betti tables and regularity."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import engine
from .engine import Order
from .groebner import IdealHandle, engine_modulus, to_keys
from .ring import Polynomial, PolyRing


@dataclass(frozen=True)
class FreeModuleElement:
    """A vector in a free module sum_i T(-shift_i); ``coords[i]`` multiplies e_i."""

    coords: tuple
    shifts: tuple

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def degree(self):
        """Bidegree of the element, or None if zero; raises if inhomogeneous."""
        deg = None
        for c, s in zip(self.coords, self.shifts):
            if c.is_zero():
                continue
            b = c.bidegree()
            d = (b[0] + s[0], b[1] + s[1])
            if deg is None:
                deg = d
            elif d != deg:
                raise ValueError("inhomogeneous module element")
        return deg

    def is_homogeneous(self) -> bool:
        try:
            self.degree()
        except ValueError:
            return False
        return all(c.is_bihomogeneous() for c in self.coords)

    def dot(self, polys) -> Polynomial:
        out = polys[0].ring.zero()
        for c, g in zip(self.coords, polys):
            out = out + c * g
        return out


def _syzygy_keys(order: Order, inputs: list, p, module: bool) -> list:
    """Generators of the syzygies of ``inputs`` (key dicts).

    Each syzygy is a dict whose keys are multiplier keys carrying the input
    index in the last slot.  Built from a tracked Groebner basis G = A.F:
    Schreyer syzygies of G pushed through A, plus e_i - A.(F_i reduced by G).
    """
    res = engine.buchberger(order, inputs, p, module=module, track=True)
    G = res.basis
    pairs = engine.schreyer_pairs(order, [max(g) for g in G])
    sigmas = engine.lift_syzygies(order, G, res.reducers, p, pairs)
    cof = res.cofactors
    out = []
    for sig in sigmas:
        vec = {}
        for k, poly in sig.items():
            for mult, v in poly.items():
                engine.add_mul(vec, cof[k], v, mult, p)
        if vec:
            out.append(vec)
    zero = order.mult((0,) * order.n)
    for i, f in enumerate(inputs):
        if not f:
            continue
        r, quots = engine.reduce(f, res.reducers, p, True)
        if r:
            raise ArithmeticError("input did not reduce to zero against its own basis")
        vec = {zero[:-1] + (i,): 1}
        for k, q in quots.items():
            for qm, qv in q.items():
                engine.sub_mul(vec, cof[k], qv, qm, p)
        if vec:
            out.append(vec)
    return out


def _vec_from_keys(order: Order, ring: PolyRing, vec: dict, rank: int, shifts) -> FreeModuleElement:
    parts = [dict() for _ in range(rank)]
    for k, v in vec.items():
        parts[k[-1]][order.exps(k)] = v
    return FreeModuleElement(tuple(Polynomial(ring, d) for d in parts), tuple(shifts))


def syzygy_module(gens: list, minimal: bool = False) -> list:
    """Generating set of the first syzygies of ``gens`` as FreeModuleElements.

    With ``minimal`` (homogeneous generators only) a minimal generating set is
    kept.
    """
    if not gens:
        return []
    ring = gens[0].ring
    if any(g.ring != ring for g in gens):
        raise ValueError("generators from different rings")
    if any(g.is_zero() for g in gens):
        raise ValueError("zero generator")
    o = Order(ring.nvars)
    p = engine_modulus(ring)
    shifts = [g.bidegree() if g.is_bihomogeneous() else (0, 0) for g in gens]
    syz = _syzygy_keys(o, [to_keys(o, g) for g in gens], p, module=False)
    if minimal:
        if not all(g.is_homogeneous() for g in gens):
            raise ValueError("minimal syzygies need homogeneous generators")
        so = Order(ring.nvars, shifts=[g.total_degree() for g in gens])
        vecs = [{so.key(o.exps(k), k[-1]): v for k, v in s.items()} for s in syz]
        keep = engine.buchberger(so, vecs, p, module=True).minimal_inputs
        syz = [syz[i] for i in keep]
    return [_vec_from_keys(o, ring, s, len(gens), shifts) for s in syz]


def minimal_generators(I: IdealHandle) -> list:
    return I.minimal_generators()


@dataclass
class BettiTable:
    """b_{i,j} of a minimal resolution of an ideal (i = 0 counts its generators)."""

    entries: dict = field(default_factory=dict)
    complete: bool = True
    differentials: list = field(default_factory=list, repr=False)

    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("empty Betti table")
        return max(j - i for (i, j), b in self.entries.items() if b)

    def rows(self) -> list:
        return sorted((i, j, b) for (i, j), b in self.entries.items() if b)

    def format(self) -> str:
        return "\n".join(f"{i}, {j}, {b}" for i, j, b in self.rows())

    def length(self) -> int:
        return max((i for (i, _), b in self.entries.items() if b), default=-1)


def minimal_free_resolution(I: IdealHandle, max_steps: int | None = None) -> BettiTable:
    """Minimal graded free resolution of a homogeneous ideal of S (no y-block).

    Each step computes syzygies of the current minimal generators and keeps a
    minimal subset, selected degree by degree by the Groebner basis run.
    """
    ring = I.ring
    if ring.ny:
        raise ValueError("resolutions are computed for singly graded rings only")
    if not I.is_homogeneous():
        raise ValueError("minimal free resolution needs a homogeneous ideal")
    if max_steps is None:
        max_steps = ring.nvars + 1
    p = engine_modulus(ring)
    n = ring.nvars
    table = BettiTable()
    gens = [g for g, _ in I.minimal_generators()]
    if not gens:
        return table
    for g in gens:
        d = g.total_degree()
        table.entries[(0, d)] = table.entries.get((0, d), 0) + 1

    # current generators as key dicts in an order with Schreyer shifts
    order = Order(n)
    cur = [to_keys(order, g) for g in gens]
    degs = [g.total_degree() for g in gens]
    module = False
    for step in range(1, max_steps + 1):
        syz = _syzygy_keys(order, cur, p, module)
        if not syz:
            return table
        norder = Order(n, shifts=degs)
        vecs = [{norder.key(order.exps(k), k[-1]): v for k, v in s.items()} for s in syz]
        mins = engine.buchberger(norder, vecs, p, module=True).minimal_inputs
        vecs = [vecs[i] for i in mins]
        vecs.sort(key=lambda v: (max(v)[0], max(v)))
        ndegs = [max(v)[0] for v in vecs]
        table.differentials.append(
            [_vec_from_keys(norder, ring, v, len(cur), [(d, 0) for d in degs]) for v in vecs]
        )
        for d in ndegs:
            table.entries[(step, d)] = table.entries.get((step, d), 0) + 1
        order, cur, degs, module = norder, vecs, ndegs, True
    table.complete = not _syzygy_keys(order, cur, p, module)
    return table


def regularity(I: IdealHandle, max_steps: int | None = None) -> int:
    table = minimal_free_resolution(I, max_steps)
    if not table.complete:
        raise RuntimeError("resolution step budget exhausted")
    return table.regularity()


def hilbert_function(I: IdealHandle, window) -> dict:
    return I.hilbert_function(window)
