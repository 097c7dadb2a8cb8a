"""Graded pieces of Hom_T(J, T/J): the tangent space to the Hilbert scheme at T/J.

A homomorphism is pinned down by the images of the minimal generators, and
those images must satisfy the first syzygies.  The solver works one multidegree
at a time, for the finest grading the generators are homogeneous for: the
torus of diagonal scalings that fix every generator up to a character.  Each
bidegree piece is the direct sum of these small systems.
"""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
import multiprocessing

from . import linalg
from .field import PRIME, FieldSpec
from .groebner import INFINITE, IdealHandle
from .resolution import syzygy_module


@dataclass(frozen=True)
class HomPiece:
    """Hom_T(J, T/J) in bidegree (alpha, beta).

    ``basis`` holds one table per basis element: for generator i a tuple of
    coefficients on ``J.standard_monomials(d_i + bidegree)``.
    """

    bidegree: tuple
    dimension: int
    basis: tuple = field(default=(), repr=False)


@dataclass(frozen=True)
class HomProfile:
    window: tuple
    pieces: dict
    negative_total: int
    gmap_total: int

    def format(self) -> str:
        lines = [f"({a}, {b}): {d}" for (a, b), d in sorted(self.pieces.items())]
        lines.append(f"negative_total: {self.negative_total}")
        lines.append(f"gmap_total: {self.gmap_total}")
        return "\n".join(lines)


@dataclass(frozen=True)
class LieTangentReport:
    ambient_group_dim: int
    kernel_dim: int
    orbit_dim: int
    hom0_dim: int | None = None
    lie_kernel_dim: int | None = None

    @property
    def certified(self) -> bool:
        """Orbit dimension pinned down exactly (lower bound meets dim Hom_0)."""
        return self.hom0_dim is not None and self.orbit_dim == self.hom0_dim


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class HomSystem:
    """Precomputed data for the Hom linear systems of one ideal."""

    def __init__(self, J: IdealHandle):
        if not J.is_bihomogeneous():
            raise ValueError("Hom pieces need a bihomogeneous ideal")
        if J.colength() == INFINITE:
            raise ValueError("Hom pieces need finite colength")
        self.J = J
        self.ring = J.ring
        self.field = J.ring.field
        mg = J.minimal_generators()
        self.gens = [g for g, _ in mg]
        self.gdeg = [d for _, d in mg]
        self.W = self._grading()
        self.gen_f = [self.fdeg(g.lm) for g in self.gens]
        self.std_by_f = defaultdict(list)
        for e in J.all_standard_monomials():
            self.std_by_f[self.fdeg(e)].append(e)

    def _grading(self):
        n = self.ring.nvars
        nx = self.ring.nx
        diffs = []
        for g in self.gens:
            mons = g.monomials()
            diffs.extend(_vsub(m, mons[0]) for m in mons[1:])
        rows = [tuple(1 if i < nx else 0 for i in range(n)), tuple(0 if i < nx else 1 for i in range(n))]
        if diffs:
            rows.extend(tuple(r) for r in linalg.integer_kernel_basis(diffs, n))
        else:
            rows.extend(tuple(int(i == j) for j in range(n)) for i in range(n))
        return rows

    def fdeg(self, e) -> tuple:
        return tuple(sum(w * x for w, x in zip(row, e)) for row in self.W)

    @cached_property
    def syzygies(self) -> list:
        """Minimal first syzygies as lists of (generator, exponents, coefficient)."""
        out = []
        for s in syzygy_module(self.gens, minimal=True):
            terms = []
            for i, c in enumerate(s.coords):
                for e, v in c.as_dict().items():
                    terms.append((i, e, v))
            i, e, _ = terms[0]
            out.append((_vadd(self.fdeg(e), self.gen_f[i]), terms))
        return out

    @cached_property
    def _syz_by_gen(self):
        idx = defaultdict(list)
        for k, (_, terms) in enumerate(self.syzygies):
            for i in sorted({t[0] for t in terms}):
                idx[i].append(k)
        return idx

    def deltas(self, want=None) -> dict:
        """Fine degrees with unknowns, grouped by bidegree; ``want`` filters bidegrees."""
        out = defaultdict(set)
        for i, gf in enumerate(self.gen_f):
            for F in self.std_by_f:
                d = _vsub(F, gf)
                if want is None or want(d[:2]):
                    out[d[:2]].add(d)
        return {b: sorted(ds) for b, ds in out.items()}

    def solve(self, delta, with_basis=False):
        """(dimension, kernel tables) of the system in fine degree ``delta``."""
        cols = []
        for i, gf in enumerate(self.gen_f):
            for u in self.std_by_f.get(_vadd(gf, delta), ()):
                cols.append((i, u))
        if not cols:
            return 0, []
        colidx = {c: k for k, c in enumerate(cols)}
        live = {i for i, _ in cols}
        syz_ids = sorted({k for i in live for k in self._syz_by_gen.get(i, ())})
        rows = []
        nf = self.J.nf_monomial
        fld = self.field
        for k in syz_ids:
            sf, terms = self.syzygies[k]
            target = self.std_by_f.get(_vadd(sf, delta))
            if not target:
                continue
            tidx = {w: r for r, w in enumerate(target)}
            block = [[0] * len(cols) for _ in target]
            for i, m, c in terms:
                if i not in live:
                    continue
                for u in self.std_by_f.get(_vadd(self.gen_f[i], delta), ()):
                    col = colidx[(i, u)]
                    for w, v in nf(_vadd(m, u)).items():
                        block[tidx[w]][col] += c * v
            rows.extend(block)
        if fld.kind == PRIME:
            rows = [[x % fld.p for x in r] for r in rows]
            rows = [r for r in rows if any(r)]
        else:
            rows = [r for r in rows if any(r)]
        if not with_basis:
            return len(cols) - linalg.rank(rows, fld), []
        ker = linalg.nullspace(rows, fld, len(cols))
        return len(ker), [{cols[k]: v for k, v in enumerate(vec) if v} for vec in ker]

    def piece(self, bideg, with_basis=True) -> HomPiece:
        bideg = tuple(bideg)
        deltas = self.deltas(lambda b: b == bideg).get(bideg, [])
        dim = 0
        raw = []
        for d in deltas:
            k, vecs = self.solve(d, with_basis)
            dim += k
            raw.extend(vecs)
        basis = tuple(self._tables(bideg, v) for v in raw) if with_basis else ()
        return HomPiece(bideg, dim, basis)

    def _tables(self, bideg, vec):
        tables = []
        for i, gd in enumerate(self.gdeg):
            std = self.J.standard_monomials(_vadd(gd, bideg))
            tables.append(tuple(vec.get((i, u), 0) for u in std))
        return tuple(tables)

    def table_from_images(self, bideg, images):
        """Coordinates of generator images (polynomials) in the piece's table format."""
        out = []
        for gd, f in zip(self.gdeg, images):
            r = self.J.normal_form(f)
            std = self.J.standard_monomials(_vadd(gd, bideg))
            out.append(tuple(r.coefficient(u) for u in std))
        return tuple(out)

    def satisfies_syzygies(self, bideg, table) -> bool:
        """Whether a generator-image table defines a homomorphism."""
        ring = self.ring
        images = []
        for gd, coeffs in zip(self.gdeg, table):
            std = self.J.standard_monomials(_vadd(gd, bideg))
            images.append(ring.poly({u: c for u, c in zip(std, coeffs) if c}))
        for _, terms in self.syzygies:
            acc = {}
            for i, m, c in terms:
                for u, v in images[i].as_dict().items():
                    key = _vadd(m, u)
                    acc[key] = acc.get(key, 0) + c * v
            if not self.J.normal_form(ring.poly(acc)).is_zero():
                return False
        return True


_WORKER = None


def _work(delta):
    return delta, _WORKER.solve(delta)[0]


def _solve_all(system: HomSystem, deltas: list, threads: int) -> dict:
    global _WORKER
    if threads <= 1 or len(deltas) < 2 or "fork" not in multiprocessing.get_all_start_methods():
        return {d: system.solve(d)[0] for d in deltas}
    system.syzygies  # compute before forking
    _WORKER = system
    try:
        ctx = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(threads, mp_context=ctx) as ex:
            return dict(ex.map(_work, deltas, chunksize=max(1, len(deltas) // (4 * threads))))
    finally:
        _WORKER = None


def default_threads() -> int:
    return int(os.environ.get("HILBPATH_THREADS", "1"))


def hom_system(J: IdealHandle) -> HomSystem:
    sys_ = getattr(J, "_hom_system", None)
    if sys_ is None:
        sys_ = HomSystem(J)
        J._hom_system = sys_
    return sys_


def hom_piece(J: IdealHandle, d) -> HomPiece:
    return hom_system(J).piece(d)


def hom_profile(J: IdealHandle, want=None, threads: int | None = None) -> HomProfile:
    """Dimensions of all pieces in the support window (or those accepted by ``want``).

    The window is the bounding box of d - d_i over the bidegrees d of T/J and
    generator bidegrees d_i; outside it no generator has a nonzero target.
    """
    system = hom_system(J)
    threads = default_threads() if threads is None else threads
    groups = system.deltas(want)
    support = set(J.support())
    cands = {_vsub(s, gd) for s in support for gd in system.gdeg}
    if want is not None:
        cands = {c for c in cands if want(c)}
    flat = [d for b in sorted(groups) for d in groups[b]]
    dims = _solve_all(system, flat, threads)
    pieces = {b: 0 for b in cands}
    for d, k in dims.items():
        pieces[d[:2]] = pieces.get(d[:2], 0) + k
    if cands:
        window = (
            (min(a for a, _ in cands), max(a for a, _ in cands)),
            (min(b for _, b in cands), max(b for _, b in cands)),
        )
    else:
        window = ((0, -1), (0, -1))
    neg = sum(k for (a, b), k in pieces.items() if a + b < 0)
    gmap = sum(k for (a, b), k in pieces.items() if a >= 1 and b == -a)
    return HomProfile(window, dict(sorted(pieces.items())), neg, gmap)


def negative_profile(J: IdealHandle, threads: int | None = None) -> HomProfile:
    return hom_profile(J, lambda b: b[0] + b[1] < 0, threads)


def tnt_check(J: IdealHandle, threads: int | None = None):
    """(has TNT, profile of the negative pieces)."""
    prof = negative_profile(J, threads)
    return prof.negative_total == J.ring.nvars, prof


def _derivation_rows(J: IdealHandle, columns) -> list:
    """Matrix of the linear map from column data to NF of the generator images.

    ``columns`` is a list of callables g -> polynomial, one per basis derivation.
    """
    gens = [g for g, _ in J.minimal_generators()] if J.is_bihomogeneous() else J.generators
    rowkeys = {}
    cols = []
    for D in columns:
        col = {}
        for gi, g in enumerate(gens):
            for e, v in J.normal_form(D(g)).as_dict().items():
                key = (gi, e)
                rowkeys.setdefault(key, len(rowkeys))
                col[rowkeys[key]] = v
        cols.append(col)
    rows = [[0] * len(cols) for _ in rowkeys]
    for c, col in enumerate(cols):
        for r, v in col.items():
            rows[r][c] = v
    return rows


def _derivation_rank(J: IdealHandle, columns) -> int:
    return linalg.rank(_derivation_rows(J, columns), J.ring.field)


def frobenius_rows(J: IdealHandle) -> list:
    """Linear conditions on A in gl_n met by every tangent vector of the reduced stabilizer.

    For q = p^r let V_q be the linear forms l with l^q in J.  Along an arc g(t)
    in the stabilizer, (g.l)^q = l^q + t^q (D_A l)^q, so D_A must map V_q into
    V_q.  Row j of A is the image of x_j; rows index A entries as j*n + k.
    """
    ring = J.ring
    p = ring.field.characteristic
    n = ring.nvars
    if p == 0:
        return []
    top = max(sum(e) for e in J.all_standard_monomials()) if J.colength() != INFINITE else None
    out = []
    q = p
    while top is None or q <= top + 1:
        # M: columns x_k^q in normal-form coordinates; V_q = ker M
        mons = {}
        colsM = []
        for k in range(n):
            e = tuple(q if i == k else 0 for i in range(n))
            col = {}
            for w, v in J.nf_monomial(e).items():
                col[mons.setdefault(w, len(mons))] = v
            colsM.append(col)
        M = [[0] * n for _ in mons]
        for k, col in enumerate(colsM):
            for r, v in col.items():
                M[r][k] = v
        V = linalg.nullspace(M, ring.field, n) if M else None
        if V is not None and M:
            for l in V:
                for m in M:
                    # sum_k m_k sum_j l_j A_jk = 0
                    row = [0] * (n * n)
                    for j in range(n):
                        if l[j]:
                            for k in range(n):
                                row[j * n + k] = (row[j * n + k] + l[j] * m[k]) % p
                    if any(row):
                        out.append(row)
        if top is None:
            break
        q *= p
    return out


def degree_zero_orbit(J: IdealHandle, threads: int | None = None) -> LieTangentReport:
    """Stabilizer and orbit dimension of J under GL of all variables, plus dim Hom_0.

    ``lie_kernel_dim`` is the dimension of the derivations x_j -> sum A_jk x_k
    mapping J into J (the tangent space of the stabilizer scheme).  In
    characteristic p that scheme can be non-reduced, so ``kernel_dim`` adds the
    Frobenius conditions of ``frobenius_rows``; it bounds the dimension of the
    stabilizer group from above, and ``orbit_dim = n^2 - kernel_dim`` bounds the
    orbit dimension from below.  As the orbit lies in the fixed locus, its
    dimension is at most dim Hom_0, so equality of the two certifies both.
    """
    if not J.is_homogeneous():
        raise ValueError("degree-zero orbit needs a homogeneous ideal")
    ring = J.ring
    n = ring.nvars
    xs = ring.gens()
    cols = []
    for j in range(n):
        for k in range(n):
            cols.append(lambda g, j=j, k=k: g.derivative(j) * xs[k])
    rows = _derivation_rows(J, cols)
    lie_rank = linalg.rank(rows, ring.field)
    full_rank = linalg.rank(rows + frobenius_rows(J), ring.field)
    hom0 = None
    if J.is_bihomogeneous() and J.colength() != INFINITE:
        hom0 = sum(hom_profile(J, lambda b: b[0] + b[1] == 0, threads).pieces.values())
    return LieTangentReport(n * n, n * n - full_rank, full_rank, hom0, n * n - lie_rank)


def gmap_injective(J: IdealHandle) -> bool:
    """Whether A -> (y_i -> sum_j A_ij x_j) has zero kernel on generator images."""
    ring = J.ring
    n = ring.nx
    if ring.ny != n:
        raise ValueError("the g-map needs equally many x and y variables")
    xs = ring.gens()[:n]
    cols = []
    for i in range(n):
        for j in range(n):
            cols.append(lambda g, i=i, j=j: g.derivative(n + i) * xs[j])
    return _derivation_rank(J, cols) == n * n


def gprime_q_stabilizer(n: int, field: FieldSpec) -> int:
    """dim {A in M_n : sum A_ij x_i x_j = 0}, the matrices killing the quadric."""
    if field.characteristic == 2:
        raise ValueError("characteristic 2: the antisymmetric description degenerates")
    mons = {}
    cols = []
    for i in range(n):
        for j in range(n):
            key = (min(i, j), max(i, j))
            mons.setdefault(key, len(mons))
            cols.append(mons[key])
    rows = [[0] * (n * n) for _ in mons]
    for c, r in enumerate(cols):
        rows[r][c] = 1
    return n * n - linalg.rank(rows, field)


def hom_brute_force_oracle(J: IdealHandle, d, budget: int = 6000) -> int:
    """dim Hom_T(J, T/J)_d from graded linear maps commuting with every variable.

    Unknowns are the maps J_e -> (T/J)_{e+d} on the basis {m - NF(m)} of J_e
    (m non-standard), for every e >= 0 whose target is nonzero.  Uses neither
    minimal generators nor syzygies.
    """
    if not J.is_bihomogeneous():
        raise ValueError("oracle needs a bihomogeneous ideal")
    if J.colength() == INFINITE:
        raise ValueError("oracle needs finite colength")
    ring = J.ring
    d = tuple(d)
    support = set(J.support())
    nx, n = ring.nx, ring.nvars
    dom = sorted({_vsub(s, d) for s in support if all(x >= 0 for x in _vsub(s, d))})
    dom_set = set(dom)
    std_of = {s: J.standard_monomials(s) for s in support}
    std_idx = {s: {u: k for k, u in enumerate(v)} for s, v in std_of.items()}

    cols = {}
    for e in dom:
        tgt = std_of[_vadd(e, d)]
        for m in ring.monomials_of_bidegree(e):
            if J.is_standard(m):
                continue
            for u in tgt:
                cols[(m, u)] = len(cols)
    if len(cols) > budget:
        raise ValueError(f"oracle truncation too large ({len(cols)} unknowns)")
    if not cols:
        return 0

    def var_deg(v):
        return (1, 0) if v < nx else (0, 1)

    # source degrees whose generators can map into the domain after one variable
    srcs = set(dom)
    for e in dom:
        for v in range(n):
            f = _vsub(e, var_deg(v))
            if all(x >= 0 for x in f):
                srcs.add(f)

    rows = []
    for e in sorted(srcs):
        nonstd = [m for m in ring.monomials_of_bidegree(e) if not J.is_standard(m)]
        for m in nonstd:
            nfm = J.nf_monomial(m)
            for v in range(n):
                e2 = _vadd(e, var_deg(v))
                tgt_deg = _vadd(e2, d)
                if tgt_deg not in support:
                    continue
                tix = std_idx[tgt_deg]
                block = [dict() for _ in tix]
                # phi(v * (m - NF m)) in coordinates of J_{e2}: nonstandard coefficients
                img = defaultdict(int)
                vm = list(m)
                vm[v] += 1
                img[tuple(vm)] += 1
                for u, c in nfm.items():
                    vu = list(u)
                    vu[v] += 1
                    vu = tuple(vu)
                    if not J.is_standard(vu):
                        img[vu] -= c
                if e2 in dom_set:
                    for mm, c in img.items():
                        for u in std_of[tgt_deg]:
                            col = cols[(mm, u)]
                            r = tix[u]
                            block[r][col] = block[r].get(col, 0) + c
                # minus v * phi(m mod J)
                if e in dom_set:
                    for u in std_of[_vadd(e, d)]:
                        col = cols[(m, u)]
                        vu = list(u)
                        vu[v] += 1
                        for w, c in J.nf_monomial(tuple(vu)).items():
                            r = tix[w]
                            block[r][col] = block[r].get(col, 0) - c
                for b in block:
                    if b:
                        row = [0] * len(cols)
                        for col, c in b.items():
                            row[col] = c
                        rows.append(row)
    fld = ring.field
    if fld.kind == PRIME:
        rows = [[x % fld.p for x in r] for r in rows]
    rows = [r for r in rows if any(r)]
    return len(cols) - linalg.rank(rows, fld)
