"""Frames, tweaked frames, truncations, regular sequences and the frame-like checklist."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field

from . import tangent
from .groebner import IdealHandle, ideal_quotient, power_of_variables
from .ring import PolyRing


class HypothesisError(ValueError):
    """A construction or check was called outside its stated hypotheses."""


@dataclass(frozen=True)
class FrameSpec:
    base_ideal: IdealHandle
    a: int
    b: int = 1
    char2: bool = False

    def __post_init__(self):
        if self.a < 2:
            raise ValueError("frame size a must be at least 2")
        if self.b < 1:
            raise ValueError("b must be at least 1")
        if self.base_ideal.ring.ny:
            raise ValueError("the base ideal must live in a ring without y-block")
        if not self.base_ideal.is_homogeneous():
            raise ValueError("the base ideal must be homogeneous")
        if self.char2 and self.base_ideal.ring.field.characteristic != 2:
            raise ValueError("tweaked frames need characteristic 2")

    @property
    def n(self) -> int:
        return self.base_ideal.ring.nx


def y_names(xnames) -> tuple:
    """y-variable names: x<k> -> y<k> when every name has that shape, else a '_y' suffix."""
    if all(re.fullmatch(r"x\d+", v) for v in xnames):
        ys = tuple("y" + v[1:] for v in xnames)
    else:
        ys = tuple(v + "_y" for v in xnames)
    if set(ys) & set(xnames):
        raise ValueError("y-variable names collide with x-variable names")
    return ys


def frame_ring(S: PolyRing) -> PolyRing:
    if S.ny:
        raise ValueError("expected a ring without y-block")
    return PolyRing(S.field, S.xvars, y_names(S.xvars))


def extend_to(I: IdealHandle, T: PolyRing) -> list:
    """Generators of I pushed into T = S[y]."""
    pad = (0,) * T.ny
    return [T.poly({e + pad: c for e, c in g.as_dict().items()}) for g in I.generators]


def quadric(T: PolyRing):
    n = T.nx
    return T.poly({tuple(int(k in (i, n + i)) for k in range(2 * n)): 1 for i in range(n)})


def build_frame(I: IdealHandle, a: int, b: int = 1) -> IdealHandle:
    """J = I.T + m_x^{a+1} + m_y^{b+1} + (Q) with Q = sum x_i y_i."""
    spec = FrameSpec(I, a, b)
    if I.ring.field.characteristic == 2:
        raise HypothesisError("characteristic 2: use build_tweaked_frame")
    T = frame_ring(I.ring)
    n = T.nx
    gens = extend_to(I, T)
    gens += power_of_variables(T, range(n), a + 1).generators
    gens += power_of_variables(T, range(n, 2 * n), b + 1).generators
    gens.append(quadric(T))
    J = IdealHandle(T, gens)
    J.frame_spec = spec
    return J


def p_ideal_generators(T: PolyRing) -> list:
    """(y_1^2, ..., y_n^2) + y_1 * m_y."""
    n = T.nx
    out = []
    for i in range(n):
        e = [0] * (2 * n)
        e[n + i] = 2
        out.append(T.monomial(e))
    for j in range(1, n):
        e = [0] * (2 * n)
        e[n] = 1
        e[n + j] = 1
        out.append(T.monomial(e))
    return out


def build_tweaked_frame(I: IdealHandle, a: int) -> IdealHandle:
    """The characteristic-2 frame I.T + m_x^{a+1} + p + (Q)."""
    if I.ring.field.characteristic != 2:
        raise HypothesisError("tweaked frames need characteristic 2")
    n = I.ring.nx
    spec = FrameSpec(I, a, n, char2=True)
    T = frame_ring(I.ring)
    gens = extend_to(I, T)
    gens += power_of_variables(T, range(n), a + 1).generators
    gens += p_ideal_generators(T)
    gens.append(quadric(T))
    J = IdealHandle(T, gens)
    J.frame_spec = spec
    return J


def truncate_ideal(I: IdealHandle, M: int, pad: int) -> IdealHandle:
    """I_{>=M} + m^{M+pad}, with I_{>=M} generated by monomial multiples of minimal generators."""
    if not I.is_homogeneous():
        raise ValueError("truncation needs a homogeneous ideal")
    ring = I.ring
    gens = []
    for g, _ in I.minimal_generators() if I.generators else []:
        k = max(M - g.total_degree(), 0)
        gens += [g * ring.monomial(m) for m in ring.monomials_of_degree(k)]
    gens += power_of_variables(ring, range(ring.nvars), M + pad).generators
    full = IdealHandle(ring, gens)
    return IdealHandle(ring, [g for g, _ in full.minimal_generators()])


@dataclass(frozen=True)
class DepthReport:
    regular: bool
    length: int
    failed_at: int | None = None
    probabilistic: bool = False
    sequence: tuple = ()


def check_regular_sequence(I: IdealHandle, seq) -> DepthReport:
    """Verify (I + (f_1..f_{i-1}) : f_i) = I + (f_1..f_{i-1}) for each i (1-based failure index)."""
    cur = IdealHandle(I.ring, list(I.generators))
    for i, f in enumerate(seq, start=1):
        q = ideal_quotient(cur, f)
        if not cur.contains_ideal(q):
            return DepthReport(False, len(seq), i, sequence=tuple(seq))
        cur = IdealHandle(I.ring, cur.generators + [f])
    return DepthReport(True, len(seq), sequence=tuple(seq))


def find_regular_sequence(I: IdealHandle, k: int, tries: int = 20, seed: int = 0) -> DepthReport:
    """Randomized search over linear forms; success certifies depth >= k, failure proves nothing."""
    rng = random.Random(seed)
    ring = I.ring
    p = ring.field.characteristic or 101
    xs = ring.gens()[: ring.nx]
    last = None
    for _ in range(tries):
        seq = []
        for _ in range(k):
            f = ring.zero()
            for x in xs:
                f = f + x * rng.randrange(p)
            seq.append(f)
        if any(f.is_zero() for f in seq):
            continue
        rep = check_regular_sequence(I, seq)
        if rep.regular:
            return DepthReport(True, k, None, True, rep.sequence)
        last = rep
    return DepthReport(False, k, last.failed_at if last else None, True)


@dataclass(frozen=True)
class FrameLikeReport:
    cond_a: bool
    profile: object = field(repr=False)
    cond_b: bool = False
    gmap_total: int = 0
    gmap_injective: bool = False
    cond_c: bool = False
    b: int = 1
    note: str = ""

    @property
    def verdict(self) -> bool:
        return self.cond_a and self.cond_b and self.cond_c


def base_piece_dim(I: IdealHandle, d: int) -> int:
    """dim_k I_d for a homogeneous ideal of S."""
    ring = I.ring
    return len(ring.monomials_of_degree(d)) - len(I.standard_monomials((d, 0)))


def frame_like_hypotheses(spec: FrameSpec) -> None:
    """Raise HypothesisError if the frame-like guarantees do not apply."""
    n = spec.n
    I = spec.base_ideal
    if spec.char2:
        if n < 4:
            raise HypothesisError("n < 4: tweaked frame-like hypothesis unmet")
        if base_piece_dim(I, n):
            raise HypothesisError(f"I_{n} != 0: tweaked frame-like hypothesis unmet")
    else:
        if n < 3:
            raise HypothesisError("n < 3: frame-like hypothesis unmet")
        if base_piece_dim(I, 2):
            raise HypothesisError("I_2 != 0: frame-like hypothesis unmet")


def frame_like_check(J: IdealHandle, spec: FrameSpec | None = None, threads: int | None = None) -> FrameLikeReport:
    """Conditions (a) TNT, (b) the g-map is bijective, (c) p contains T_(2,b+1) and I_b = 0.

    (c) is read as: every monomial of bidegree (2, b+1) lies in p.T.  b is 1
    for frames and n for tweaked frames.
    """
    spec = spec or getattr(J, "frame_spec", None)
    if spec is None:
        raise ValueError("frame spec required")
    frame_like_hypotheses(spec)
    T = J.ring
    n = spec.n
    tnt, prof = tangent.tnt_check(J, threads)
    gprof = tangent.hom_profile(J, lambda d: d[0] >= 1 and d[1] == -d[0], threads)
    inj = tangent.gmap_injective(J)
    cond_b = inj and gprof.gmap_total == n * n
    if spec.char2:
        b = n
        pgens = p_ideal_generators(T)
    else:
        b = 1
        pgens = power_of_variables(T, range(n, 2 * n), spec.b + 1).generators
    P = IdealHandle(T, pgens)
    cond_c = all(P.contains(T.monomial(m)) for m in T.monomials_of_bidegree((2, b + 1)))
    cond_c = cond_c and base_piece_dim(spec.base_ideal, b) == 0
    note = "(c) checked as: every bidegree-(2, b+1) monomial lies in p.T"
    return FrameLikeReport(tnt, prof, cond_b, gprof.gmap_total, inj, cond_c, b, note)

