"""Non-liftability to W_2(F_p), the named examples, and the five-step component certificate."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from . import tangent
from .field import FieldSpec, is_prime
from .frames import FrameSpec, build_frame
from .groebner import IdealHandle, intersect, maximal_ideal, power_of_variables, saturate
from .resolution import regularity
from .ring import Polynomial, PolyRing


class W2Refused(ValueError):
    """The W_2 test does not apply to this input."""


def _prime_base(q: int):
    """(p, e) with q = p^e, or None."""
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            return (p, e) if r == 1 else None
    return None


def w2_obstruction_witness(p: int, pairs: int, ring: PolyRing | None = None) -> Polynomial:
    """((sum M_i)^p - sum M_i^p) / p over ZZ, reduced mod p, where M_i = x_{2i-1} x_{2i}.

    The result lives in ``ring`` (first 2*pairs variables) or in F_p[x1..x_{2 pairs}].
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if pairs < 1:
        raise ValueError("pairs must be positive")
    nv = 2 * pairs
    Z = PolyRing(FieldSpec.zz(), [f"x{i}" for i in range(1, nv + 1)])
    Ms = [Z.monomial([int(k in (2 * i, 2 * i + 1)) for k in range(nv)]) for i in range(pairs)]
    total = Z.zero()
    for m in Ms:
        total = total + m
    lhs = total**p
    for m in Ms:
        lhs = lhs - m**p
    w = lhs.div_exact(p)
    if ring is None:
        ring = PolyRing(FieldSpec.gf(p), Z.xvars)
    if ring.field.characteristic != p:
        raise ValueError("target ring has the wrong characteristic")
    if ring.nvars < nv:
        raise ValueError("target ring has too few variables")
    pad = (0,) * (ring.nvars - nv)
    return ring.poly({e + pad: c for e, c in w.as_dict().items()})


@dataclass(frozen=True)
class W2Report:
    p: int
    witness: Polynomial
    normal_form: Polynomial
    obstructed: bool

    @property
    def status(self) -> str:
        return "obstructed" if self.obstructed else "inconclusive"


def w2_check(J: IdealHandle, p: int, pairs: int | None = None) -> W2Report:
    """Evaluate the W_2 obstruction for J over F_p.

    Needs Q = sum x_{2i-1}x_{2i} in J and x_{2i}^p in J.  A nonzero normal form
    certifies that T/J does not lift to W_2(F_p); zero is inconclusive.
    """
    ring = J.ring
    if ring.field.characteristic != p:
        raise W2Refused(f"ring characteristic {ring.field.characteristic} is not {p}")
    if pairs is None:
        pairs = ring.nvars // 2
    if pairs < 1 or 2 * pairs > ring.nvars:
        raise W2Refused("not enough variables for the requested pairs")
    Q = ring.zero()
    for i in range(pairs):
        Q = Q + ring.var(2 * i) * ring.var(2 * i + 1)
    if not J.contains(Q):
        raise W2Refused(f"precondition failed: {Q} is not in J")
    for i in range(pairs):
        v = ring.var(2 * i + 1) ** p
        if not J.contains(v):
            raise W2Refused(f"precondition failed: {v} is not in J")
    w = w2_obstruction_witness(p, pairs, ring)
    nf = J.normal_form(w)
    return W2Report(p, w, nf, not nf.is_zero())


def berthelot_ogus_ideal(p: int, pairs: int = 3) -> IdealHandle:
    """(x_1^p, ..., x_{2 pairs}^p, Q) over F_p."""
    R = PolyRing(FieldSpec.gf(p), [f"x{i}" for i in range(1, 2 * pairs + 1)])
    gens = [R.var(i) ** p for i in range(2 * pairs)]
    Q = R.zero()
    for i in range(pairs):
        Q = Q + R.var(2 * i) * R.var(2 * i + 1)
    return IdealHandle(R, gens + [Q])


SUPPORTED_Q = (3, 4, 5)


def build_q_example(q: int, p: int | None = None) -> IdealHandle:
    """Saturate (Q) + (x2^q, x4^q, x6^q) at the origin, then add (x1, x3, x5)^{q+1}."""
    if q not in SUPPORTED_Q:
        raise ValueError(f"unsupported q={q}; expected one of {SUPPORTED_Q}")
    base = _prime_base(q)[0]
    if p is None:
        p = base
    if p != base:
        raise ValueError(f"characteristic {p} does not match q={q}")
    R = PolyRing(FieldSpec.gf(p), [f"x{i}" for i in range(1, 7)])
    I1 = IdealHandle(R, [R.parse("x1*x2 + x3*x4 + x5*x6"), *(R.var(i) ** q for i in (1, 3, 5))])
    sat = saturate(I1, maximal_ideal(R))
    J = sat + power_of_variables(R, (0, 2, 4), q + 1)
    return IdealHandle(R, J.gb)


MDP_K = ("x1^2", "x1*x2", "x2^2*(x3 + x4)", "x1*x4^3 + x2*(x3 + x4)*x3^2")


@dataclass
class MDPExample:
    K: IdealHandle
    I: IdealHandle
    reg_K: int
    spec: FrameSpec
    J: IdealHandle = field(repr=False)


def build_mdp_example(nvars: int = 7, a: int = 5) -> MDPExample:
    """K in x1..x4 inside nvars variables over QQ, I = K cap (x1..x4)^4, and its frame."""
    R = PolyRing(FieldSpec.qq(), [f"x{i}" for i in range(1, nvars + 1)])
    K = IdealHandle(R, list(MDP_K))
    I = intersect(K, power_of_variables(R, range(4), 4))
    I = IdealHandle(R, I.gb)
    reg = regularity(IdealHandle(PolyRing(FieldSpec.qq(), R.xvars[:4]), list(MDP_K)))
    J = build_frame(I, a)
    return MDPExample(K, I, reg, J.frame_spec, J)


CERT_KEYS = (
    "p", "q", "fingerprint", "orbit_dim", "hom0_dim", "step1_equal",
    "w2_obstructed", "w2_nf", "tnt", "neg_dim", "verdict",
)


@dataclass(frozen=True)
class ComponentCertificate:
    p: int
    q: int | None
    fingerprint: str
    orbit_dim: int
    hom0_dim: int
    step1_equal: bool
    w2_obstructed: bool
    w2_nf: str | None
    tnt: bool
    neg_dim: int
    verdict: bool
    notes: tuple = field(default=(), compare=False)

    def to_dict(self) -> dict:
        d = asdict(self)
        return {k: d[k] for k in CERT_KEYS}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> ComponentCertificate:
        d = json.loads(text)
        extra = set(d) - set(CERT_KEYS)
        missing = set(CERT_KEYS) - set(d)
        if extra or missing:
            raise ValueError(f"certificate keys mismatch: extra={sorted(extra)} missing={sorted(missing)}")
        return cls(**d)


def five_step_certificate(J: IdealHandle, p: int, q: int | None = None, threads: int | None = None) -> ComponentCertificate:
    """Steps (i) orbit = Hom_0, (iii) W_2 obstruction, (v) TNT; (ii) and (iv) follow from them."""
    if J.ring.field.characteristic != p:
        raise ValueError(f"ideal is not over F_{p}")
    notes = []
    orbit = tangent.degree_zero_orbit(J, threads)
    equal = orbit.orbit_dim == orbit.hom0_dim
    obstructed = False
    nf = None
    if q is not None and q != p:
        notes.append(f"w2 refused: q={q} is not prime; the unramified argument does not apply")
    else:
        try:
            rep = w2_check(J, p)
            obstructed = rep.obstructed
            nf = str(rep.normal_form)
            if not obstructed:
                notes.append("w2 inconclusive: the obstruction class vanishes")
        except W2Refused as exc:
            notes.append(f"w2 refused: {exc}")
    tnt, prof = tangent.tnt_check(J, threads)
    return ComponentCertificate(
        p=p,
        q=q,
        fingerprint=J.fingerprint(),
        orbit_dim=orbit.orbit_dim,
        hom0_dim=orbit.hom0_dim,
        step1_equal=equal,
        w2_obstructed=obstructed,
        w2_nf=nf,
        tnt=tnt,
        neg_dim=prof.negative_total,
        verdict=equal and obstructed and tnt,
        notes=tuple(notes),
    )
