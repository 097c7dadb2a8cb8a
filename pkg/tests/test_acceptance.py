"""Acceptance criteria 1-8, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` or ``python tests/test_acceptance.py``.
"""

import os
import random
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

import oracles  # noqa: E402
from hilbpath import FieldSpec, IdealHandle, PolyRing, tangent  # noqa: E402
from hilbpath.frames import build_frame, build_tweaked_frame, frame_like_check  # noqa: E402
from hilbpath.groebner import ideal_quotient, maximal_ideal, power_of_variables, quotient, saturate  # noqa: E402
from hilbpath.pathology import (  # noqa: E402
    MDP_K,
    W2Refused,
    berthelot_ogus_ideal,
    build_q_example,
    five_step_certificate,
    w2_check,
)
from hilbpath.resolution import regularity  # noqa: E402


def _q_checks(q, p):
    J = build_q_example(q)
    orbit = tangent.degree_zero_orbit(J)
    ok_tnt, prof = tangent.tnt_check(J)
    return J, orbit, ok_tnt, prof


def criterion_1():
    J, orbit, tnt, prof = _q_checks(3, 3)
    got = (orbit.hom0_dim, prof.negative_total, orbit.kernel_dim, orbit.orbit_dim)
    return got == (26, 6, 10, 26), f"Hom0, Hom<0, kernel, orbit = {got}; expected (26, 6, 10, 26)"


def criterion_2():
    cert5 = five_step_certificate(build_q_example(5), 5, 5)
    J4, orbit4, tnt4, prof4 = _q_checks(4, 2)
    refused = False
    try:
        w2_check(J4, 2)
    except W2Refused:
        refused = True
    cert4 = five_step_certificate(J4, 2, 4)
    refused = refused and any("refused" in n for n in cert4.notes)
    ok5 = cert5.verdict and cert5.tnt and cert5.step1_equal
    ok4 = orbit4.certified and orbit4.orbit_dim == 26 and tnt4 and prof4.negative_total == 6 and refused
    detail = (f"q=5 verdict={cert5.verdict} (orbit {cert5.orbit_dim}, Hom0 {cert5.hom0_dim}, neg {cert5.neg_dim}); "
              f"q=4 orbit {orbit4.orbit_dim} = Hom0 {orbit4.hom0_dim}, TNT {tnt4}, w2 refused {refused}")
    return ok5 and ok4, detail


def criterion_3():
    J = build_q_example(3)
    rep = w2_check(J, 3)
    target = J.normal_form(J.ring.parse("2*x1*x2*x3*x4*x5*x6"))
    ok = rep.obstructed and rep.normal_form == target
    bo = {p: w2_check(berthelot_ogus_ideal(p), p).obstructed for p in (2, 3, 5)}
    return ok and all(bo.values()), f"q=3 NF = {rep.normal_form}; matches NF(2x1..x6): {ok}; BO obstructed {bo}"


def criterion_4():
    S = PolyRing(FieldSpec.gf(5), ["x1", "x2", "x3"])
    J = build_frame(IdealHandle(S, []), 2)
    prof = tangent.hom_profile(J)
    very_neg = [d for d, k in prof.pieces.items() if (d[0] <= -2 or d[1] <= -2) and k]
    p = prof.pieces
    rep = frame_like_check(J)
    ok = (not very_neg and p.get((-1, 0)) == 3 and p.get((0, -1)) == 3 and p.get((-1, -1), 0) == 0
          and rep.gmap_total == 9 and rep.gmap_injective)
    return ok, (f"nonzero very negative pieces {very_neg}; (-1,0)={p.get((-1, 0))} (0,-1)={p.get((0, -1))} "
                f"(-1,-1)={p.get((-1, -1), 0)}; gmap {rep.gmap_total}, injective {rep.gmap_injective}")


def criterion_5():
    S = PolyRing(FieldSpec.gf(2), ["x1", "x2", "x3", "x4"])
    J = build_tweaked_frame(IdealHandle(S, []), 2)
    rep = frame_like_check(J)
    ok = rep.profile.negative_total == 8 and rep.gmap_total == 16 and rep.gmap_injective and rep.verdict
    return ok, (f"negative total {rep.profile.negative_total} (want 8); gmap total {rep.gmap_total} (want 16); "
                f"injective {rep.gmap_injective}; frame_like {rep.verdict}")


def criterion_6():
    R = PolyRing(FieldSpec.qq(), ["x1", "x2", "x3", "x4"])
    rK = regularity(IdealHandle(R, list(MDP_K)))
    bad = []
    for n in range(1, 5):
        Rn = PolyRing(FieldSpec.qq(), [f"x{i}" for i in range(1, n + 1)])
        for d in range(1, 5):
            if regularity(power_of_variables(Rn, range(n), d)) != d:
                bad.append((n, d))
    return rK == 4 and not bad, f"reg(K) = {rK}; reg(m^d) != d for {bad or 'none'}"


def criterion_7():
    from randideals import artinian_suite, pick_bidegrees

    rng = random.Random(11)
    suite = artinian_suite(24)
    checks = fails = 0
    for J in suite:
        for d in pick_bidegrees(J, tangent.hom_system(J), rng, 5):
            checks += 1
            if tangent.hom_piece(J, d).dimension != tangent.hom_brute_force_oracle(J, d, budget=50000):
                fails += 1
    return fails == 0 and len(suite) >= 20 and checks >= 100, f"{len(suite)} ideals, {checks} bidegrees, {fails} mismatches"


def _random_poly(rng, R, max_deg=3, homogeneous=None):
    p = R.field.characteristic
    terms = {}
    for _ in range(rng.randint(1, 4)):
        d = homogeneous if homogeneous is not None else rng.randint(0, max_deg)
        mons = R.monomials_of_degree(d)
        c = rng.randrange(p) if p else rng.randint(-5, 5)
        m = rng.choice(mons)
        terms[m] = terms.get(m, 0) + c
    return R.poly(terms)


def _random_ideal(rng, homogeneous=False):
    p = rng.choice((2, 3, 5, 7, 101, 0))
    n = rng.choice((2, 3, 4))
    top = 2 if n == 4 else 3
    R = PolyRing(FieldSpec.from_char(p), [f"x{i}" for i in range(1, n + 1)])
    gens = [_random_poly(rng, R, max_deg=top, homogeneous=rng.randint(1, top) if homogeneous else None)
            for _ in range(rng.randint(2, 4))]
    return IdealHandle(R, gens)


def criterion_8(instances=100):
    rng = random.Random(8)
    fails = {"buchberger": 0, "nf": 0, "saturation": 0, "quotient": 0}
    for _ in range(instances):
        I = _random_ideal(rng, homogeneous=rng.random() < 0.5)
        p = I.ring.field.characteristic
        G = [oracles.as_dict(g, p) for g in I.gb]
        if not oracles.buchberger_criterion(G, p):
            fails["buchberger"] += 1

        f = _random_poly(rng, I.ring, 4)
        g = _random_poly(rng, I.ring, 4)
        a = rng.randint(-3, 3)
        nf = I.normal_form
        if nf(nf(f)) != nf(f) or nf(f * a + g) != nf(f) * a + nf(g):
            fails["nf"] += 1

        H = _random_ideal(rng, homogeneous=True)
        m = maximal_ideal(H.ring)
        S = saturate(H, m)
        if not (S.contains_ideal(H) and quotient(S, m).same_ideal(S)):
            fails["saturation"] += 1

        h = _random_poly(rng, H.ring, homogeneous=rng.randint(1, 2))
        if h.is_zero():
            h = H.ring.var(0)
        Q = ideal_quotient(H, h)
        if not (Q.contains_ideal(H) and all(H.contains(q * h) for q in Q.gb)):
            fails["quotient"] += 1
    return not any(fails.values()), f"{instances} instances per suite; failures {fails}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


def _report(k, fn):
    t = time.time()
    ok, detail = fn()
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'} ({time.time() - t:.1f}s) {detail}"
    return ok, line


@pytest.mark.parametrize("k", range(1, 9))
def test_criterion(k, capsys):
    ok, line = _report(k, CRITERIA[k - 1])
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_report(k, fn) for k, fn in enumerate(CRITERIA, start=1)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
