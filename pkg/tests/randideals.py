"""Seeded random bihomogeneous Artinian ideals for the Hom oracle suite."""

import random

from conftest import ring_of
from hilbpath import IdealHandle
from hilbpath.groebner import INFINITE, power_of_variables

MAX_COLENGTH = 60


def _random_form(rng, R, bideg, p):
    mons = R.monomials_of_bidegree(bideg)
    k = rng.randint(1, min(3, len(mons)))
    terms = {}
    for m in rng.sample(mons, k):
        terms[m] = rng.randrange(1, p) if p else rng.randint(-3, 3) or 1
    return R.poly(terms)


def random_artinian(rng: random.Random):
    """A bihomogeneous ideal of finite colength <= 60 in at most 4+4 variables, or None."""
    p = rng.choice((2, 3, 5, 7, 0))
    nx = rng.randint(1, 4)
    ny = rng.randint(1, 4)
    if nx + ny > 6:
        ny = 6 - nx
    R = ring_of(p, nx + ny, ny)
    a = rng.randint(2, 4 if nx <= 2 else 3)
    b = rng.randint(2, 4 if ny <= 2 else 3)
    gens = power_of_variables(R, range(nx), a).generators + power_of_variables(R, range(nx, nx + ny), b).generators
    for _ in range(rng.randint(1, 4)):
        bideg = (rng.randint(0, a - 1), rng.randint(0, b - 1))
        if bideg == (0, 0):
            bideg = (1, 1)
        gens.append(_random_form(rng, R, bideg, p))
    J = IdealHandle(R, gens)
    c = J.colength()
    if c == INFINITE or c > MAX_COLENGTH or c <= 1:
        return None
    return J


def artinian_suite(count=20, seed=2024, min_bidegrees=5):
    from hilbpath.tangent import hom_system

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        J = random_artinian(rng)
        if J is not None and len(hom_system(J).deltas()) >= min_bidegrees:
            out.append(J)
    return out


def pick_bidegrees(J, system, rng, k=5):
    """k bidegrees with unknowns, negatives first, then a random mix."""
    cands = sorted(system.deltas())
    neg = [d for d in cands if d[0] + d[1] < 0]
    rest = [d for d in cands if d[0] + d[1] >= 0]
    rng.shuffle(neg)
    rng.shuffle(rest)
    chosen = (neg[:2] + rest)[:k]
    if len(chosen) < k:
        chosen += neg[2:2 + k - len(chosen)]
    return chosen
