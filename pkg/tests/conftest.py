import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from hilbpath import FieldSpec, IdealHandle, PolyRing  # noqa: E402

settings.register_profile(
    "default",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

PRIMES = (2, 3, 5, 7, 101)


def ring_of(char, nvars, ny=0):
    xs = [f"x{i}" for i in range(1, nvars - ny + 1)]
    ys = [f"y{i}" for i in range(1, ny + 1)]
    return PolyRing(FieldSpec.from_char(char), xs, ys)


@st.composite
def polynomials(draw, ring, max_deg=3, max_terms=4, homogeneous=None):
    n = ring.nvars
    p = ring.field.characteristic
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        d = draw(st.integers(0, max_deg)) if homogeneous is None else homogeneous
        cuts = sorted(draw(st.lists(st.integers(0, d), min_size=n - 1, max_size=n - 1)))
        e = tuple(b - a for a, b in zip([0] + cuts, cuts + [d]))
        c = draw(st.integers(-5, 5)) if p == 0 else draw(st.integers(0, p - 1))
        terms[e] = terms.get(e, 0) + c
    return ring.poly(terms)


@st.composite
def ideals(draw, homogeneous=False, chars=PRIMES + (0,), nvars=(2, 3), max_gens=3, max_deg=3):
    char = draw(st.sampled_from(chars))
    n = draw(st.sampled_from(nvars))
    R = ring_of(char, n)
    k = draw(st.integers(1, max_gens))
    gens = []
    for _ in range(k):
        hd = draw(st.integers(1, max_deg)) if homogeneous else None
        gens.append(draw(polynomials(R, max_deg=max_deg, homogeneous=hd)))
    return IdealHandle(R, gens)


@pytest.fixture
def qq3():
    return ring_of(0, 3)
