import random

import pytest

from conftest import ring_of
from hilbpath import FieldSpec, IdealHandle, PolyRing
from hilbpath import tangent
from hilbpath.frames import build_frame
from randideals import artinian_suite, pick_bidegrees

ORACLE_IDEALS = 24
BIDEGREES_EACH = 5


@pytest.fixture(scope="module")
def suite():
    return artinian_suite(ORACLE_IDEALS)


def test_hom_piece_matches_brute_force_oracle(suite):
    rng = random.Random(11)
    checked = 0
    for J in suite:
        assert J.is_bihomogeneous() and J.colength() <= 60
        assert J.ring.nx <= 4 and J.ring.ny <= 4
        degs = pick_bidegrees(J, tangent.hom_system(J), rng, BIDEGREES_EACH)
        assert len(degs) == BIDEGREES_EACH
        for d in degs:
            assert tangent.hom_piece(J, d).dimension == tangent.hom_brute_force_oracle(J, d, budget=50000), (J, d)
            checked += 1
    assert checked >= 20 * 5


def test_piece_bases_satisfy_syzygies(suite):
    for J in suite[:8]:
        s = tangent.hom_system(J)
        for d in list(s.deltas())[:4]:
            piece = tangent.hom_piece(J, d)
            assert len(piece.basis) == piece.dimension
            for table in piece.basis:
                assert s.satisfies_syzygies(d, table)


@pytest.fixture(scope="module")
def frame3():
    S = PolyRing(FieldSpec.gf(5), ["x1", "x2", "x3"])
    return build_frame(IdealHandle(S, []), 2)


def test_partial_derivatives_are_tangents(frame3):
    s = tangent.hom_system(frame3)
    T = frame3.ring
    for v in range(T.nvars):
        d = (-1, 0) if v < T.nx else (0, -1)
        table = s.table_from_images(d, [g.derivative(v) for g in s.gens])
        assert s.satisfies_syzygies(d, table)


def test_threads_do_not_change_results(frame3):
    a = tangent.hom_profile(frame3, threads=1)
    b = tangent.hom_profile(frame3, threads=3)
    assert a == b


def test_profile_window_covers_support(frame3):
    prof = tangent.hom_profile(frame3)
    (amin, amax), (bmin, bmax) = prof.window
    for a, b in prof.pieces:
        assert amin <= a <= amax and bmin <= b <= bmax
    assert prof.negative_total == 6
    assert "negative_total: 6" in prof.format()


def test_point_has_tnt():
    R = PolyRing(FieldSpec.qq(), ["x", "y"])
    ok, prof = tangent.tnt_check(IdealHandle(R, ["x", "y"]))
    assert ok and prof.negative_total == 2


def test_fat_point_fails_tnt():
    # (x, y)^2 in the plane: the negative tangent space is 4 > 2 dimensional
    R = ring_of(0, 2)
    ok, prof = tangent.tnt_check(IdealHandle(R, ["x1^2", "x1*x2", "x2^2"]))
    assert not ok and prof.negative_total > 2


def test_orbit_of_monomial_complete_intersection():
    # (x1^2, x2^2) over Q: stabilizer is the diagonal torus, orbit dim 2 = dim Hom_0
    R = ring_of(0, 2)
    rep = tangent.degree_zero_orbit(IdealHandle(R, ["x1^2", "x2^2"]))
    assert rep.kernel_dim == 2 and rep.orbit_dim == 2
    assert rep.hom0_dim == 2 and rep.certified


def test_frobenius_conditions_in_char_p():
    # (x1^2, x2^3) over F_2: D(x1) is unconstrained by the derivation test since
    # d(x1^2) = 0, but the stabilizer must keep x1 in {l : l^2 in J}
    R = ring_of(2, 2)
    rep = tangent.degree_zero_orbit(IdealHandle(R, ["x1^2", "x2^3"]))
    assert rep.lie_kernel_dim == 3
    assert rep.kernel_dim == 2


def test_frobenius_invariant_ideal_has_trivial_orbit():
    # in characteristic 2, (x1^2, x2^2) is stable under all of GL_2
    R = ring_of(2, 2)
    rep = tangent.degree_zero_orbit(IdealHandle(R, ["x1^2", "x2^2"]))
    assert rep.kernel_dim == 4 and rep.orbit_dim == 0
    assert rep.hom0_dim == 2 and not rep.certified


def test_gprime_stabilizer():
    assert tangent.gprime_q_stabilizer(3, FieldSpec.gf(5)) == 3
    with pytest.raises(ValueError):
        tangent.gprime_q_stabilizer(3, FieldSpec.gf(2))


def test_hom_rejects_infinite_colength():
    R = ring_of(0, 2)
    with pytest.raises(ValueError):
        tangent.hom_piece(IdealHandle(R, ["x1"]), (0, 0))
