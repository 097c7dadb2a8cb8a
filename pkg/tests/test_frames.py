import pytest

from hilbpath import FieldSpec, IdealHandle, PolyRing
from hilbpath import tangent
from hilbpath.frames import (
    FrameSpec,
    HypothesisError,
    build_frame,
    build_tweaked_frame,
    check_regular_sequence,
    find_regular_sequence,
    frame_like_check,
    frame_like_hypotheses,
    p_ideal_generators,
    truncate_ideal,
    y_names,
)


def S(p, n, names=None):
    return PolyRing(FieldSpec.from_char(p), names or [f"x{i}" for i in range(1, n + 1)])


def test_frame_generators():
    I = IdealHandle(S(5, 3), ["x1^3"])
    J = build_frame(I, 3)
    T = J.ring
    assert T.yvars == ("y1", "y2", "y3")
    assert J.contains(T.parse("x1*y1 + x2*y2 + x3*y3"))
    assert J.contains(T.parse("y1*y2")) and J.contains(T.parse("x2^4"))
    assert not J.contains(T.parse("x2^3")) and not J.contains(T.parse("y1"))
    assert J.frame_spec.a == 3 and J.frame_spec.n == 3


def test_frame_refuses_char_2():
    with pytest.raises(HypothesisError):
        build_frame(IdealHandle(S(2, 3), []), 2)
    with pytest.raises(HypothesisError):
        build_tweaked_frame(IdealHandle(S(3, 4), []), 2)


def test_frame_spec_validation():
    with pytest.raises(ValueError):
        FrameSpec(IdealHandle(S(5, 3), []), 1)
    with pytest.raises(ValueError):
        FrameSpec(IdealHandle(S(5, 2), ["x1^2 + x2"]), 2)


def test_y_names():
    assert y_names(("x1", "x2")) == ("y1", "y2")
    assert y_names(("a", "b")) == ("a_y", "b_y")


def test_p_ideal_has_seven_generators_for_n4():
    J = build_tweaked_frame(IdealHandle(S(2, 4), []), 2)
    gens = p_ideal_generators(J.ring)
    assert len(gens) == 7
    assert sorted(str(g) for g in gens) == sorted(
        ["y1^2", "y2^2", "y3^2", "y4^2", "y1*y2", "y1*y3", "y1*y4"]
    )


def test_frame3_table_and_frame_like():
    J = build_frame(IdealHandle(S(5, 3), []), 2)
    prof = tangent.hom_profile(J)
    for (a, b), k in prof.pieces.items():
        if a <= -2 or b <= -2:
            assert k == 0, (a, b)
    assert prof.pieces[(-1, 0)] == 3 and prof.pieces[(0, -1)] == 3
    assert prof.pieces.get((-1, -1), 0) == 0
    rep = frame_like_check(J)
    assert rep.cond_a and rep.cond_b and rep.cond_c and rep.verdict
    assert rep.gmap_total == 9 and rep.gmap_injective


def test_frame_like_hypotheses_named():
    J = build_frame(IdealHandle(S(5, 3), ["x1^2"]), 2)
    with pytest.raises(HypothesisError, match="I_2 != 0"):
        frame_like_hypotheses(J.frame_spec)
    J = build_frame(IdealHandle(S(5, 2), []), 2)
    with pytest.raises(HypothesisError, match="n < 3"):
        frame_like_check(J)


def test_tweaked_frame_extra_degree_one_tangent_is_a_homomorphism():
    # with a = 2, x_i^2 * x1 * y4 lies in m_x^3, so y2^2 -> x1*y4 passes every syzygy
    J = build_tweaked_frame(IdealHandle(S(2, 4), []), 2)
    s = tangent.hom_system(J)
    T = J.ring
    images = [T.parse("x1*y4") if str(g) == "y2^2" else T.zero() for g in s.gens]
    assert s.satisfies_syzygies((1, -1), s.table_from_images((1, -1), images))


def test_tweaked_frame_degree_one_piece_matches_oracle():
    J = build_tweaked_frame(IdealHandle(S(2, 4), []), 2)
    assert tangent.hom_piece(J, (1, -1)).dimension == tangent.hom_brute_force_oracle(J, (1, -1), budget=30000)


def test_regular_sequences():
    R = S(5, 3)
    I = IdealHandle(R, ["x1*x2"])
    rep = check_regular_sequence(I, [R.parse("x1")])
    assert not rep.regular and rep.failed_at == 1
    rep = check_regular_sequence(IdealHandle(R, []), [R.var(i) for i in range(3)])
    assert rep.regular and not rep.probabilistic
    found = find_regular_sequence(IdealHandle(R, []), 3)
    assert found.regular and found.probabilistic and len(found.sequence) == 3


def test_truncation():
    R = S(5, 3)
    I = IdealHandle(R, ["x1*x2"])
    T = truncate_ideal(I, 3, 1)
    assert all(g.total_degree() >= 3 for g in T.generators)
    assert T.contains(R.parse("x1*x2*x3")) and not T.contains(R.parse("x1*x2"))
    assert T.contains(R.parse("x3^4")) and not T.contains(R.parse("x3^3"))
