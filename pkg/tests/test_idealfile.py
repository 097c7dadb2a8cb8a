from pathlib import Path

import pytest

from hilbpath.idealfile import FrameDirective, IdealFileError, format_ideal_file, parse_ideal_file

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def test_q3_presaturation_file():
    f = parse_ideal_file((DATA / "q3_presat.ideal").read_text())
    assert f.ring.nvars == 6 and f.ring.field.characteristic == 3
    assert len(f.ideal.generators) == 4
    assert str(f.ideal.generators[0]) == "x1*x2 + x3*x4 + x5*x6"


def test_empty_generator_list_is_zero_ideal():
    f = parse_ideal_file("ring char=0 x=[a,b]\n")
    assert f.ideal.generators == [] and f.ideal.gb == []


def test_bigraded_ring_and_comments():
    f = parse_ideal_file("# hello\nring char=5 x=[x1,x2] y=[y1,y2]  # trailing\n\ngen x1*y1 + x2*y2\n")
    assert f.ring.yvars == ("y1", "y2")
    assert f.ideal.generators[0].bidegree() == (1, 1)


def test_frame_directive_round_trip():
    f = parse_ideal_file((DATA / "tweaked4.ideal").read_text())
    assert f.frame == FrameDirective(2, 1, True)
    text = format_ideal_file(f.ring, f.ideal.generators, ["c"], f.frame)
    assert parse_ideal_file(text).frame == f.frame


@pytest.mark.parametrize(
    "src, line, col",
    [
        ("ring char=0 x=[a,a]\n", 1, 1),
        ("gen a\n", 1, 1),
        ("ring char=0 x=[a]\ngen a +\n", 2, 8),
        ("ring char=0 x=[a]\n  gen b\n", 2, 7),
        ("ring char=0 x=[a]\nfoo\n", 2, 1),
        ("ring char=4 x=[a]\n", 1, 1),
        ("ring char=0 x=[a]\nring char=0 x=[a]\n", 2, 1),
        ("ring char=0 x=[a]\nframe b=2\n", 2, 1),
        ("", 1, 1),
    ],
)
def test_errors_report_line_and_column(src, line, col):
    with pytest.raises(IdealFileError) as exc:
        parse_ideal_file(src)
    assert (exc.value.line, exc.value.col) == (line, col)
    assert f"line {line}, column {col}" in str(exc.value)
