"""Line-oriented ideal files.

    # comment
    ring char=3 x=[x1,x2] y=[y1,y2]
    gen x1*y1 + x2*y2
    frame a=2 b=1          (optional: the ideal is a base ideal for a frame)
    frame a=2 tweaked
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .field import FieldSpec
from .groebner import IdealHandle
from .ring import ParseError, PolyRing, parse_polynomial


class IdealFileError(ValueError):
    def __init__(self, msg, line, col=1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class FrameDirective:
    a: int
    b: int = 1
    tweaked: bool = False


@dataclass
class IdealFile:
    ring: PolyRing
    ideal: IdealHandle
    frame: FrameDirective | None = None


_RING_RE = re.compile(r"ring\s+char=(\d+)\s+x=\[([^\]]*)\](?:\s+y=\[([^\]]*)\])?\s*$")


def _names(s):
    return [v.strip() for v in s.split(",") if v.strip()] if s else []


def parse_ideal_file(src: str) -> IdealFile:
    ring = None
    gens = []
    frame = None
    for ln, raw in enumerate(src.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue
        indent = len(line) - len(stripped)
        word = stripped.split(None, 1)[0]
        if word == "ring":
            if ring is not None:
                raise IdealFileError("duplicate ring line", ln, indent + 1)
            m = _RING_RE.match(stripped)
            if not m:
                raise IdealFileError("expected 'ring char=<p|0> x=[...] y=[...]'", ln, indent + 1)
            try:
                ring = PolyRing(FieldSpec.from_char(int(m.group(1))), _names(m.group(2)), _names(m.group(3)))
            except ValueError as exc:
                raise IdealFileError(str(exc), ln, indent + 1) from None
        elif word == "gen":
            if ring is None:
                raise IdealFileError("'gen' before 'ring'", ln, indent + 1)
            body = stripped[3:]
            offset = indent + 3 + (len(body) - len(body.lstrip())) + 1
            try:
                gens.append(parse_polynomial(body.strip(), ring))
            except ParseError as exc:
                raise IdealFileError(exc.msg, ln, offset + exc.pos) from None
            except (KeyError, ValueError) as exc:
                raise IdealFileError(str(exc).strip("'\""), ln, offset) from None
        elif word == "frame":
            frame = _parse_frame(stripped, ln, indent)
        else:
            raise IdealFileError(f"unknown directive {word!r}", ln, indent + 1)
    if ring is None:
        raise IdealFileError("missing ring line", 1)
    return IdealFile(ring, IdealHandle(ring, gens), frame)


def _parse_frame(s, ln, indent):
    opts = {}
    tweaked = False
    for tok in s.split()[1:]:
        if tok == "tweaked":
            tweaked = True
        elif "=" in tok:
            k, v = tok.split("=", 1)
            if k not in ("a", "b") or not v.isdigit():
                raise IdealFileError(f"bad frame option {tok!r}", ln, indent + 1)
            opts[k] = int(v)
        else:
            raise IdealFileError(f"bad frame option {tok!r}", ln, indent + 1)
    if "a" not in opts:
        raise IdealFileError("frame needs a=<int>", ln, indent + 1)
    return FrameDirective(opts["a"], opts.get("b", 1), tweaked)


def format_ideal_file(ring: PolyRing, gens, comments=(), frame: FrameDirective | None = None) -> str:
    lines = [f"# {c}" for c in comments]
    y = f" y=[{','.join(ring.yvars)}]" if ring.yvars else ""
    lines.append(f"ring char={ring.field.characteristic} x=[{','.join(ring.xvars)}]{y}")
    if frame is not None:
        extra = " tweaked" if frame.tweaked else f" b={frame.b}"
        lines.append(f"frame a={frame.a}{extra}")
    lines.extend(f"gen {g}" for g in gens)
    return "\n".join(lines) + "\n"
