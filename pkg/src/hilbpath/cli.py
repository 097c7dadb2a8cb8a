"""Command-line front end.

Exit status: 0 success, 2 a check ran and came out false (or inconclusive),
1 error.  ``--format json`` emits documents with fixed keys.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import frames, groebner, pathology, resolution, tangent
from .field import FieldSpec
from .frames import FrameSpec, HypothesisError
from .groebner import IdealHandle, maximal_ideal
from .idealfile import FrameDirective, IdealFile, format_ideal_file, parse_ideal_file
from .ring import ParseError, PolyRing

EXIT_OK, EXIT_ERROR, EXIT_FALSE = 0, 1, 2


class CliError(Exception):
    pass


# named examples ------------------------------------------------------------


def _zero_base(p, n):
    R = PolyRing(FieldSpec.from_char(p), [f"x{i}" for i in range(1, n + 1)])
    return IdealHandle(R, [])


def _example(name: str) -> tuple:
    """(IdealFile, metadata) for a named example."""
    if name in ("q3", "q4", "q5"):
        q = int(name[1])
        J = pathology.build_q_example(q)
        p = J.ring.field.characteristic
        return IdealFile(J.ring, J), {"p": p, "q": q, "comment": f"q-example, q={q}, over GF({p})"}
    if name in ("bo2", "bo3", "bo5"):
        p = int(name[2])
        J = pathology.berthelot_ogus_ideal(p)
        return IdealFile(J.ring, J), {"p": p, "q": p, "comment": f"(x1^p..x6^p, Q) over GF({p})"}
    if name == "mdp-k":
        R = PolyRing(FieldSpec.qq(), ["x1", "x2", "x3", "x4"])
        K = IdealHandle(R, list(pathology.MDP_K))
        return IdealFile(R, K), {"comment": "ideal K over QQ"}
    if name == "mdp":
        ex = pathology.build_mdp_example()
        return IdealFile(ex.I.ring, ex.I, FrameDirective(5)), {"comment": "I = K cap (x1..x4)^4, frame a=5"}
    if name == "frame3":
        I = _zero_base(5, 3)
        return IdealFile(I.ring, I, FrameDirective(2, 1)), {"comment": "I = 0 in 3 variables over GF(5)"}
    if name == "tweaked4":
        I = _zero_base(2, 4)
        return IdealFile(I.ring, I, FrameDirective(2, 4, True)), {"comment": "I = 0 in 4 variables over GF(2)"}
    if name == "point":
        R = PolyRing(FieldSpec.qq(), ["x", "y"])
        return IdealFile(R, IdealHandle(R, ["x", "y"])), {"comment": "the origin of the plane"}
    raise CliError(f"unknown example {name!r}; known: {', '.join(EXAMPLES)}")


EXAMPLES = ("q3", "q4", "q5", "bo2", "bo3", "bo5", "mdp-k", "mdp", "frame3", "tweaked4", "point")


# helpers -------------------------------------------------------------------


def _load(path: str) -> IdealFile:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_ideal_file(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _source(args) -> IdealFile:
    if getattr(args, "example", None):
        return _example(args.example)[0]
    if not args.file:
        raise CliError("an ideal file (or --example) is required")
    return _load(args.file)


def _poly(ring, src):
    try:
        return ring.parse(src)
    except ParseError as exc:
        raise CliError(f"in polynomial {src!r}: {exc}") from None


def _bidegree(s):
    try:
        parts = [int(v) for v in s.split(",")]
    except ValueError:
        raise CliError(f"bad bidegree {s!r}; expected 'a,b'") from None
    if len(parts) == 1:
        parts.append(0)
    if len(parts) != 2:
        raise CliError(f"bad bidegree {s!r}; expected 'a,b'")
    return tuple(parts)


def _frame_spec(src: IdealFile, args) -> FrameSpec:
    a = args.a if getattr(args, "a", None) is not None else (src.frame.a if src.frame else None)
    if a is None:
        raise CliError("frame size missing: pass --a or a 'frame a=..' line")
    tweaked = getattr(args, "tweaked", False) or (src.frame.tweaked if src.frame else False)
    if tweaked:
        return FrameSpec(src.ideal, a, src.ring.nx, char2=True)
    b = args.b if getattr(args, "b", None) is not None else (src.frame.b if src.frame else 1)
    return FrameSpec(src.ideal, a, b)


def _build(spec: FrameSpec) -> IdealHandle:
    if spec.char2:
        return frames.build_tweaked_frame(spec.base_ideal, spec.a)
    return frames.build_frame(spec.base_ideal, spec.a, spec.b)


def _target(args) -> IdealHandle:
    """The ideal a tangent command works on: the frame when the file carries a frame line."""
    src = _source(args)
    if src.frame is None:
        return src.ideal
    return _build(_frame_spec(src, args))


def _ideal_doc(I: IdealHandle, gens) -> dict:
    return {"ring": str(I.ring), "generators": [str(g) for g in gens]}


# commands ------------------------------------------------------------------
# each returns (exit code, text, json document)


def cmd_gb(args):
    src = _source(args)
    gb = src.ideal.gb
    return EXIT_OK, "\n".join(map(str, gb)), {"ring": str(src.ring), "gb": [str(g) for g in gb]}


def cmd_nf(args):
    src = _source(args)
    r = src.ideal.normal_form(_poly(src.ring, args.poly))
    return EXIT_OK, str(r), {"nf": str(r)}


def cmd_quotient(args):
    src = _source(args)
    if args.ideal:
        other = _load(args.ideal)
        if other.ring != src.ring:
            raise CliError("the two ideal files use different rings")
        Q = groebner.quotient(src.ideal, other.ideal)
    elif args.poly:
        Q = groebner.ideal_quotient(src.ideal, _poly(src.ring, args.poly))
    else:
        raise CliError("quotient needs --poly or --ideal")
    gb = Q.gb
    return EXIT_OK, "\n".join(map(str, gb)), _ideal_doc(Q, gb)


def cmd_intersect(args):
    a = _load(args.file)
    b = _load(args.other)
    if a.ring != b.ring:
        raise CliError("the two ideal files use different rings")
    K = groebner.intersect(a.ideal, b.ideal)
    gb = K.gb
    return EXIT_OK, "\n".join(map(str, gb)), _ideal_doc(K, gb)


def cmd_sat(args):
    src = _source(args)
    if args.ideal:
        other = _load(args.ideal)
        if other.ring != src.ring:
            raise CliError("the two ideal files use different rings")
        by = other.ideal
    else:
        by = maximal_ideal(src.ring)
    S = groebner.saturate(src.ideal, by)
    gb = S.gb
    return EXIT_OK, "\n".join(map(str, gb)), _ideal_doc(S, gb)


def cmd_resolve(args):
    src = _source(args)
    t = resolution.minimal_free_resolution(src.ideal, args.max_steps)
    text = t.format()
    if not t.complete:
        text += "\n# step budget exhausted: table is partial"
    return EXIT_OK, text, {"betti": [list(r) for r in t.rows()], "complete": t.complete}


def cmd_reg(args):
    src = _source(args)
    t = resolution.minimal_free_resolution(src.ideal, args.max_steps)
    if not t.complete:
        raise CliError("resolution step budget exhausted")
    r = t.regularity()
    return EXIT_OK, f"regularity: {r}", {"regularity": r}


def cmd_hom(args):
    J = _target(args)
    d = _bidegree(args.bidegree)
    piece = tangent.hom_piece(J, d)
    return EXIT_OK, f"dim Hom_{d} = {piece.dimension}", {"bidegree": list(d), "dimension": piece.dimension}


def _profile_doc(prof):
    return {
        "window": [list(prof.window[0]), list(prof.window[1])],
        "pieces": [[a, b, k] for (a, b), k in sorted(prof.pieces.items())],
        "negative_total": prof.negative_total,
        "gmap_total": prof.gmap_total,
    }


def cmd_profile(args):
    J = _target(args)
    prof = tangent.hom_profile(J, threads=args.threads)
    return EXIT_OK, prof.format(), _profile_doc(prof)


def cmd_tnt(args):
    J = _target(args)
    ok, prof = tangent.tnt_check(J, args.threads)
    text = f"TNT: {str(ok).lower()}, dim_{{<0}} = {prof.negative_total}"
    doc = {"tnt": ok, "negative_total": prof.negative_total, "nvars": J.ring.nvars}
    return (EXIT_OK if ok else EXIT_FALSE), text, doc


def cmd_orbit(args):
    J = _target(args)
    rep = tangent.degree_zero_orbit(J, args.threads)
    doc = {
        "ambient_group_dim": rep.ambient_group_dim,
        "kernel_dim": rep.kernel_dim,
        "lie_kernel_dim": rep.lie_kernel_dim,
        "orbit_dim": rep.orbit_dim,
        "hom0_dim": rep.hom0_dim,
        "certified": rep.certified,
    }
    text = "\n".join(f"{k}: {v}" for k, v in doc.items())
    return EXIT_OK, text, doc


def cmd_frame(args, tweaked=False):
    src = _source(args)
    if tweaked:
        args.tweaked = True
    spec = _frame_spec(src, args)
    J = _build(spec)
    gens = [g for g, _ in J.minimal_generators()]
    kind = "tweaked frame" if spec.char2 else "frame"
    text = format_ideal_file(J.ring, gens, [f"{kind} of size a={spec.a}"]).rstrip("\n")
    return EXIT_OK, text, _ideal_doc(J, gens)


def cmd_framelike(args):
    src = _source(args)
    spec = _frame_spec(src, args)
    J = _build(spec)
    rep = frames.frame_like_check(J, spec, args.threads)
    doc = {
        "cond_a": rep.cond_a,
        "negative_total": rep.profile.negative_total,
        "cond_b": rep.cond_b,
        "gmap_total": rep.gmap_total,
        "gmap_injective": rep.gmap_injective,
        "cond_c": rep.cond_c,
        "b": rep.b,
        "verdict": rep.verdict,
    }
    text = "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in doc.items())
    text += f"\n# {rep.note}"
    return (EXIT_OK if rep.verdict else EXIT_FALSE), text, doc


def cmd_w2(args):
    src = _source(args)
    p = args.p if args.p is not None else src.ring.field.characteristic
    try:
        rep = pathology.w2_check(src.ideal, p, args.pairs)
    except pathology.W2Refused as exc:
        raise CliError(f"w2 refused: {exc}") from None
    doc = {"p": p, "witness": str(rep.witness), "nf": str(rep.normal_form), "status": rep.status}
    text = f"status: {rep.status}\nwitness: {rep.witness}\nnf: {rep.normal_form}"
    return (EXIT_OK if rep.obstructed else EXIT_FALSE), text, doc


def cmd_example(args):
    src, meta = _example(args.name)
    gens = src.ideal.generators
    text = format_ideal_file(src.ring, gens, [meta["comment"]], src.frame).rstrip("\n")
    doc = {"name": args.name, "ring": str(src.ring), "generators": [str(g) for g in gens]}
    return EXIT_OK, text, doc


def cmd_cert(args):
    if args.example:
        src, meta = _example(args.example)
        p, q = meta.get("p"), meta.get("q")
        if p is None:
            raise CliError(f"example {args.example!r} is not over a prime field")
    else:
        src = _source(args)
        p = src.ring.field.characteristic
        q = args.q
    if args.p is not None:
        p = args.p
    if not p:
        raise CliError("certificates need a prime field")
    J = _build(_frame_spec(src, args)) if src.frame else src.ideal
    cert = pathology.five_step_certificate(J, p, q, args.threads)
    text = cert.to_json()
    if args.format != "json":
        text += "".join(f"\n# {n}" for n in cert.notes)
    return (EXIT_OK if cert.verdict else EXIT_FALSE), text, cert.to_dict()


COMMANDS = {
    "gb": cmd_gb,
    "nf": cmd_nf,
    "quotient": cmd_quotient,
    "intersect": cmd_intersect,
    "sat": cmd_sat,
    "resolve": cmd_resolve,
    "reg": cmd_reg,
    "hom": cmd_hom,
    "profile": cmd_profile,
    "tnt": cmd_tnt,
    "orbit": cmd_orbit,
    "frame": cmd_frame,
    "tweaked-frame": lambda a: cmd_frame(a, tweaked=True),
    "framelike": cmd_framelike,
    "w2": cmd_w2,
    "example": cmd_example,
    "cert": cmd_cert,
}


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; here 2 means "checked and false"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", "-o", help="write output here instead of stdout")
    common.add_argument("--threads", type=int, default=None, help="worker processes for Hom pieces")

    ap = _Parser(prog="hilbpath", description="Tangent spaces and pathologies of Hilbert schemes of points.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_, file=True, example=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if file:
            p.add_argument("file", nargs="?", help="ideal file")
        if example:
            p.add_argument("--example", choices=EXAMPLES, help="use a named example instead of a file")
        return p

    add("gb", "reduced Groebner basis")
    add("nf", "normal form of a polynomial").add_argument("--poly", required=True)
    p = add("quotient", "ideal quotient (I : f) or (I : J)")
    p.add_argument("--poly")
    p.add_argument("--ideal", help="second ideal file")
    p = add("intersect", "intersection of two ideals", example=False)
    p.add_argument("other", help="second ideal file")
    add("sat", "saturation, by default at the origin").add_argument("--ideal", help="saturate by this ideal")
    for name, h in (("resolve", "Betti table of a minimal free resolution"), ("reg", "Castelnuovo-Mumford regularity")):
        add(name, h).add_argument("--max-steps", type=int, default=None)
    add("hom", "one bigraded piece of Hom(J, T/J)").add_argument("--bidegree", required=True, help="a,b")
    add("profile", "all pieces of Hom(J, T/J) in the support window")
    add("tnt", "trivial negative tangents check")
    add("orbit", "stabilizer and orbit dimensions")
    for name in ("frame", "tweaked-frame", "framelike"):
        p = add(name, {"frame": "build a frame", "tweaked-frame": "build a characteristic-2 tweaked frame",
                       "framelike": "frame-like checklist"}[name])
        p.add_argument("--a", type=int)
        if name != "tweaked-frame":
            p.add_argument("--b", type=int)
        if name == "framelike":
            p.add_argument("--tweaked", action="store_true")
    p = add("w2", "W_2 obstruction witness")
    p.add_argument("--p", type=int)
    p.add_argument("--pairs", type=int)
    p = add("example", "print a named example as an ideal file", file=False, example=False)
    p.add_argument("name", choices=EXAMPLES)
    p = add("cert", "five-step component certificate (JSON)")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    if args.threads is None:
        args.threads = tangent.default_threads()
    try:
        code, text, doc = COMMANDS[args.command](args)
    except (CliError, HypothesisError, ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    out = json.dumps(doc, indent=2, sort_keys=False) if args.format == "json" else text
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return code


def main():
    sys.exit(run())
