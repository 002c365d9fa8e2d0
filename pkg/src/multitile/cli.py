"""Command-line front end.

Exit codes: 0 success (a tiling, a certificate, a report), 1 negative verdict
or a mismatch with the file's ``expected`` block, 2 unreadable input,
3 unsupported dimension, 4 body not o-symmetric.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .errors import DegenerateBase, DimensionMismatch, NotATiling, NotOriginSymmetric, ParseError, Unsupported
from .exactgeom import Q, symmetry_center, translate, volume
from .render import RenderSpec, default_window, render_svg
from .tiler import classify, collision_vectors, packing_bound_from_collisions
from .vdc import (
    build_lifting,
    classify_symmetric,
    collision_census,
    detect_lifting,
    is_extremal,
    replication_decomposition,
    replication_sublattices,
    vdc_check,
)
from .zlinalg import affine_dim

EXIT_OK, EXIT_NEGATIVE, EXIT_PARSE, EXIT_DIM, EXIT_SYMMETRY = 0, 1, 2, 3, 4


class _Exit(Exception):
    def __init__(self, code, message=""):
        super().__init__(message)
        self.code = code


def _rationals(text: str) -> tuple:
    try:
        return tuple(Q(x) for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise _Exit(EXIT_PARSE, f"bad rational list {text!r}") from exc


def _matrix(text: str) -> tuple:
    """``"1,0,0;0,1,0;0,0,1"`` -> integer rows."""
    try:
        return tuple(tuple(int(x) for x in row.split(",")) for row in text.split(";"))
    except ValueError as exc:
        raise _Exit(EXIT_PARSE, f"bad integer matrix {text!r}") from exc


def _load(args):
    pf = io.load_polytope_file(args.input)
    K = pf.polytope
    if args.recenter:
        c = symmetry_center(K)
        if c is None:
            raise _Exit(EXIT_SYMMETRY, "body is not centrally symmetric; cannot recenter")
        K = translate(K, tuple(-x for x in c))
    return pf, K


def _check_expected(pf, key, actual, problems):
    if key in pf.expected and pf.expected[key] != actual:
        problems.append(f"expected {key} = {pf.expected[key]!r}, found {actual!r}")


def _emit(args, doc, text_lines):
    if args.json:
        sys.stdout.write(io.dumps(doc))
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _finish(problems, code):
    for p in problems:
        print(f"mismatch: {p}", file=sys.stderr)
    return EXIT_NEGATIVE if problems and code == EXIT_OK else code


def cmd_verify(args) -> int:
    pf, K = _load(args)
    if K.dim >= 3 and K.lifting is None:
        raise _Exit(EXIT_DIM, f"cannot classify a general body of dimension {K.dim}")
    cert = classify(K, claimed_m=args.expect_m)
    doc = io.tiling_certificate_to_dict(cert)
    lines = [f"kind: {cert.kind}", f"m: {cert.m}", f"volume: {cert.volume}",
             f"open multiplicity: {cert.min_open_mult}..{cert.max_open_mult}"]
    if cert.witness is not None:
        lines.append("witness: (" + ", ".join(map(str, cert.witness)) + ")")
    _emit(args, doc, lines)
    problems = []
    if cert.is_tiling:
        _check_expected(pf, "m", cert.m, problems)
    return _finish(problems, EXIT_OK if cert.is_tiling else EXIT_NEGATIVE)


def cmd_vdc(args) -> int:
    pf, K = _load(args)
    problems = []
    if args.as_extremal:
        ext = is_extremal(K)
        _check_expected(pf, "extremal", ext, problems)
        _emit(args, {"extremal": ext, "volume": str(volume(K))}, [f"extremal: {str(ext).lower()}"])
        return _finish(problems, EXIT_OK if ext else EXIT_NEGATIVE)
    S = classify_symmetric(K)
    report = vdc_check(S)
    lifting = None
    if report.equality and S.m >= 2:
        lifting = detect_lifting(S)
    doc = io.vdc_report_to_dict(report, lifting)
    lines = [f"m: {report.m}", f"volume: {report.volume}", f"bound: {report.bound}",
             f"equality: {str(report.equality).lower()}"]
    if report.refined_bound is not None:
        lines.append(f"refined bound: {report.refined_bound}")
    if lifting:
        lines.append("lifting: a = (" + ", ".join(map(str, lifting.a_coeffs)) + f"), m = {lifting.m}")
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_lift(args) -> int:
    pf, B = _load(args)
    U = _matrix(args.unimodular) if args.unimodular else None
    try:
        C = build_lifting(B, _rationals(args.a), Q(args.m), U=U)
    except (DegenerateBase, DimensionMismatch, ValueError) as exc:
        raise _Exit(EXIT_PARSE, str(exc)) from exc
    name = f"lifting of {pf.name}" if pf.name else None
    text = io.dumps(io.polytope_file_to_dict(io.PolytopeFile(C, name)))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_detect_lift(args) -> int:
    pf, K = _load(args)
    S = classify_symmetric(K)
    cert = detect_lifting(S)
    doc = io.lifting_certificate_to_dict(cert)
    if cert:
        lines = ["lifting: true", "U: " + str([list(r) for r in cert.U]),
                 "base: " + " ".join("(" + ",".join(map(str, v)) + ")" for v in cert.base.vertices),
                 "a: (" + ", ".join(map(str, cert.a_coeffs)) + ")", f"m: {cert.m}"]
    else:
        lines = ["lifting: false", f"reason: {cert.reason}"]
    _emit(args, doc, lines)
    return EXIT_OK if cert else EXIT_NEGATIVE


def cmd_decompose(args) -> int:
    pf, K = _load(args)
    if K.dim >= 3:
        raise _Exit(EXIT_DIM, "replication search is only available in dimension <= 2")
    cert = classify(K)
    if not cert.is_tiling:
        raise NotATiling(f"translates form a {cert.kind} certificate, not a tiling")
    if args.all:
        reps = replication_sublattices(K, cert)
        doc = {"m": cert.m, "replications": [io.replication_to_dict(r) for r in reps]}
        lines = [f"m: {cert.m}", f"replications: {len(reps)}"] + [f"  {[list(r) for r in x.sublattice.basis]}" for x in reps]
        _emit(args, doc, lines)
        return EXIT_OK if reps else EXIT_NEGATIVE
    rep = replication_decomposition(K, cert)
    doc = dict(io.replication_to_dict(rep), m=cert.m)
    if rep is None:
        lines = [f"m: {cert.m}", "replication: none"]
    else:
        lines = [f"m: {cert.m}", f"sublattice: {[list(r) for r in rep.sublattice.basis]}",
                 "cosets: " + " ".join(str(tuple(v)) for v in rep.cosets)]
    _emit(args, doc, lines)
    return EXIT_OK if rep is not None else EXIT_NEGATIVE


def cmd_collisions(args) -> int:
    pf, K = _load(args)
    Z = collision_vectors(K)
    bound = packing_bound_from_collisions(K)
    doc = {"count": len(Z), "vectors": [list(z) for z in Z], "packing_bound": bound,
           "affine_dim": affine_dim(Z) if Z else 0}
    lines = [f"collision vectors: {len(Z)}", f"packing bound: {bound}"] + [f"  {z}" for z in Z]
    problems = []
    _check_expected(pf, "collisions", len(Z), problems)
    _emit(args, doc, lines)
    return _finish(problems, EXIT_OK)


def cmd_census(args) -> int:
    pf, K = _load(args)
    c = collision_census(K)
    doc = io.census_to_dict(c)
    _emit(args, doc, [f"N: {c.N}", f"m: {c.m}", f"m <= N + 1: {str(c.inequality_holds).lower()}",
                      f"equality: {str(c.equality).lower()}", f"centrally symmetric: {str(c.centrally_symmetric).lower()}"])
    return EXIT_OK if c.inequality_holds else EXIT_NEGATIVE


def cmd_render(args) -> int:
    pf, K = _load(args)
    if K.dim != 2:
        raise _Exit(EXIT_DIM, "only planar bodies can be rendered")
    window = default_window(K) if args.window is None else _window(args.window)
    spec = RenderSpec(window, fill_opacity=args.opacity, dot_radius=args.dot_radius)
    rep = None
    if args.cosets:
        rep = replication_decomposition(K)
        if rep is None:
            print("no replication certificate; cannot colour by coset", file=sys.stderr)
            return EXIT_NEGATIVE
    svg = render_svg(K, spec, rep, title=pf.name)
    if args.output:
        Path(args.output).write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def _window(text):
    vals = _rationals(text)
    if len(vals) != 4:
        raise _Exit(EXIT_PARSE, "--window needs x0,y0,x1,y1")
    return ((vals[0], vals[1]), (vals[2], vals[3]))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--recenter", action="store_true", help="move the centre of symmetry to the origin first")
    common.add_argument("--expect-m", type=int, default=None, help="multiplicity to certify against")

    parser = argparse.ArgumentParser(prog="multitile", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("input", help="polytope JSON file")
        p.set_defaults(func=func)
        return p

    add("verify", cmd_verify, "certify the multiple-tiling status of T(K)")
    p = add("vdc", cmd_vdc, "van der Corput report for an o-symmetric body")
    p.add_argument("--as-extremal", action="store_true", help="only test whether the body is extremal")
    p = add("lift", cmd_lift, "build a cylindrical lifting over a base body")
    p.add_argument("--a", required=True, help="linear form, e.g. 1/2 or 0,0")
    p.add_argument("--m", required=True, help="half height of the lifting")
    p.add_argument("--unimodular", help="rows separated by ';', entries by ','")
    p.add_argument("-o", "--output")
    add("detect-lift", cmd_detect_lift, "recover a lifting certificate")
    p = add("decompose", cmd_decompose, "search for a replication certificate")
    p.add_argument("--all", action="store_true", help="list every replicating sublattice")
    add("collisions", cmd_collisions, "list the collision vectors of K")
    add("census", cmd_census, "compare m with the number of collision pairs")
    p = add("render", cmd_render, "draw the translates of a planar body as SVG")
    p.add_argument("--cosets", action="store_true", help="colour translates by replication coset")
    p.add_argument("--window", help="x0,y0,x1,y1")
    p.add_argument("--opacity", type=float, default=0.25)
    p.add_argument("--dot-radius", type=float, default=0.06)
    p.add_argument("-o", "--output")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        if str(exc):
            print(str(exc), file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (Unsupported, DimensionMismatch) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_DIM
    except NotOriginSymmetric as exc:
        print(f"not o-symmetric: {exc}", file=sys.stderr)
        return EXIT_SYMMETRY
    except NotATiling as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
