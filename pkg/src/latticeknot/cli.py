"""Command-line interface.

Exit codes: 0 all checks hold, 2 a bound check failed, 3 invariant
mismatch, 4 invalid input, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import dataset
from .arc import (
    ArcPresentation,
    PresentationError,
    dual,
    is_star_shaped,
    random_presentation,
    rotate_bindings,
    rotate_pages,
    torus_order_check,
)
from .certify import ArcCountOutOfRangeError, check_bounds, construct_auto
from .diagram import alexander, arc_to_planar, jones_kauffman, project_polygon
from .errors import InternalInvariantError
from .jsonio import canonical_dumps, detect_input, presentation_from_obj, polygon_from_obj
from .lattice import (
    LatticePolygon,
    SelfIntersectionError,
    construct_basic,
    reduce_ends,
    construct_nonstar,
    stick_count,
    validate_polygon,
)
from .arc import find_nonstar_witness, normalize_for_nonstar
from .render import render_obj, render_svg

EXIT_OK = 0
EXIT_BOUND_FAILED = 2
EXIT_MISMATCH = 3
EXIT_INVALID = 4
EXIT_USAGE = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        return json.loads(text)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc


def _load_presentation(path: str) -> ArcPresentation:
    return presentation_from_obj(_read_json(path))


def _print(obj) -> None:
    print(canonical_dumps(obj))


def _cmd_validate(args) -> int:
    P = _load_presentation(args.file)
    _print(P.to_json_obj())
    return EXIT_OK


def _cmd_dual(args) -> int:
    _print(dual(_load_presentation(args.file)).to_json_obj())
    return EXIT_OK


def _cmd_rotate(args) -> int:
    if args.pages is None and args.bindings is None:
        raise _UsageError("rotate needs --pages and/or --bindings")
    P = _load_presentation(args.file)
    if args.pages is not None:
        P = rotate_pages(P, args.pages)
    if args.bindings is not None:
        P = rotate_bindings(P, args.bindings)
    _print(P.to_json_obj())
    return EXIT_OK


def _cmd_star(args) -> int:
    P = _load_presentation(args.file)
    star = is_star_shaped(P)
    torus = torus_order_check(P) if star else None
    _print(
        {
            "star_shaped": star,
            "torus_order": None
            if torus is None
            else {
                "n": torus.n,
                "direction": torus.direction,
                "rotation_offset": torus.rotation_offset,
                "torus_knot": [torus.n + 1, torus.n],
            },
        }
    )
    return EXIT_OK


def _build_branch(P: ArcPresentation, branch: str) -> LatticePolygon:
    if branch == "auto":
        poly, _ = construct_auto(P, check_invariant=False)
        return poly
    if branch == "basic":
        return construct_basic(P)
    if branch == "reduced":
        return reduce_ends(construct_basic(P), P)
    if branch == "nonstar":
        w = find_nonstar_witness(P)
        if w is None:
            raise ValueError("presentation is star shaped; the nonstar branch needs a witness")
        return construct_nonstar(normalize_for_nonstar(P, w))
    raise ValueError(f"unknown branch {branch!r}")


def _cmd_build(args) -> int:
    P = _load_presentation(args.file)
    poly = _build_branch(P, args.branch)
    text = canonical_dumps(poly.to_json_obj())
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _cmd_invariant(args) -> int:
    value = detect_input(_read_json(args.file))
    if isinstance(value, LatticePolygon):
        violations = validate_polygon(value)
        if violations:
            raise SelfIntersectionError(violations)
        diagram = project_polygon(value)
    else:
        diagram = arc_to_planar(value)
    poly = alexander(diagram)
    out = {
        "alexander": poly.coeff_list(),
        "alexander_str": str(poly),
        "determinant": abs(poly.evaluate(-1)),
        "crossings": diagram.n,
    }
    if args.jones:
        from .diagram import simplify_diagram

        out["jones_bracket"] = jones_kauffman(simplify_diagram(diagram), cap=args.jones_cap).coeff_list()
    if args.pd:
        out["pd_code"] = diagram.pd_code_text().splitlines()
    _print(out)
    return EXIT_OK


def _cmd_certify(args) -> int:
    P = _load_presentation(args.file)
    poly, cert = construct_auto(P, check_invariant=not args.skip_invariant)
    cert = check_bounds(
        cert,
        args.c,
        alternating=args.alternating,
        prime=args.prime or args.non_alternating_prime,
        non_alternating_prime=args.non_alternating_prime,
    )
    _print(cert.to_json_obj())
    if cert.invariant_match.status == "mismatched":
        return EXIT_MISMATCH
    if not cert.all_hold():
        return EXIT_BOUND_FAILED
    return EXIT_OK


def _cmd_render(args) -> int:
    poly = polygon_from_obj(_read_json(args.file))
    violations = validate_polygon(poly)
    if violations:
        raise SelfIntersectionError(violations)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(poly))
    if args.obj:
        with open(args.obj, "w", encoding="utf-8") as fh:
            fh.write(render_obj(poly))
    if not args.svg and not args.obj:
        raise _UsageError("render needs --svg and/or --obj")
    return EXIT_OK


def _cmd_dataset(args) -> int:
    if args.action == "list":
        for name in dataset.names():
            e = dataset.get(name)
            kind = "non-alternating" if e.non_alternating_prime else "alternating"
            print(f"{name}\ta={e.arcs.a}\tc={e.crossing_number}\t{kind}")
        return EXIT_OK
    if not args.name:
        raise _UsageError("dataset get needs a knot name")
    e = dataset.get(args.name)
    _print(e.arcs.to_json_obj())
    return EXIT_OK


def _cmd_random(args) -> int:
    rng = random.Random(args.seed)
    _print(random_presentation(args.a, rng).to_json_obj())
    return EXIT_OK


def _make_parser() -> _Parser:
    parser = _Parser(prog="latticeknot", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a presentation and print its canonical JSON")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("dual", help="print the dual presentation")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("rotate", help="rotate page numbers and/or binding indices")
    p.add_argument("--pages", type=int, default=None)
    p.add_argument("--bindings", type=int, default=None)
    p.add_argument("file")
    p.set_defaults(func=_cmd_rotate)

    p = sub.add_parser("star", help="star-shape and torus-order classification")
    p.add_argument("file")
    p.set_defaults(func=_cmd_star)

    p = sub.add_parser("build", help="construct a lattice polygon")
    p.add_argument("--branch", choices=["auto", "basic", "reduced", "nonstar"], default="auto")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.add_argument("file")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("invariant", help="Alexander polynomial and determinant")
    p.add_argument("--jones", action="store_true", help="also compute the Kauffman bracket Jones form")
    p.add_argument("--jones-cap", type=int, default=20)
    p.add_argument("--pd", action="store_true", help="include the PD-code lines of the diagram")
    p.add_argument("file", help="presentation or polygon JSON")
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("certify", help="run the pipeline and check bounds")
    p.add_argument("--c", type=int, required=True, help="minimal crossing number of the knot")
    p.add_argument("--alternating", action="store_true")
    p.add_argument("--prime", action="store_true")
    p.add_argument("--non-alternating-prime", action="store_true")
    p.add_argument("--skip-invariant", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("render", help="export SVG and/or OBJ")
    p.add_argument("--svg", default=None)
    p.add_argument("--obj", default=None)
    p.add_argument("file", help="polygon JSON")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("dataset", help="bundled example knots")
    p.add_argument("action", choices=["list", "get"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=_cmd_dataset)

    p = sub.add_parser("random", help="print a seeded random presentation")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_random)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PresentationError, ArcCountOutOfRangeError, SelfIntersectionError, ValueError, KeyError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
