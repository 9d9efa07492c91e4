"""Command-line front end.

Every subcommand prints a deterministic JSON run report to stdout; --pretty
switches to a human-readable rendering. Exit codes: 0 success, 1 verification
failure (verify-paper), 2 input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources
from pathlib import Path

from . import serialize, verify
from .geometry import DEFAULT_BOX_CAP, LatticePolytope, ResourceLimitError
from .groups import check_boundary_equality, omega_boundary, word_ball
from .minkowski import check_equality, decompose, minkowski_power
from .triangulation import (
    LatticeSimplex,
    classify_simplex,
    search_primitive_triangulation,
    unimodular_criteria,
    validate_triangulation,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE = 3


class InputError(Exception):
    pass


def _read_document(name: str):
    """Load a JSON document from a path, falling back to bundled data files."""
    path = Path(name)
    if path.exists():
        text = path.read_text()
    else:
        candidate = name if name.endswith(".json") else name + ".json"
        resource = resources.files("latmink.data").joinpath(Path(candidate).name)
        if not resource.is_file():
            raise InputError(f"no such file or bundled dataset: {name}")
        text = resource.read_text()
    try:
        return serialize.loads_strict(text)
    except (json.JSONDecodeError, ValueError) as exc:
        raise InputError(f"{name}: {exc}") from exc


def _parse_range(text: str) -> range:
    """Parse 'a..b' (inclusive) or a single integer."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        try:
            lo, hi = int(lo_text), int(hi_text)
        except ValueError as exc:
            raise InputError(f"bad range {text!r}") from exc
        if lo > hi:
            raise InputError(f"empty range {text!r}")
        return range(lo, hi + 1)
    try:
        n = int(text)
    except ValueError as exc:
        raise InputError(f"bad range {text!r}") from exc
    return range(n, n + 1)


def _parse_point(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.replace(",", " ").split())
    except ValueError as exc:
        raise InputError(f"bad point {text!r}") from exc


def _load_polytope(name: str) -> LatticePolytope:
    try:
        return serialize.parse_polytope(_read_document(name))
    except ValueError as exc:
        raise InputError(f"{name}: {exc}") from exc


def _load_group(name: str):
    try:
        group, warnings = serialize.parse_group(_read_document(name))
    except ValueError as exc:
        raise InputError(f"{name}: {exc}") from exc
    for w in warnings:
        print(f"warning: {name}: {w}", file=sys.stderr)
    return group


def _emit(args, command: str, inputs: dict, result, pretty_lines=None) -> None:
    if args.pretty and pretty_lines is not None:
        for line in pretty_lines:
            print(line)
        return
    report = {"command": command, "inputs": inputs, "result": result}
    if args.timing:
        report["elapsed_ms"] = int((time.monotonic() - args._start) * 1000)
    print(json.dumps(report, sort_keys=True, indent=2))


def _cmd_points(args) -> int:
    poly = _load_polytope(args.polytope)
    pts = poly.integer_points(args.n, cap=args.cap)
    points = serialize.point_set_to_list(pts)
    _emit(
        args,
        "points",
        {"polytope": serialize.polytope_to_dict(poly), "n": args.n},
        {"count": len(points), "points": points},
        pretty_lines=[f"{len(points)} integer points in the {args.n}-fold dilation:"]
        + [" ".join(map(str, p)) for p in points],
    )
    return EXIT_OK


def _cmd_minkowski(args) -> int:
    poly = _load_polytope(args.polytope)
    omega = poly.integer_points(1, cap=args.cap)
    power = minkowski_power(omega, args.n)
    points = serialize.point_set_to_list(power)
    _emit(
        args,
        "minkowski",
        {"polytope": serialize.polytope_to_dict(poly), "n": args.n},
        {"count": len(points), "points": points},
        pretty_lines=[f"{len(points)} points in the {args.n}-fold Minkowski sum:"]
        + [" ".join(map(str, p)) for p in points],
    )
    return EXIT_OK


def _cmd_check_equality(args) -> int:
    poly = _load_polytope(args.polytope)
    reports = [check_equality(poly, n, cap=args.cap) for n in _parse_range(args.range)]
    result = [serialize.equality_report_to_dict(r) for r in reports]
    pretty = [
        f"n={r.n}: {'holds' if r.holds else f'FAILS, witness {r.witness}'}" for r in reports
    ]
    _emit(
        args,
        "check-equality",
        {"polytope": serialize.polytope_to_dict(poly), "range": args.range},
        result,
        pretty_lines=pretty,
    )
    return EXIT_OK


def _cmd_decompose(args) -> int:
    poly = _load_polytope(args.polytope)
    if args.triangulation:
        try:
            tri = serialize.parse_triangulation(_read_document(args.triangulation))
        except ValueError as exc:
            raise InputError(f"{args.triangulation}: {exc}") from exc
        if tri.polytope != poly:
            raise InputError("triangulation file describes a different polytope")
    else:
        search = search_primitive_triangulation(poly, budget=args.budget, point_cap=args.point_cap)
        if search.triangulation is None:
            raise InputError(
                "no primitive triangulation "
                + ("exists" if search.exhausted else "found within budget")
                + "; provide one with --triangulation"
            )
        tri = search.triangulation
    point = _parse_point(" ".join(args.point))
    try:
        dec = decompose(poly, tri, args.n, point)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    result = serialize.decomposition_to_dict(dec)
    _emit(
        args,
        "decompose",
        {"polytope": serialize.polytope_to_dict(poly), "n": args.n, "point": list(point)},
        result,
        pretty_lines=[f"{point} = " + " + ".join(str(s) for s in dec.summands)],
    )
    return EXIT_OK


def _cmd_classify(args) -> int:
    poly_doc = _read_document(args.simplex)
    try:
        poly = serialize.parse_polytope(poly_doc)
        simplex = LatticeSimplex(poly.vertices)
    except ValueError as exc:
        raise InputError(f"{args.simplex}: {exc}") from exc
    cls = classify_simplex(simplex)
    result = serialize.simplex_class_to_dict(cls)
    _emit(
        args,
        "classify",
        {"simplex": [list(v) for v in simplex.vertices]},
        result,
        pretty_lines=[
            f"normalized volume {cls.normalized_volume}; "
            f"elementary: {cls.is_elementary}; primitive: {cls.is_primitive}; "
            f"non-vertex points: {serialize.point_set_to_list(cls.non_vertex_points)}"
        ],
    )
    return EXIT_OK


def _cmd_lemma1(args) -> int:
    try:
        matrix = serialize.parse_matrix(_read_document(args.matrix))
        criteria = unimodular_criteria(matrix)
    except ValueError as exc:
        raise InputError(f"{args.matrix}: {exc}") from exc
    result = serialize.criteria_to_dict(criteria)
    _emit(
        args,
        "lemma1",
        {"matrix": matrix},
        result,
        pretty_lines=[f"{key}: {value}" for key, value in result.items()],
    )
    return EXIT_OK


def _cmd_validate_triangulation(args) -> int:
    try:
        tri = serialize.parse_triangulation(_read_document(args.triangulation))
    except ValueError as exc:
        raise InputError(f"{args.triangulation}: {exc}") from exc
    report = validate_triangulation(tri)
    result = serialize.triangulation_report_to_dict(report)
    pretty = [
        f"valid: {report.valid}; elementary: {report.is_elementary}; primitive: {report.is_primitive}"
    ] + [f"problem: {p}" for p in report.problems]
    _emit(args, "validate-triangulation", {"simplices": len(tri.simplices)}, result, pretty)
    return EXIT_OK


def _cmd_search_primitive(args) -> int:
    poly = _load_polytope(args.polytope)
    result = search_primitive_triangulation(poly, budget=args.budget, point_cap=args.point_cap)
    doc = serialize.search_result_to_dict(result)
    if result.triangulation is not None:
        pretty = [f"found a primitive triangulation with {len(result.triangulation.simplices)} simplices"]
        pretty += [
            " / ".join(" ".join(map(str, v)) for v in s.vertices)
            for s in result.triangulation.simplices
        ]
    elif result.exhausted:
        pretty = ["no primitive triangulation exists (candidate space exhausted)"]
    else:
        pretty = [f"no primitive triangulation found within budget ({result.nodes} nodes)"]
    _emit(args, "search-primitive", {"polytope": serialize.polytope_to_dict(poly)}, doc, pretty)
    return EXIT_OK


def _cmd_word_ball(args) -> int:
    group = _load_group(args.group)
    ball = word_ball(group, args.n, cap=args.cap)
    elements = serialize.element_set_to_list(ball)
    _emit(
        args,
        "word-ball",
        {"group": serialize.group_to_dict(group), "n": args.n},
        {"count": len(elements), "elements": elements},
        pretty_lines=[f"{len(elements)} elements in the radius-{args.n} ball:"]
        + [json.dumps(e) for e in elements],
    )
    return EXIT_OK


def _cmd_boundary(args) -> int:
    group = _load_group(args.group)
    ball = word_ball(group, args.n, cap=args.cap)
    boundary = omega_boundary(group, ball)
    elements = serialize.element_set_to_list(boundary)
    _emit(
        args,
        "boundary",
        {"group": serialize.group_to_dict(group), "n": args.n},
        {"count": len(elements), "elements": elements},
        pretty_lines=[f"{len(elements)} boundary elements of the radius-{args.n} ball:"]
        + [json.dumps(e) for e in elements],
    )
    return EXIT_OK


def _cmd_check_boundary(args) -> int:
    group = _load_group(args.group)
    reports = [check_boundary_equality(group, n, cap=args.cap) for n in _parse_range(args.range)]
    result = [serialize.boundary_report_to_dict(r) for r in reports]
    pretty = [
        f"n={r.n}: "
        + ("holds" if r.holds else f"FAILS, fresh layer has {len(r.rhs_minus_lhs)} non-boundary elements")
        for r in reports
    ]
    _emit(
        args,
        "check-boundary",
        {"group": serialize.group_to_dict(group), "range": args.range},
        result,
        pretty_lines=pretty,
    )
    return EXIT_OK


def _cmd_verify_paper(args) -> int:
    kwargs = {}
    if args.quick:
        kwargs = {"polygon_samples": 25, "matrix_samples": 60}
    results = verify.run_all(seed=args.seed, **kwargs)
    rows = [
        {"claim": r.claim, "description": r.description, "ok": r.ok, "detail": r.detail}
        for r in results
    ]
    failed = [r for r in results if not r.ok]
    summary = {"rows": rows, "passed": len(results) - len(failed), "failed": len(failed)}
    pretty = [
        f"{'PASS' if r.ok else 'FAIL'}  {r.claim}: {r.detail}" for r in results
    ] + [f"{len(results) - len(failed)} passed, {len(failed)} failed"]
    _emit(args, "verify-paper", {"seed": args.seed}, summary, pretty)
    return EXIT_OK if not failed else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latmink",
        description="Exact lattice-polytope dilations, Minkowski powers, primitive triangulations and word-ball boundaries.",
    )
    parser.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    parser.add_argument("--cap", type=int, default=DEFAULT_BOX_CAP, help="enumeration size cap")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized verification rows")
    parser.add_argument("--timing", action="store_true", help="include elapsed_ms in JSON reports")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("points", help="integer points of the n-fold dilation")
    p.add_argument("polytope")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_points)

    p = sub.add_parser("minkowski", help="n-fold Minkowski sum of the polytope's integer points")
    p.add_argument("polytope")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_minkowski)

    p = sub.add_parser("check-equality", help="dilation vs Minkowski power over a range of n")
    p.add_argument("polytope")
    p.add_argument("range", help="single n or a..b")
    p.set_defaults(fn=_cmd_check_equality)

    p = sub.add_parser("decompose", help="write a dilation point as n summands")
    p.add_argument("polytope")
    p.add_argument("n", type=int)
    p.add_argument(
        "point",
        nargs="+",
        help="integer coordinates, space- or comma-separated (e.g. '-1 2' or 1,2)",
    )
    p.add_argument("--triangulation", help="triangulation file (searched for if omitted)")
    p.add_argument("--budget", type=int, default=200_000)
    p.add_argument("--point-cap", type=int, default=14)
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("classify", help="elementary/primitive classification of a simplex")
    p.add_argument("simplex", help="polytope file with d+1 vertices")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("lemma1", help="unimodularity criteria of a square integer matrix")
    p.add_argument("matrix", help="JSON file with a square integer matrix")
    p.set_defaults(fn=_cmd_lemma1)

    p = sub.add_parser("validate-triangulation", help="exact validation of a triangulation file")
    p.add_argument("triangulation")
    p.set_defaults(fn=_cmd_validate_triangulation)

    p = sub.add_parser("search-primitive", help="search for a primitive triangulation")
    p.add_argument("polytope")
    p.add_argument("--budget", type=int, default=200_000)
    p.add_argument("--point-cap", type=int, default=14)
    p.set_defaults(fn=_cmd_search_primitive)

    p = sub.add_parser("word-ball", help="radius-n ball of a group presentation")
    p.add_argument("group")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_word_ball)

    p = sub.add_parser("boundary", help="boundary of the radius-n ball")
    p.add_argument("group")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_boundary)

    p = sub.add_parser("check-boundary", help="ball boundary vs fresh layer over a range of n")
    p.add_argument("group")
    p.add_argument("range", help="single n or a..b")
    p.set_defaults(fn=_cmd_check_boundary)

    p = sub.add_parser("verify-paper", help="run the bundled reproduction suite")
    p.add_argument("--quick", action="store_true", help="smaller randomized samples")
    p.set_defaults(fn=_cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._start = time.monotonic()
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ResourceLimitError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
