"""Command-line front end.

Exit codes: 0 success, 2 unreadable or invalid input, 3 scene not in general
position, 4 internal invariant breach (including a broken upper bound).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .bounds import bounds, verify_scene
from .constructions import Kind, UnsupportedParameterError, construct
from .formats import loads_scene, write_scene
from .geometry import GeometryError
from .overlap import EngineInvariantError, overlaps, overlaps_to_json, provenance_alternates
from .perturbation import PerturbationError, resolve_degeneracies, verify_certificate
from .render import render_svg
from .scene import DegenerateSceneError
from .search import BoundViolationError, hill_climb, random_search, result_json

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_INVARIANT = 4


def _read(path: str):
    if path == "-":
        return loads_scene(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return loads_scene(fh.read())


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_intersect(args) -> int:
    s = _read(args.scene)
    items = overlaps(s)
    report = verify_scene(s)
    print(f"components: {len(items)}")
    for i, o in enumerate(items):
        if o.vertex_free:
            alt = "yes" if provenance_alternates(o) else "NO"
        else:
            alt = "n/a"
        parity = "ok" if not o.vertex_free or o.side_count % 2 == 0 else "FAILED"
        print(
            f"overlap {i}: sides {o.side_count}, "
            f"vertex-free {'yes' if o.vertex_free else 'no'}, alternating {alt}, parity {parity}"
        )
    rec = bounds(s.n, s.m)
    print(f"bounds: lower {rec.lower}, general {rec.upper_general}, trivial {rec.upper_trivial}")
    print(f"within bounds: {'yes' if report.bounds_ok else 'NO'}")
    if args.overlaps_out:
        _write_text(args.overlaps_out, json.dumps(overlaps_to_json(items), indent=1) + "\n")
    return EXIT_OK if report.ok else EXIT_INVARIANT


def cmd_construct(args) -> int:
    s, spec = construct(args.kind, args.n or 0, args.m or 0)
    write_scene(s, args.out)
    print(f"kind: {spec.kind.value}")
    print(f"sides: {spec.n} {spec.m}")
    print(f"expected: {spec.expected_count}")
    return EXIT_OK


def cmd_render(args) -> int:
    s = _read(args.scene)
    _write_text(args.out, render_svg(s))
    return EXIT_OK


def cmd_perturb(args) -> int:
    s = _read(args.scene)
    cert = resolve_degeneracies(s.P, s.Q)
    ok = verify_certificate(cert)
    write_scene(cert.after, args.out)
    if args.certificate:
        _write_text(args.certificate, cert.dumps())
    print(f"steps: {len(cert.steps)}")
    print(f"count before: {cert.count_before}")
    print(f"count after: {cert.count_after}")
    print(f"certificate verified: {'yes' if ok else 'NO'}")
    return EXIT_OK if ok else EXIT_INVARIANT


def cmd_search(args) -> int:
    if args.start:
        result = hill_climb(_read(args.start), args.trials, args.seed, args.convex_q)
    else:
        result = random_search(args.n, args.m, args.trials, args.seed, args.convex_q, dump_dir=args.dump_dir)
    _write_text(args.report, result_json(result))
    if args.best_out and result.best_scene is not None:
        write_scene(result.best_scene, args.best_out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    print(json.dumps(bounds(args.n, args.m).to_json(), indent=1))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyoverlap", description="Count overlaps of two simple polygons exactly."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("intersect", help="count and describe the overlaps of a scene")
    p.add_argument("scene", help="scene JSON file, or - for stdin")
    p.add_argument("--overlaps-out", help="write the overlaps as JSON here")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("construct", help="write a scene with a known overlap count")
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("render", help="draw a scene and its overlaps as SVG")
    p.add_argument("scene")
    p.add_argument("--out", help="SVG file (default: stdout)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("perturb", help="move side lines until the scene is in general position")
    p.add_argument("scene")
    p.add_argument("--out", required=True, help="where to write the resolved scene")
    p.add_argument("--certificate", help="where to write the step certificate")
    p.set_defaults(func=cmd_perturb)

    p = sub.add_parser("search", help="random or hill-climbing search for many overlaps")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--m", type=int, default=5)
    p.add_argument("--trials", type=int, default=1000, help="samples, or nudges with --start")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--convex-q", action="store_true")
    p.add_argument("--start", help="hill-climb from this scene instead of sampling")
    p.add_argument("--report", help="JSON report file (default: stdout)")
    p.add_argument("--best-out", help="write the best scene here")
    p.add_argument("--dump-dir", help="write any bound-violating scene here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", help="print the closed-form bounds for (n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegenerateSceneError as exc:
        print("error: scene is not in general position", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v.describe()}", file=sys.stderr)
        print("hint: run `polyoverlap perturb SCENE --out FIXED` first", file=sys.stderr)
        return EXIT_DEGENERATE
    except (EngineInvariantError, BoundViolationError) as exc:
        print(f"error: invariant breach: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except PerturbationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (GeometryError, UnsupportedParameterError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
