"""Command-line harness.

Subcommands: gen-random, gen-adversarial, play, run, opt, dualize, render,
bench.  Every seeded command is byte-reproducible.  Exit codes: 0 ok,
2 parse error, 3 infeasible object, 4 solver scale guard, 5 protocol
violation.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import _kernels
from .adversary import EngineResponder, FirstPointResponder, build_instance, play
from .dual import dualize
from .errors import ParseError, ProtocolViolationError, TooLargeError
from .extreme import DEFAULT_SAMPLES
from .formats import (load_instance, load_stream, save_instance, save_json,
                      save_stream, shape_to_dict)
from .geometry import DEFAULT_TOL, PlacedObject, Point, Shape
from .offline import exact_min_hitting_set, greedy_hitting_set, to_set_system
from .online import INFEASIBLE, new_state, process, solution
from .render import render_scene
from .rng import SplitMix64

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_SCALE_GUARD = 4
EXIT_PROTOCOL = 5


def _shape_from_args(args) -> Shape:
    if args.shape == "disk":
        return Shape.disk()
    return Shape.kgon(args.k)


def _add_shape_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--shape", choices=["disk", "kgon"], required=True)
    p.add_argument("--k", type=int, default=4,
                   help="number of sides for kgon shapes (default 4)")


def _log2_2n(n: int) -> int:
    return (2 * n).bit_length() - 1


def cmd_gen_random(args) -> int:
    shape = _shape_from_args(args)
    if args.n_points <= 0:
        print("gen-random: --n-points must be positive", file=sys.stderr)
        return EXIT_PARSE
    rng = SplitMix64(args.seed)
    # Points first: their coordinates depend only on the seed and span,
    # never on the shape.
    points = [Point(rng.uniform(0.0, args.span), rng.uniform(0.0, args.span))
              for _ in range(args.n_points)]
    r = shape.r_out
    objects = [PlacedObject(shape, Point(rng.uniform(-r, args.span + r),
                                         rng.uniform(-r, args.span + r)))
               for _ in range(args.n_objects)]
    save_instance(args.instance, shape, points)
    save_stream(args.stream, objects)
    return EXIT_OK


def _run_stream(shape, points, objects, tol, samples):
    state = new_state(points, shape, tol=tol, samples=samples)
    decisions = []
    infeasible = 0
    for i, obj in enumerate(objects):
        result = process(state, obj)
        if result.status == INFEASIBLE:
            infeasible += 1
        decisions.append({
            "index": i,
            "center": [obj.center[0], obj.center[1]],
            "status": result.status,
            "placements": [{
                "tile": list(pl.tile), "quad": pl.quad,
                "point": [pl.point[0], pl.point[1]], "color": pl.color,
            } for pl in result.placements],
        })
    return state, decisions, infeasible


def cmd_run(args) -> int:
    t0 = time.perf_counter()
    shape, points = load_instance(args.instance)
    objects = load_stream(args.stream, shape)
    state, decisions, infeasible = _run_stream(
        shape, points, objects, args.tol, args.extreme_samples)

    alg = solution(state)
    n = len(state.points)
    bound = 4 * shape.max_tiles * _log2_2n(n)
    opt_size = None
    opt_status = "skipped"
    if not args.no_opt:
        system = to_set_system(points, objects, tol=args.tol)
        try:
            opt_size = len(exact_min_hitting_set(system))
            opt_status = "exact"
        except TooLargeError:
            try:
                opt_size = len(greedy_hitting_set(system))
                opt_status = "greedy-upper-bound"
            except ValueError:
                opt_status = "infeasible-sets"

    ratio = None
    if opt_size:
        ratio = len(alg) / opt_size
        if args.strict and opt_status == "exact":
            assert ratio <= bound, (
                f"competitive bound violated: {len(alg)} > {bound} * {opt_size}")

    report = {
        "shape": shape_to_dict(shape),
        "n_points": n,
        "n_objects": len(objects),
        "alg_size": len(alg),
        "hits": [[h[0], h[1]] for h in alg],
        "opt_size": opt_size,
        "opt_status": opt_status,
        "ratio": ratio,
        "bound": bound,
        "infeasible_objects": infeasible,
        "warnings": list(state.warnings),
        "decisions": decisions,
        "wall_time_s": time.perf_counter() - t0,
    }
    save_json(args.report, report)
    if infeasible and not args.allow_infeasible:
        print(f"run: {infeasible} object(s) contain no point "
              f"(use --allow-infeasible to accept)", file=sys.stderr)
        return EXIT_INFEASIBLE
    return EXIT_OK


def cmd_gen_adversarial(args) -> int:
    if args.m > 12:
        print("gen-adversarial: m is capped at 12", file=sys.stderr)
        return EXIT_PARSE
    shape = _shape_from_args(args)
    rng = SplitMix64(args.seed)
    origin = Point(0.0137 + rng.uniform(0.0, 0.01), 0.0473 + rng.uniform(0.0, 0.01))
    instance = build_instance(shape, args.m, origin=origin)
    save_instance(args.instance, shape, list(instance.points))
    ordered = [instance.objects[key] for key in sorted(instance.objects)]
    save_stream(args.stream, ordered)
    return EXIT_OK


def cmd_play(args) -> int:
    if args.m > 12:
        print("play: m is capped at 12", file=sys.stderr)
        return EXIT_PARSE
    shape = _shape_from_args(args)
    rng = SplitMix64(args.seed)
    origin = Point(0.0137 + rng.uniform(0.0, 0.01), 0.0473 + rng.uniform(0.0, 0.01))
    instance = build_instance(shape, args.m, origin=origin)
    responder = (FirstPointResponder(instance) if args.responder == "first-point"
                 else EngineResponder(instance))
    transcript = play(instance, responder)
    if args.stream:
        save_stream(args.stream, [instance.objects[(r.level, r.index)]
                                  for r in transcript.rounds])
    if args.instance_out:
        save_instance(args.instance_out, shape, list(instance.points))
    doc = {
        "shape": shape_to_dict(shape),
        "m": transcript.levels,
        "n": instance.n,
        "rounds_played": transcript.rounds_played,
        "forced": transcript.forced,
        "opt_size": transcript.opt_size,
        "placed": [[p[0], p[1]] for p in transcript.placed],
        "rounds": [{
            "level": r.level, "index": r.index,
            "center": [r.center[0], r.center[1]],
            "new_points": [[p[0], p[1]] for p in r.new_points],
        } for r in transcript.rounds],
    }
    save_json(args.transcript, doc)
    return EXIT_OK


def cmd_opt(args) -> int:
    shape, points = load_instance(args.instance)
    objects = load_stream(args.stream, shape)
    system = to_set_system(points, objects, tol=args.tol)
    status = "exact"
    try:
        hitter = exact_min_hitting_set(system)
    except TooLargeError as e:
        if not args.greedy:
            print(f"opt: {e} (pass --greedy for the greedy upper bound)",
                  file=sys.stderr)
            return EXIT_SCALE_GUARD
        hitter = greedy_hitting_set(system)
        status = "greedy-upper-bound"
    save_json(args.report, {
        "shape": shape_to_dict(shape),
        "n_points": len(points),
        "n_objects": len(objects),
        "infeasible_objects": len(system.infeasible),
        "status": status,
        "opt_size": len(hitter),
        "hitter": [[points[i][0], points[i][1]] for i in hitter],
    })
    return EXIT_OK


def cmd_dualize(args) -> int:
    shape, points = load_instance(args.instance)
    objects = load_stream(args.stream, shape)
    dual = dualize(points, objects, shape)
    save_instance(args.out_instance, dual.shape, list(dual.points))
    save_stream(args.out_stream, list(dual.objects))
    return EXIT_OK


def cmd_render(args) -> int:
    shape, points = load_instance(args.instance)
    objects = load_stream(args.stream, shape)
    state = None
    needs_state = args.show_tiles or args.show_cones or args.show_extreme \
        or args.show_hits
    if needs_state:
        state, _, _ = _run_stream(shape, points, objects, args.tol,
                                  args.extreme_samples)
    svg = render_scene(shape, points, objects, state,
                       show_tiles=args.show_tiles, show_cones=args.show_cones,
                       show_extreme=args.show_extreme, show_hits=args.show_hits)
    with open(args.out, "w") as fh:
        fh.write(svg)
    return EXIT_OK


def cmd_bench(args) -> int:
    shapes = [("disk", Shape.disk()), ("k4", Shape.kgon(4)),
              ("k5", Shape.kgon(5)), ("k7", Shape.kgon(7))]
    cells = []
    for name, shape in shapes:
        for s in range(args.seeds):
            rng = SplitMix64(args.seed + s)
            points = [Point(rng.uniform(0.0, args.span), rng.uniform(0.0, args.span))
                      for _ in range(args.n_points)]
            r = shape.r_out
            objects = [PlacedObject(shape, Point(rng.uniform(-r, args.span + r),
                                                 rng.uniform(-r, args.span + r)))
                       for _ in range(args.n_objects)]
            t0 = time.perf_counter()
            state, _, infeasible = _run_stream(shape, points, objects,
                                               DEFAULT_TOL, args.extreme_samples)
            dt = time.perf_counter() - t0
            cells.append({
                "shape": name, "seed": args.seed + s,
                "alg_size": len(solution(state)),
                "infeasible_objects": infeasible,
                "seconds": dt,
            })
            print(f"{name:5s} seed={args.seed + s:<6d} "
                  f"alg={len(solution(state)):<4d} time={dt:.3f}s "
                  f"[{_kernels.BACKEND}]")
    if args.report:
        save_json(args.report, {"backend": _kernels.BACKEND, "cells": cells})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hitset",
        description="Online hitting set for translated unit disks and "
                    "regular unit k-gons")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, samples=True):
        p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                       help="containment tolerance (default 1e-9)")
        if samples:
            p.add_argument("--extreme-samples", type=int,
                           default=DEFAULT_SAMPLES,
                           help="samples per candidate sub-curve (default 4096)")

    p = sub.add_parser("gen-random", help="seeded random instance + stream")
    _add_shape_flags(p)
    p.add_argument("--n-points", type=int, required=True)
    p.add_argument("--n-objects", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--span", type=float, default=3.0)
    p.add_argument("--instance", required=True)
    p.add_argument("--stream", required=True)
    p.set_defaults(func=cmd_gen_random)

    p = sub.add_parser("run", help="process a stream online and report")
    p.add_argument("--instance", required=True)
    p.add_argument("--stream", required=True)
    p.add_argument("--report", required=True)
    p.add_argument("--allow-infeasible", action="store_true")
    p.add_argument("--strict", action="store_true",
                   help="assert the competitive bound when OPT is exact")
    p.add_argument("--no-opt", action="store_true",
                   help="skip the offline optimum")
    common(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("gen-adversarial",
                       help="emit the nested-interval instance and all its objects")
    _add_shape_flags(p)
    p.add_argument("--m", type=int, required=True,
                   help="levels; the instance has 2^m points (m <= 12)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instance", required=True)
    p.add_argument("--stream", required=True)
    p.set_defaults(func=cmd_gen_adversarial)

    p = sub.add_parser("play", help="run the adaptive game against a responder")
    _add_shape_flags(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--responder", choices=["first-point", "algorithm1"],
                   default="first-point")
    p.add_argument("--transcript", required=True)
    p.add_argument("--instance-out", default=None,
                   help="also write the instance file")
    p.add_argument("--stream", default=None,
                   help="also write the presented objects as a stream")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("opt", help="offline optimum of instance + stream")
    p.add_argument("--instance", required=True)
    p.add_argument("--stream", required=True)
    p.add_argument("--report", required=True)
    p.add_argument("--greedy", action="store_true",
                   help="fall back to greedy when the exact guard trips")
    common(p, samples=False)
    p.set_defaults(func=cmd_opt)

    p = sub.add_parser("dualize", help="emit the set-cover dual instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--stream", required=True)
    p.add_argument("--out-instance", required=True)
    p.add_argument("--out-stream", required=True)
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("render", help="deterministic SVG of the scene")
    p.add_argument("--instance", required=True)
    p.add_argument("--stream", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--show-tiles", action="store_true")
    p.add_argument("--show-cones", action="store_true")
    p.add_argument("--show-extreme", action="store_true")
    p.add_argument("--show-hits", action="store_true")
    common(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="seeded end-to-end experiment cells")
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-points", type=int, default=40)
    p.add_argument("--n-objects", type=int, default=30)
    p.add_argument("--span", type=float, default=3.0)
    p.add_argument("--report", default=None)
    p.add_argument("--extreme-samples", type=int, default=DEFAULT_SAMPLES)
    p.set_defaults(func=cmd_bench)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except TooLargeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SCALE_GUARD
    except ProtocolViolationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PROTOCOL


def entry() -> None:
    sys.exit(main())
