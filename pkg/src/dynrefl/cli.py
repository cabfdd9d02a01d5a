"""Command-line entry point.

Exit codes: 0 all checks pass, 1 a counterexample or mismatch was found,
2 the input could not be parsed or failed structural validation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .census import DEFAULT_CAP, default_workers, run_census
from .document import open_workbench, validate_document
from .dump import dump_tables, render_dump
from .errors import DynReflError
from .fixtures import FIXTURES
from .reproduce import REPRODUCTIONS, run_reproduction
from .verify import CHECK_GROUPS, parse_checks, replay_witness, run_checks

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _source(arg: str):
    """A path, or the name of a built-in fixture."""
    if not Path(arg).exists() and arg.upper() in FIXTURES:
        return FIXTURES[arg.upper()]()
    return arg


def _emit(args, payload: dict, text: str, out=None):
    stream = out or sys.stdout
    if args.json:
        json.dump(payload, stream, indent=2, sort_keys=False)
        stream.write("\n")
    else:
        stream.write(text.rstrip() + "\n")


def _input_error(args, exc: Exception) -> int:
    if isinstance(exc, DynReflError):
        payload = exc.to_dict()
    else:
        payload = {"error": type(exc).__name__, "message": str(exc).strip("'\"")}
    json.dump({"error": payload}, sys.stdout, indent=None if not args.json else 2)
    sys.stdout.write("\n")
    return EXIT_INPUT


def cmd_validate(args) -> int:
    try:
        info = validate_document(_source(args.file))
    except (DynReflError, ValueError, KeyError, TypeError) as exc:
        return _input_error(args, exc)
    text = "valid\n" + "\n".join(f"  {k}: {v}" for k, v in info.items())
    _emit(args, {"valid": True, **info}, text)
    return EXIT_OK


def cmd_build(args) -> int:
    try:
        wb = open_workbench(_source(args.file)).build_all()
        dump = dump_tables(wb, args.what)
    except (DynReflError, ValueError, KeyError, TypeError) as exc:
        return _input_error(args, exc)
    text = render_dump(dump)
    if args.out:
        Path(args.out).write_text(json.dumps(dump, indent=2) + "\n" if args.json else text + "\n", encoding="utf-8")
    else:
        _emit(args, dump, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        wb = open_workbench(_source(args.file)).build_all()
        checks = parse_checks(args.check)
    except (DynReflError, ValueError, KeyError, TypeError) as exc:
        return _input_error(args, exc)
    if args.replay:
        try:
            witness = json.loads(Path(args.replay).read_text(encoding="utf-8"))
            witness = witness.get("witness", witness)
            still = replay_witness(wb, witness)
        except (OSError, ValueError, KeyError) as exc:
            return _input_error(args, exc)
        _emit(args, {"check": witness["check"], "reproduced": still},
              f"{witness['check']}: {'witness reproduces' if still else 'witness does not reproduce'}")
        return EXIT_FAIL if still else EXIT_OK
    rep = run_checks(wb, checks)
    _emit(args, rep.to_dict(timings=not args.no_timings), rep.summary())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_enumerate(args) -> int:
    if not args.families:
        return _input_error(args, ValueError("enumerate needs --families"))
    try:
        wb = open_workbench(_source(args.file)).build_all()
        workers = args.workers if args.workers is not None else default_workers()
        res = run_census(wb, limit=args.limit, cap=args.cap, sample=args.random, seed=args.seed, workers=workers)
    except (DynReflError, ValueError, KeyError, TypeError) as exc:
        return _input_error(args, exc)
    lines = [
        f"|End(G)| = {res['endomorphisms']}, |X| = {len(res['X'])}, {res['total_families']} families",
        f"visited {res['visited']}: reflection pass {res['reflection_pass']}, fail {res['reflection_fail']}, "
        f"k constant in lambda {res['k_constant']}",
    ]
    if res["cap_exceeded"]:
        lines.append(f"CapExceeded: stopped after {args.cap} families (partial results)")
    for row in res["families"]:
        if not row["reflection"]:
            lines.append(f"  family {row['family']}: reflection FAIL {row.get('witness')}")
    _emit(args, res, "\n".join(lines))
    return EXIT_OK if res["reflection_fail"] == 0 else EXIT_FAIL


def cmd_reproduce(args) -> int:
    rep = run_reproduction(args.name)
    _emit(args, rep.to_dict(timings=False), rep.summary())
    return EXIT_OK if rep.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    def globals_(suppress: bool) -> argparse.ArgumentParser:
        # subcommands repeat the global flags without overwriting values given earlier
        d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        g = argparse.ArgumentParser(add_help=False)
        g.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
        g.add_argument("--workers", type=int, default=d(None), help="worker processes for sweeps")
        g.add_argument("--seed", type=int, default=d(0), help="RNG seed for sampled runs")
        return g

    common = globals_(True)
    p = argparse.ArgumentParser(
        prog="dynrefl",
        description="Build and exhaustively verify dynamical Yang-Baxter and reflection maps.",
        parents=[globals_(False)],
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="structural validation of a document")
    s.add_argument("file", help="JSON document or fixture name (EX53, EX89, ZN3)")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("build", parents=[common], help="dump sigma, k, the lifted actions or quiver lifts")
    s.add_argument("file")
    s.add_argument("--what", required=True, choices=("sigma", "k", "lifts", "quiver"))
    s.add_argument("--out", help="write to a file instead of stdout")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("verify", parents=[common], help="run exhaustive checks")
    s.add_argument("file")
    s.add_argument("--check", default="all", help=f"comma list of {', '.join(CHECK_GROUPS)} or all")
    s.add_argument("--replay", help="re-evaluate a witness JSON instead of running checks")
    s.add_argument("--no-timings", action="store_true", help="omit wall times (stable output)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("enumerate", parents=[common], help="census over homomorphism families")
    s.add_argument("file")
    s.add_argument("--families", action="store_true", help="enumerate End(G)^X")
    s.add_argument("--limit", type=int, default=None, help="visit the first N families")
    s.add_argument("--random", type=int, default=None, metavar="N", help="sample N families with --seed")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP, help="hard cap on visited families")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("reproduce", parents=[common], help="recompute the built-in worked examples")
    s.add_argument("name", choices=sorted(REPRODUCTIONS))
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream pager or head closed early
        sys.stderr.close()
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
