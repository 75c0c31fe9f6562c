"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 failed internal
verification.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import approx, ns_core, raster_io, tables, verify
from .octagon import DescriptorKind

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3
OUT_DIR_ENV = "NSDISC_OUT_DIR"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not v > 0 or v != v or v == float("inf"):
        raise argparse.ArgumentTypeError(f"must be a positive finite number: {text!r}")
    return v


def _point(text):
    try:
        x, y = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y integers, got {text!r}") from None
    return ns_core.Point(x, y)


def _values(text):
    try:
        vals = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated 1s and 2s, got {text!r}") from None
    if any(v not in (1, 2) for v in vals):
        raise argparse.ArgumentTypeError(f"sequence values must be 1 or 2, got {text!r}")
    return vals


def _sequence(values, tail):
    if tail is None:
        if not values:
            raise UsageError("a periodic sequence needs at least one value")
        return ns_core.NeighbourhoodSequence.periodic(*values)
    return ns_core.NeighbourhoodSequence.constant(tail, values)


def _choices(value, parse, universe):
    if value == "all":
        return list(universe)
    return [parse(v) for v in value.split(",")]


def _resolve_out(path):
    p = Path(path)
    base = os.environ.get(OUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _write(data: bytes, out, stdout):
    if out is None or out == "-":
        if hasattr(stdout, "buffer"):
            stdout.flush()
            stdout.buffer.write(data)
            stdout.buffer.flush()
        else:
            stdout.write(data.decode("ascii"))
        return
    path = _resolve_out(out)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)
    except OSError as e:
        raise OSError(f"cannot write {path}: {e.strerror or e}") from e


def _fmt_num(v):
    if float(v).is_integer():
        return str(int(v))
    return f"{v:.4f}"


def cmd_approximate(args, stdout):
    methods = _choices(args.method, approx.ApproximationMethod.parse, approx.METHODS)
    kinds = _choices(args.descriptor, DescriptorKind.parse, approx.KINDS)
    results = [approx.best_sequence(m, d, args.radius) for d in kinds for m in methods]
    if args.format == "json":
        payload = [r.to_dict() for r in results]
        stdout.write(json.dumps(payload if len(payload) > 1 else payload[0], indent=2, sort_keys=True) + "\n")
    elif args.format == "csv":
        stdout.write("method,descriptor,r,a_ideal,a,k1,k2,b,k,degenerate\n")
        for r in results:
            stdout.write(
                f"{r.method.value},{r.kind.value},{r.r:.6f},{r.a_ideal:.6f},"
                f"{_fmt_num(r.realized.a)},{r.k1},{r.k2},{r.realized.b:.4f},{r.k},"
                f"{int(r.degenerate)}\n"
            )
    else:
        header = f"{'method':<18}{'descriptor':<11}{'a_ideal':>10}{'a':>8}{'k1':>6}{'k2':>6}{'b':>10}{'k':>6}"
        stdout.write(f"r = {args.radius:g}\n{header}\n")
        for r in results:
            flag = "  degenerate" if r.degenerate else ""
            stdout.write(
                f"{r.method.label:<18}{r.kind.value:<11}{r.a_ideal:>10.4f}"
                f"{_fmt_num(r.realized.a):>8}{r.k1:>6}{r.k2:>6}{r.realized.b:>10.4f}{r.k:>6}{flag}\n"
            )
    return EXIT_OK


def cmd_distance(args, stdout):
    B = _sequence(args.sequence, args.tail)
    closed = ns_core.ns_distance(args.from_, args.to, B)
    bfs = ns_core.ns_distance_bfs(args.from_, args.to, B)
    stdout.write(f"closed_form {closed}\nbfs {bfs}\n")
    if closed != bfs:
        stdout.write("MISMATCH between closed form and breadth-first search\n")
        return EXIT_VERIFY
    stdout.write(f"distance {closed}\n")
    return EXIT_OK


def cmd_disc(args, stdout):
    if args.sequence is not None:
        if args.k1 is not None or args.k2 is not None:
            raise UsageError("give either --sequence or --k1/--k2, not both")
        B = _sequence(args.sequence, args.tail)
        if args.steps is None:
            raise UsageError("--steps is required with --sequence")
        steps = args.steps
    else:
        if args.k1 is None or args.k2 is None:
            raise UsageError("give --sequence or both --k1 and --k2")
        if args.k1 < 0 or args.k2 < 0:
            raise UsageError("--k1 and --k2 must be nonnegative")
        B = approx.canonical_sequence(args.k1, args.k2)
        steps = args.k1 + args.k2 if args.steps is None else args.steps
    if steps < 0:
        raise UsageError("--steps must be nonnegative")
    disc = ns_core.generate_disc((0, 0), steps, B)
    if args.ascii:
        data = raster_io.render_ascii(disc).encode()
    else:
        data = raster_io.render_pgm(disc, args.circle).to_pgm()
    out = args.out
    if out is None and not args.ascii and os.environ.get(OUT_DIR_ENV):
        out = "disc.pgm"
    _write(data, out, stdout)
    return EXIT_OK


def cmd_tables(args, stdout):
    stdout.write(tables.render_table(args.which, args.format))
    return EXIT_OK


def cmd_sweep(args, stdout):
    if args.rmin > args.rmax:
        raise UsageError(f"--rmin {args.rmin} exceeds --rmax {args.rmax}")
    methods = _choices(args.method, approx.ApproximationMethod.parse, approx.METHODS)
    series = approx.sweep_series(args.descriptor, args.rmin, args.rmax, args.step, methods)
    _write(raster_io.export_csv(series).encode(), args.out, stdout)
    return EXIT_OK


def cmd_verify(args, stdout):
    results = verify.run_checks(args.level)
    for r in results:
        stdout.write(r.line() + "\n")
    failed = [r.name for r in results if not r.passed]
    if failed:
        stdout.write(f"FAILED: {', '.join(failed)}\n")
        return EXIT_VERIFY
    stdout.write(f"all {len(results)} checks passed ({args.level})\n")
    return EXIT_OK


def _add_sequence_args(p, required):
    p.add_argument("--sequence", type=_values, required=required,
                   help="comma-separated prefix, e.g. 2,2,2,1")
    tail = p.add_mutually_exclusive_group()
    tail.add_argument("--periodic", dest="tail", action="store_const", const=None,
                      help="repeat the prefix forever (default)")
    tail.add_argument("--tail", type=int, choices=(1, 2), default=None,
                      help="constant value after the prefix")


def build_parser():
    parser = _Parser(prog="nsdisc", description="Neighbourhood-sequence discs and circle approximation.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("approximate", help="best octagon for a circle radius")
    p.add_argument("--radius", type=_positive_float, required=True)
    p.add_argument("--method", default="all")
    p.add_argument("--descriptor", default="inner")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_approximate)

    p = sub.add_parser("distance", help="distance between two points")
    p.add_argument("--from", dest="from_", type=_point, required=True)
    p.add_argument("--to", type=_point, required=True)
    _add_sequence_args(p, required=True)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("disc", help="render a digital disc")
    p.add_argument("--k1", type=int)
    p.add_argument("--k2", type=int)
    _add_sequence_args(p, required=False)
    p.add_argument("--steps", type=int)
    p.add_argument("--out", help="output file, or - for stdout")
    p.add_argument("--ascii", action="store_true", help="distance-label map instead of PGM")
    p.add_argument("--circle", type=_positive_float, help="overlay a circle of this radius")
    p.set_defaults(func=cmd_disc)

    p = sub.add_parser("tables", help="regenerate a summary table")
    p.add_argument("--which", type=int, choices=(1, 2, 4, 5), required=True)
    p.add_argument("--format", choices=("md", "csv"), default="md")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("sweep", help="step counts over a radius grid (CSV)")
    p.add_argument("--rmin", type=_positive_float, required=True)
    p.add_argument("--rmax", type=_positive_float, required=True)
    p.add_argument("--step", type=_positive_float, required=True)
    p.add_argument("--descriptor", default="inner")
    p.add_argument("--method", default="all")
    p.add_argument("--out", help="output file, or - for stdout")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the oracle cross-checks")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.func(args, stdout)
    except UsageError as e:
        stderr.write(f"nsdisc: error: {e}\n")
        return EXIT_USAGE
    except ValueError as e:
        stderr.write(f"nsdisc: error: {e}\n")
        return EXIT_DOMAIN
    except OSError as e:
        stderr.write(f"nsdisc: error: {e}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
