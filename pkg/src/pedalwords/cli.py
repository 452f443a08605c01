"""Command-line interface.

Exit status: 0 on success, 1 when the input is outside the domain of the
requested map, 2 for usage and format errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__, bijection, counting, kernels
from .bijection import (
    MAX_ENUMERATION_N,
    PeriodicTriangle,
    eta,
    iter_periodic_triangles,
    parse_column_word,
    word_to_triangle,
)
from .errors import (
    BijectionViolation,
    DegenerateError,
    DomainError,
    FixtureError,
    FormatError,
    NotInDomainError,
)
from .pedal import Degenerate, Period, SortedTriple, exact_pedal_period
from .render import MAX_ITERATIONS, RenderSpec, render_svg
from .verification import load_fixture, run_verification
from .words import Word2D

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class DomainRejection(Exception):
    def __init__(self, reason: str, detail: str):
        super().__init__(f"{reason}: {detail}")
        self.reason = reason


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def cmd_count(args, out):
    psi_flags = [args.k, args.m, args.n]
    modes = sum([any(f is not None for f in psi_flags), args.chi is not None, args.phi is not None])
    if modes != 1:
        raise UsageError("give exactly one of: --k/--m/--n, --chi N, --phi N")
    if args.chi is not None:
        f = counting.chi_mobius if args.method == "mobius" else counting.chi_inclusion_exclusion
        value = f(args.chi)
    elif args.phi is not None:
        value = counting.phi(args.phi)
    else:
        if args.m is None or args.n is None:
            raise UsageError("psi needs both --m and --n")
        value = counting.psi(args.k if args.k is not None else 2, args.m, args.n)
    print(value, file=out)


def cmd_enumerate(args, out):
    n = args.n
    if n > MAX_ENUMERATION_N and not args.force:
        raise UsageError(f"--n {n} exceeds the enumeration bound {MAX_ENUMERATION_N}; add --force")
    printed = 0
    for t in iter_periodic_triangles(n, force=args.force, workers=args.workers):
        if args.limit is not None and printed >= args.limit:
            break
        if args.format == "records":
            line = t.record()
        elif args.format == "words":
            line = t.word.to_text("/")
        else:
            line = str(t.triple)
        print(line, file=out)
        printed += 1
    print(f"n={n}: {counting.chi_mobius(n)} triangles, {printed} printed", file=sys.stderr)


def _triangle_from_triple(text: str, n: int) -> PeriodicTriangle:
    try:
        p = SortedTriple.parse(text, sort=True)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    if not p.is_nondegenerate:
        raise DomainRejection("Degenerate", f"{p} has a zero angle")
    result = exact_pedal_period(p, n)
    if isinstance(result, Degenerate):
        raise DomainRejection("Degenerate", f"iterate {result.step} of {p} is a right triangle")
    if result != Period(n):
        detail = f"exact pedal period {result.n}" if isinstance(result, Period) else "no return within n steps"
        raise DomainRejection("NotPeriodic", f"{p} does not have exact pedal period {n} ({detail})")
    return PeriodicTriangle(p, n, bijection.itinerary(p, n))


def _triangle_from_word(W: Word2D) -> PeriodicTriangle:
    try:
        return word_to_triangle(W)
    except NotInDomainError as exc:
        raise DomainRejection("NotPrimitive", str(exc).replace("\n", "/")) from exc


def cmd_map(args, out):
    given = [args.triple is not None, args.word is not None, args.itinerary is not None]
    if sum(given) != 1:
        raise UsageError("give exactly one of --triple (with --n), --word, --itinerary")
    if args.triple is not None:
        if args.n is None:
            raise UsageError("--triple needs --n")
        t = _triangle_from_triple(args.triple, args.n)
    elif args.word is not None:
        W = Word2D.parse(args.word, sep="/")
        t = _triangle_from_word(W)
    else:
        t = _triangle_from_word(eta(parse_column_word(args.itinerary)))
    print(t.record(), file=out)


def cmd_verify(args, out):
    fixture = load_fixture(args.expected) if args.expected else None
    report = run_verification(args.max_n, fixture, deep=args.deep, workers=args.workers)
    print(report.format(), file=out)
    return EXIT_OK if report.passed else EXIT_DOMAIN


def cmd_render(args, out):
    try:
        p = SortedTriple.parse(args.triple, sort=True)
        spec = RenderSpec(p, args.iterations, width=args.width, height=args.height)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    try:
        svg = render_svg(spec)
    except DegenerateError as exc:
        raise DomainRejection("Degenerate", str(exc)) from exc
    if args.out == "-":
        out.write(svg)
    else:
        Path(args.out).write_text(svg)
        print(f"wrote {args.out}", file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pedalwords",
        description="Primitive 2 x n binary words and triangles of exact pedal period n.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__} (kernel: {kernels.DEFAULT_BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form counts")
    p.add_argument("--k", type=positive_int, help="alphabet size for psi (default 2)")
    p.add_argument("--m", type=positive_int, help="rows for psi")
    p.add_argument("--n", type=positive_int, help="columns for psi")
    p.add_argument("--chi", type=positive_int, metavar="N", help="triangles of exact pedal period N")
    p.add_argument("--phi", type=positive_int, metavar="N", help="triangles similar to their N-th pedal triangle")
    p.add_argument("--method", choices=["mobius", "inclusion-exclusion"], default="mobius",
                   help="formula used for --chi")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list all triangles of exact pedal period N")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--limit", type=nonnegative_int)
    p.add_argument("--format", choices=["records", "words", "triples"], default="records")
    p.add_argument("--force", action="store_true", help=f"allow N > {MAX_ENUMERATION_N}")
    p.add_argument("--workers", type=positive_int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="map a triangle, word, or itinerary to its full record")
    p.add_argument("--triple", help="angles over pi, e.g. 44/129,43/129,42/129")
    p.add_argument("--n", type=positive_int, help="exact pedal period expected for --triple")
    p.add_argument("--word", help="two binary rows separated by '/', e.g. 0000011/1111101")
    p.add_argument("--itinerary", help="column word over 0-3, e.g. 0000032")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="cross-check formulas, fixtures, and the enumeration")
    p.add_argument("--max-n", type=positive_int, required=True)
    p.add_argument("--expected", metavar="FILE", help="fixture file, or 'builtin' for the packaged tables")
    p.add_argument("--deep", action="store_true", help="also enumerate and validate every triangle (n <= 8)")
    p.add_argument("--workers", type=positive_int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw iterated pedal triangles as SVG")
    p.add_argument("--triple", required=True)
    p.add_argument("--iterations", type=nonnegative_int, required=True,
                   help=f"number of pedal steps, at most {MAX_ITERATIONS}")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.add_argument("--width", type=float, default=480.0)
    p.add_argument("--height", type=float, default=480.0)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status = args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"pedalwords {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FixtureError, FormatError) as exc:
        print(f"pedalwords {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainRejection as exc:
        print(f"pedalwords {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BijectionViolation as exc:
        print(f"pedalwords {args.command}: internal error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DomainError as exc:
        print(f"pedalwords {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK if status is None else status


if __name__ == "__main__":
    sys.exit(main())
