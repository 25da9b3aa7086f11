"""Command-line interface.

Subcommands: count, sequence, enumerate, validate, dyck, verify, render.
Exit codes: 0 on success, 1 on input errors (including guard refusals),
2 when verification finds a golden mismatch.
"""

import argparse
import json
import os
import sys

from . import catalog, render
from .bijections import dyck_to_touchard, parse_dyck, touchard_to_dyck, TYPE_AE
from .closedforms import general_count
from .oracle import (
    DEFAULT_LIMITS,
    GuardExceeded,
    ResourceLimits,
    count_dp,
    enumerate_walks,
    sequence_dp,
)
from .walks import (
    ParseError,
    canonicalize_type,
    parse_walk,
    step_alphabet,
    validate,
    walk_text,
)

ENV_MAX_STATES = "WALKS_MAX_STATES"


class CliError(Exception):
    """Bad command-line input; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def _limits(args) -> ResourceLimits:
    max_brute = getattr(args, "max_brute", None)
    if max_brute is None:
        max_brute = DEFAULT_LIMITS.max_brute_candidates
    elif max_brute <= 0:
        raise CliError("--max-brute must be a positive integer")
    max_states = DEFAULT_LIMITS.max_dp_states
    raw = os.environ.get(ENV_MAX_STATES)
    if raw is not None:
        try:
            max_states = int(raw)
        except ValueError:
            raise CliError(f"{ENV_MAX_STATES} must be a positive integer, got {raw!r}")
        if max_states <= 0:
            raise CliError(f"{ENV_MAX_STATES} must be a positive integer, got {raw!r}")
    return ResourceLimits(max_brute_candidates=max_brute, max_dp_states=max_states)


def _walk_type(args):
    try:
        return canonicalize_type(args.type)
    except ValueError as exc:
        raise CliError(str(exc))


def _cmd_count(args) -> int:
    walk_type = _walk_type(args)
    if args.n < 0:
        raise CliError("--n must be >= 0")
    if args.method == "formula":
        value = general_count(walk_type, args.n)
    elif args.method == "brute":
        value = len(enumerate_walks(walk_type, args.n, _limits(args)))
    else:
        value = count_dp(walk_type, args.n, _limits(args))
    print(value)
    return 0


def _cmd_sequence(args) -> int:
    walk_type = _walk_type(args)
    if args.max_n < 0:
        raise CliError("--max-n must be >= 0")
    values = sequence_dp(walk_type, args.max_n, _limits(args))
    for n, value in enumerate(values):
        if args.format == "bfile":
            print(f"{n} {value}")
        elif args.format == "json":
            print(
                json.dumps(
                    {"type": walk_type.letters, "n": n, "count": str(value)},
                    separators=(",", ":"),
                )
            )
        else:
            print(value)
    return 0


def _cmd_enumerate(args) -> int:
    walk_type = _walk_type(args)
    if args.n < 0:
        raise CliError("--n must be >= 0")
    for walk in enumerate_walks(walk_type, args.n, _limits(args)):
        print(walk_text(walk, walk_type))
    return 0


def _cmd_validate(args) -> int:
    walk_type = _walk_type(args)
    walk = parse_walk(args.walk, walk_type)
    violation = validate(walk, walk_type)
    if violation is None:
        print("valid")
        return 0
    print(f"invalid at step {violation.step_index}: {violation.reason}")
    inverse = {direction: token for token, direction in step_alphabet(walk_type)}
    tokens = [inverse[step] for step in walk.steps]
    # A nonzero-final-height violation has step_index == n, so no token
    # gets marked; the reason line already names the dimension.
    marked = [
        f"[{token}]" if index == violation.step_index else token
        for index, token in enumerate(tokens)
    ]
    print(" ".join(marked))
    return 1


def _cmd_dyck(args) -> int:
    if args.mode == "encode":
        walk = parse_walk(args.text, TYPE_AE)
        print(touchard_to_dyck(walk).word)
    else:
        path = parse_dyck(args.text)
        if path.length == 0:
            raise CliError("the empty Dyck path has no corresponding walk")
        print(walk_text(dyck_to_touchard(path), TYPE_AE))
    return 0


def _cmd_verify(args) -> int:
    limits = _limits(args)
    if args.table3:
        report = catalog.verify_table3(args.n_max, limits)
    else:
        if not args.type:
            raise CliError("verify needs --table3 or --type")
        n_max = args.n_max if args.n_max is not None else 8
        report = catalog.verify(_walk_type(args), n_max, limits)
    print(report.text())
    return 0 if report.ok else 2


def _cmd_render(args) -> int:
    if args.dyck:
        path = parse_dyck(args.text)
        output = (
            render.render_dyck_svg(path)
            if args.format == "svg"
            else render.render_dyck_ascii(path)
        )
    else:
        if not args.type:
            raise CliError("render needs --type or --dyck")
        walk_type = _walk_type(args)
        walk = parse_walk(args.text, walk_type)
        output = (
            render.render_walk_svg(walk, walk_type)
            if args.format == "svg"
            else render.render_walk_ascii(walk, walk_type)
        )
    if args.out:
        with open(args.out, "w", newline="\n") as handle:
            handle.write(output)
    else:
        sys.stdout.write(output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="touchard", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count valid walks of one length")
    count.add_argument("--type", required=True, help="walk type letters, e.g. ae")
    count.add_argument("--n", type=int, required=True, help="walk length")
    count.add_argument(
        "--method",
        choices=("dp", "formula", "brute"),
        default="dp",
        help="counting route (default: dp)",
    )
    count.add_argument("--max-brute", type=int, help="brute-force candidate guard")
    count.set_defaults(func=_cmd_count)

    sequence = sub.add_parser("sequence", help="counts for lengths 0..max-n")
    sequence.add_argument("--type", required=True)
    sequence.add_argument(
        "--max-n", "--n-max", dest="max_n", type=int, required=True
    )
    sequence.add_argument(
        "--format", choices=("plain", "bfile", "json"), default="plain"
    )
    sequence.set_defaults(func=_cmd_sequence)

    enumerate_cmd = sub.add_parser("enumerate", help="list valid walks of one length")
    enumerate_cmd.add_argument("--type", required=True)
    enumerate_cmd.add_argument("--n", type=int, required=True)
    enumerate_cmd.add_argument("--max-brute", type=int)
    enumerate_cmd.set_defaults(func=_cmd_enumerate)

    validate_cmd = sub.add_parser("validate", help="check one walk against its type")
    validate_cmd.add_argument("--type", required=True)
    validate_cmd.add_argument("walk", help="walk text, e.g. NSEW")
    validate_cmd.set_defaults(func=_cmd_validate)

    dyck = sub.add_parser("dyck", help="convert between ae-walks and Dyck words")
    dyck.add_argument("mode", choices=("encode", "decode"))
    dyck.add_argument("text", help="walk text (encode) or Dyck word (decode)")
    dyck.set_defaults(func=_cmd_dyck)

    verify = sub.add_parser("verify", help="cross-check counts against golden tables")
    verify.add_argument("--table3", action="store_true", help="check all golden rows")
    verify.add_argument("--type", help="check a single type instead")
    verify.add_argument("--n-max", "--max-n", dest="n_max", type=int)
    verify.set_defaults(func=_cmd_verify)

    render_cmd = sub.add_parser("render", help="draw a walk or Dyck path")
    render_cmd.add_argument("text", help="walk text or Dyck word")
    render_cmd.add_argument("--type", help="walk type (grid picture)")
    render_cmd.add_argument(
        "--dyck", action="store_true", help="treat the text as a Dyck word timeline"
    )
    render_cmd.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    render_cmd.add_argument("--out", help="write to a file instead of stdout")
    render_cmd.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
