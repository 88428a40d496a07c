"""Command-line driver.

Exit codes: 0 success, 1 pipeline failure (uncontextualized hole, arity
conflict, step limit, failed round-trip), 2 usage or input parse errors.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .config import Config, parse_config
from .engine import rewrite
from .exceptions import InputError, PipelineError
from .pipeline import check_rules, infer, weave_pair
from .rulegen import parse_str
from .term import parse_term, print_term
from .validation import STRATEGIES, check_strategy
from .weave import weave_report

log = logging.getLogger("termpatch")


class _Failure(Exception):
    """Round-trip mismatch reported by ``check``."""


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
        return
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def _config(path) -> Config:
    return parse_config(_read(path)) if path else Config()


def cmd_infer(args):
    before, after = parse_term(_read(args.before)), parse_term(_read(args.after))
    result = infer(before, after, _config(args.config))
    _write(args.out, result.to_str())
    n = len(result.rules)
    print(f"{n} rule{'s' if n != 1 else ''} written to {args.out}")


def cmd_apply(args):
    rules = parse_str(_read(args.rules))
    term = parse_term(_read(args.input))
    result, trace = rewrite(term, rules, check_strategy(args.strategy, args.max_steps))
    for name, path in trace:
        log.info("applied %s at %s", name, list(path))
    _write(args.out, print_term(result) + "\n")


def cmd_diff(args):
    before, after = parse_term(_read(args.before)), parse_term(_read(args.after))
    _, w = weave_pair(before, after, _config(args.config), keep_locations=args.keep_locations)
    sys.stdout.write(weave_report(w))


def cmd_check(args):
    before, after = parse_term(_read(args.before)), parse_term(_read(args.after))
    config = _config(args.config)
    inferred = infer(before, after, config)
    # go through the emitted text so the check covers what `apply` would see
    rules = parse_str(inferred.to_str())
    ok, result = check_rules(before, after, rules, config)
    if not ok:
        raise _Failure("round-trip failed: rewritten term differs from the after term\n"
                       f"got: {print_term(result)}")
    print(f"round-trip OK ({len(rules)} rule{'s' if len(rules) != 1 else ''})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="termpatch",
        description="Infer and apply rewrite rules from before/after term examples.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log rule applications")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("infer", help="infer rules and write a Stratego .str file")
    p.add_argument("--before", required=True)
    p.add_argument("--after", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True, help="output .str file, or - for stdout")
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("apply", help="apply rules from a .str file to a term")
    p.add_argument("--rules", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--strategy", choices=STRATEGIES, default="topdown")
    p.add_argument("--max-steps", type=int, default=10000)
    p.add_argument("--out", required=True, help="output term file, or - for stdout")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("diff", help="print the woven structural difference")
    p.add_argument("--before", required=True)
    p.add_argument("--after", required=True)
    p.add_argument("--config")
    p.add_argument("--keep-locations", action="store_true",
                   help="compare location subterms instead of normalizing them")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("check", help="infer, apply and compare modulo locations")
    p.add_argument("--before", required=True)
    p.add_argument("--after", required=True)
    p.add_argument("--config", required=True)
    p.set_defaults(func=cmd_check)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    try:
        if getattr(args, "max_steps", 1) < 1:
            raise InputError("--max-steps must be at least 1")
        args.func(args)
    except InputError as exc:
        print(f"termpatch: error: {exc}", file=sys.stderr)
        return 2
    except (PipelineError, _Failure) as exc:
        print(f"termpatch: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())
