"""Command line interface.

Subcommands: gen (construct word prefixes), rich (richness report),
exponent (maximal factor exponent), least (backtracking search), decode
(morphism preimages), verify (the desk-scale verification suite).

Exit codes: 0 pass, 1 a check failed or a query came back negative,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .morphisms import Morphism, STANDARD
from .palindromes import is_rich
from .repetitions import FreenessPolicy, is_free, max_exponent
from .search import FreenessChecker, RichnessChecker, lex_least_extendable, lex_least_of_length
from .verify import RunConfig, claim_ids, run_all
from .words import Word


def _usage_error(message: str) -> "SystemExit":
    print(f"error: {message}", file=sys.stderr)
    return SystemExit(2)


def _read_word(arg: str) -> Word:
    if arg == "-":
        text = sys.stdin.read()
    elif arg and all(c in "0123456789" for c in arg):
        text = arg
    elif os.path.exists(arg):
        with open(arg) as handle:
            text = handle.read()
    else:
        raise _usage_error(f"not a digit string, file, or '-': {arg!r}")
    try:
        return Word.from_string(text)
    except ValueError as exc:
        raise _usage_error(str(exc))


def _resolve_morphism(spec: str) -> Morphism:
    if spec in STANDARD:
        return STANDARD[spec]
    if os.path.exists(spec):
        with open(spec) as handle:
            try:
                return Morphism.from_text(handle.read(), name=os.path.basename(spec))
            except ValueError as exc:
                raise _usage_error(str(exc))
    raise _usage_error(f"unknown morphism {spec!r}: use f, g, h or a rules file")


def _parse_bound(text: str) -> Fraction:
    try:
        bound = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _usage_error(f"bad rational bound {text!r}")
    if bound <= 1:
        raise _usage_error("freeness bound must exceed 1")
    return bound


def _cmd_gen(args) -> int:
    from . import verify
    builder = {"ell": verify.build_ell, "v": verify.build_v}[args.word]
    print(builder(args.length))
    return 0


def _cmd_rich(args) -> int:
    report = is_rich(_read_word(args.word))
    if args.json:
        print(json.dumps({
            "rich": report.is_rich,
            "length": report.length,
            "palindrome_count": report.palindrome_count,
            "first_deficient_prefix_length": report.first_deficient_prefix_length,
        }))
    else:
        print(f"rich: {'yes' if report.is_rich else 'no'}")
        print(f"length: {report.length}")
        print(f"distinct palindromic factors: {report.palindrome_count}")
        if report.first_deficient_prefix_length is not None:
            print(f"first deficient prefix length: {report.first_deficient_prefix_length}")
    return 0 if report.is_rich else 1


def _cmd_exponent(args) -> int:
    w = _read_word(args.word)
    if len(w) == 0:
        raise _usage_error("the empty word has no factor exponent")
    report = max_exponent(w)
    print(f"max exponent: {report.max_exponent}")
    print(
        f"witness: start {report.witness_start} "
        f"length {report.witness_length} period {report.witness_period}"
    )
    if args.bound is None:
        return 0
    policy = FreenessPolicy(_parse_bound(args.bound), args.strict)
    free = is_free(w, policy)
    print(f"{policy.describe()}: {'yes' if free else 'no'}")
    return 0 if free else 1


def _make_checkers(preds: list[str], strict: bool):
    checkers = []
    for spec in preds:
        if spec == "rich":
            checkers.append(RichnessChecker())
        elif spec.startswith("free:"):
            policy = FreenessPolicy(_parse_bound(spec[len("free:"):]), strict)
            checkers.append(FreenessChecker(policy))
        else:
            raise _usage_error(f"unknown predicate {spec!r}: use rich or free:BOUND")
    return checkers


def _cmd_least(args) -> int:
    checkers = _make_checkers(args.pred, args.strict)
    if args.lookahead:
        outcome = lex_least_extendable(args.length, args.alphabet, checkers, args.lookahead)
    else:
        outcome = lex_least_of_length(args.length, args.alphabet, checkers)
    if args.json:
        print(json.dumps({
            "found": outcome.found,
            "word": str(outcome.word) if outcome.found else None,
            "nodes_visited": outcome.nodes_visited,
            "max_backtrack_depth": outcome.max_backtrack_depth,
        }))
    elif outcome.found:
        print(outcome.word)
    else:
        print(f"no word of length {args.length} satisfies the predicates", file=sys.stderr)
    return 0 if outcome.found else 1


def _cmd_decode(args) -> int:
    m = _resolve_morphism(args.morphism)
    result = m.decode(_read_word(args.word))
    if result.ok:
        print(result.preimage)
        if len(result.residue):
            print(f"residue: {result.residue}", file=sys.stderr)
        return 0
    print(f"undecodable at offset {result.failed_at}", file=sys.stderr)
    return 1


def _cmd_verify(args) -> int:
    cfg = RunConfig(
        prefix_length=args.prefix_length,
        search_length=args.search_length,
        lookahead=args.lookahead,
        bound=_parse_bound(args.bound),
        strict=args.strict,
        output_format="json" if args.json else "text",
    )
    if args.claim is not None and args.claim not in claim_ids():
        raise _usage_error(
            f"unknown claim {args.claim!r}; choose from {', '.join(claim_ids())}"
        )
    reports = run_all(cfg, only=args.claim)
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for report in reports:
            print(f"{report.claim_id}: {'PASS' if report.status else 'FAIL'}")
            for key, value in report.evidence.items():
                print(f"  {key}: {_render(value)}")
        passed = sum(r.status for r in reports)
        print(f"{passed}/{len(reports)} checks passed")
    return 0 if all(r.status for r in reports) else 1


def _render(value) -> str:
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_render(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_render(v) for v in value) + "]"
    return str(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="richwords",
        description="Rich words, repetition exponents, and least-word search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="print a prefix of a constructed word")
    p_gen.add_argument("word", choices=("ell", "v"))
    p_gen.add_argument("--length", type=int, required=True)
    p_gen.set_defaults(func=_cmd_gen)

    p_rich = sub.add_parser("rich", help="palindromic richness of a word")
    p_rich.add_argument("word", help="digit string, file, or - for stdin")
    p_rich.add_argument("--json", action="store_true")
    p_rich.set_defaults(func=_cmd_rich)

    p_exp = sub.add_parser("exponent", help="maximal factor exponent of a word")
    p_exp.add_argument("word", help="digit string, file, or - for stdin")
    p_exp.add_argument("--bound", help="rational bound such as 14/5")
    p_exp.add_argument("--strict", action="store_true", help="forbid only exponents above the bound")
    p_exp.set_defaults(func=_cmd_exponent)

    p_least = sub.add_parser("least", help="lexicographically least word search")
    p_least.add_argument("--length", type=int, required=True)
    p_least.add_argument("--alphabet", type=int, default=2)
    p_least.add_argument("--pred", action="append", default=[],
                         help="rich or free:BOUND; repeatable")
    p_least.add_argument("--strict", action="store_true")
    p_least.add_argument("--lookahead", type=int, default=0)
    p_least.add_argument("--json", action="store_true")
    p_least.set_defaults(func=_cmd_least)

    p_dec = sub.add_parser("decode", help="preimage of a word under a morphism")
    p_dec.add_argument("--morphism", required=True, help="f, g, h, or a rules file")
    p_dec.add_argument("word", help="digit string, file, or - for stdin")
    p_dec.set_defaults(func=_cmd_decode)

    p_ver = sub.add_parser("verify", help="run the verification suite")
    p_ver.add_argument("--claim", help="run a single claim by id")
    p_ver.add_argument("--prefix-length", type=int, default=10_000)
    p_ver.add_argument("--search-length", type=int, default=100)
    p_ver.add_argument("--lookahead", type=int, default=150)
    p_ver.add_argument("--bound", default="14/5")
    p_ver.add_argument("--strict", action="store_true")
    p_ver.add_argument("--json", action="store_true")
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
