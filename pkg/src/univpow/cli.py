"""Command-line entry point: ``univpow {analyze,power,verify,witness}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .arch import arch_factorize
from .checks import CHECKS, run_checks
from .circular import circular_index
from .errors import AlphabetError, BudgetExceeded
from .oracle import Budget, enumerate_words, power_oracle
from .powers import build_profile, chain_report, descending_bound, query_universality, verify_chain_bounds
from .words import Alphabet, Word, make_word

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

DEFAULT_MAX_LEN = {1: 12, 2: 12, 3: 8, 4: 6}

log = logging.getLogger("univpow")


def _default_max_len(sigma):
    return DEFAULT_MAX_LEN.get(sigma, 5)


def analysis_record(w: Word) -> dict:
    fact = arch_factorize(w)
    if fact.k == 0:
        return {
            "word": str(w),
            "sigma": w.sigma,
            "arches": fact.render(),
            "k": 0,
            "warning": "word is not 1-universal over its alphabet",
        }
    profile = build_profile(w)
    record = profile.to_dict()
    record["arches"] = fact.render()
    record["zeta"] = circular_index(w, profile).zeta
    record["chain"] = chain_report(profile).to_dict()
    return record


def format_record(record: dict) -> str:
    if record["k"] == 0:
        return f"{record['arches']}  ι=0"
    s, t = record["anchors"]
    pattern = ",".join(str(g) for g in record["growth"][:t])
    chain = record["chain"]
    parts = [
        record["arches"],
        f"ι={record['k']}",
        f"ζ={record['zeta']}",
        f"anchors=({s},{t})",
        f"period={record['period']}",
        f"growth=[{pattern}]…",
        f"asc={chain['longest_ascending']}",
        f"desc={chain['longest_descending']}",
    ]
    if chain["perfect_power"] is not None:
        parts.append(f"perfect_power={chain['perfect_power']}")
    return "  ".join(parts)


def _read_words(args):
    if args.file is not None:
        with open(args.file, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.rstrip("\r\n")
                if line.startswith("#"):
                    continue
                yield lineno, line
    else:
        yield None, args.word


def cmd_analyze(args) -> int:
    if args.word is None and args.file is None:
        print("analyze: give a WORD or --file PATH", file=sys.stderr)
        return EXIT_USAGE
    alphabet = Alphabet(tuple(args.alphabet)) if args.alphabet else None
    status = EXIT_OK
    for lineno, text in _read_words(args):
        where = f"line {lineno}: " if lineno is not None else ""
        if text == "" and alphabet is None:
            record = {"word": "", "sigma": 0, "arches": "|", "k": 0, "warning": "empty word"}
        else:
            try:
                w = make_word(text, alphabet)
            except AlphabetError as exc:
                print(f"error: {where}{exc}", file=sys.stderr)
                status = EXIT_USAGE
                continue
            record = analysis_record(w)
        if "warning" in record:
            print(f"warning: {where}{record['warning']} ({record['word']!r})", file=sys.stderr)
        if args.json:
            print(json.dumps(record, ensure_ascii=False))
        else:
            print(format_record(record))
    return status


def cmd_power(args) -> int:
    if args.n < 0:
        print("power: N must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    try:
        w = make_word(args.word, args.alphabet or None)
    except AlphabetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if arch_factorize(w).k == 0:
        value = 0
    else:
        value = query_universality(build_profile(w), args.n)
    print(value)
    if args.check:
        try:
            expected, _ = power_oracle(w, args.n, Budget(max_power_length=args.max_power_length))
        except BudgetExceeded as exc:
            print(f"check skipped: {exc}", file=sys.stderr)
            return EXIT_OK
        if expected != value:
            print(f"check FAILED: materialized power gives {expected}", file=sys.stderr)
            return EXIT_FAILED
        print("check ok", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    max_len = args.max_len if args.max_len is not None else _default_max_len(args.sigma)
    try:
        corpus = list(enumerate_words(args.sigma, max_len))
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = run_checks(corpus, horizon=args.horizon)
    print(f"sigma={args.sigma} max_len={max_len} horizon={args.horizon} words={report.words}")
    width = max(len(name) for name in CHECKS)
    for name in CHECKS:
        verdict = "PASS" if report.failed[name] == 0 else "FAIL"
        print(f"{verdict}  {name:<{width}}  passed={report.passed[name]} failed={report.failed[name]}")
    for exc in report.failures:
        print(f"counterexample: {exc.claim}: word={exc.word!r} expected={exc.expected!r} actual={exc.actual!r}")
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_witness(args) -> int:
    max_len = args.max_len if args.max_len is not None else _default_max_len(args.sigma)
    try:
        corpus = enumerate_words(args.sigma, max_len)
        report = verify_chain_bounds(corpus, max_witnesses=args.limit)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.kind == "ascending":
        target, found, witnesses = args.sigma, report.max_ascending, report.ascending_witnesses
    else:
        target, found = descending_bound(args.sigma), report.max_descending
        witnesses = report.descending_witnesses
    print(f"sigma={args.sigma} max_len={max_len} words={report.words} kind={args.kind}")
    print(f"longest strict {args.kind} chain found: {found} (bound {target})")
    if witnesses:
        for text in witnesses:
            print(f"{text}  {args.kind}={target}")
    else:
        print(f"no word attains length {target}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="univpow", description="Scattered-factor universality of words and their powers.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="arch factorisation, iota, zeta and power profile")
    p.add_argument("word", nargs="?")
    p.add_argument("--file")
    p.add_argument("--alphabet")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("power", help="iota(w^n) in constant time")
    p.add_argument("word")
    p.add_argument("n", type=int)
    p.add_argument("--alphabet")
    p.add_argument("--check", action="store_true", help="cross-check against the materialized power")
    p.add_argument("--max-power-length", type=int, default=10**6)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("verify", help="check every statement on all words up to a length")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--max-len", type=int)
    p.add_argument("--horizon", type=int, default=30)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="find words with maximal strict remainder chains")
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--max-len", type=int)
    p.add_argument("--kind", choices=("ascending", "descending"), required=True)
    p.add_argument("--limit", type=int, default=20)
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    if getattr(args, "sigma", 1) is not None and getattr(args, "sigma", 1) < 1:
        print("--sigma must be positive", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
