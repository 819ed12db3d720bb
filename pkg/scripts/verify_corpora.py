"""Run every check over the exhaustive small corpora and print a summary table."""

import argparse
import time

from univpow.checks import CHECKS, run_checks
from univpow.oracle import enumerate_words


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--corpus", action="append", metavar="SIGMA:MAXLEN",
                        help="corpus to check (repeatable, default 2:12 and 3:8)")
    parser.add_argument("--horizon", type=int, default=30)
    args = parser.parse_args()
    corpora = args.corpus or ["2:12", "3:8"]
    ok = True
    for spec in corpora:
        sigma, max_len = (int(x) for x in spec.split(":"))
        start = time.perf_counter()
        report = run_checks(enumerate_words(sigma, max_len), horizon=args.horizon)
        elapsed = time.perf_counter() - start
        print(f"sigma={sigma} max_len={max_len}: {report.words} words in {elapsed:.1f}s")
        for name in CHECKS:
            mark = "ok  " if not report.failed[name] else "FAIL"
            print(f"  {mark} {name:28s} {report.passed[name]:7d} passed {report.failed[name]:5d} failed")
        for exc in report.failures[:5]:
            print(f"  counterexample: {exc}")
        ok = ok and report.ok
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
