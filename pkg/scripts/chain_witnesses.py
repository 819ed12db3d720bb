"""Search small corpora for the longest ascending and descending remainder chains.

Compares the search results with the square family (a1 a1 a2 a2 ... for
ascending chains) and the family used for long descending chains.
"""

import argparse

from univpow.oracle import Budget, enumerate_words
from univpow.powers import build_profile, chain_report, descending_bound, verify_chain_bounds
from univpow.words import Alphabet, make_word


def squares(sigma):
    return "".join(c * 2 for c in Alphabet.canonical(sigma).symbols)


def descending_family(sigma):
    a = Alphabet.canonical(sigma).symbols
    return a[-1] + squares(sigma) * (sigma - 2) + "".join(a[:-1])


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--search", action="append", metavar="SIGMA:MAXLEN",
                        help="exhaustive search (repeatable, default 2:12, 3:8, 4:8)")
    parser.add_argument("--families", type=int, default=6, help="largest sigma for the explicit families")
    parser.add_argument("--show", type=int, default=5)
    args = parser.parse_args()

    for spec in args.search or ["2:12", "3:8", "4:8"]:
        sigma, max_len = (int(x) for x in spec.split(":"))
        corpus = enumerate_words(sigma, max_len, Budget(max_candidates=2**24))
        report = verify_chain_bounds(corpus, max_witnesses=args.show)
        print(f"sigma={sigma} max_len={max_len} words={report.words}")
        print(f"  ascending  {report.max_ascending} (bound {sigma}): {', '.join(report.ascending_witnesses)}")
        print(f"  descending {report.max_descending} (bound {descending_bound(sigma)}): "
              f"{', '.join(report.descending_witnesses)}")

    print("explicit families")
    for sigma in range(2, args.families + 1):
        asc = chain_report(build_profile(make_word(squares(sigma)))).longest_ascending
        line = f"  sigma={sigma} ascending={asc}"
        if sigma >= 3:
            desc = chain_report(build_profile(make_word(descending_family(sigma)))).longest_descending
            line += f" descending={desc}"
        print(line)


if __name__ == "__main__":
    main()
