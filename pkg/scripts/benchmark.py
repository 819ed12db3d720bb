"""Time profile construction, the circular index and O(1) queries on random words."""

import argparse
import gc
import random
import time

from univpow.circular import circular_index
from univpow.powers import build_profile, query_universality
from univpow.words import make_word


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        gc.collect()
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def analyze(text):
    w = make_word(text)
    profile = build_profile(w)
    circular_index(w, profile)
    return profile


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sigma", type=int, default=4)
    parser.add_argument("--max-length", type=int, default=10**6)
    parser.add_argument("--steps", type=int, default=4, help="number of doublings below max length")
    parser.add_argument("--queries", type=int, default=10**6)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    letters = "abcdefghijklmnopqrstuvwxyz"[:args.sigma]
    text = "".join(rng.choice(letters) for _ in range(args.max_length))

    sizes = [args.max_length >> i for i in range(args.steps - 1, -1, -1)]
    previous = None
    print(f"{'length':>10} {'seconds':>9} {'ratio':>6}")
    for n in sizes:
        t = best_of(lambda: analyze(text[:n]), args.repeat)
        ratio = f"{t / previous:6.2f}" if previous else "      "
        print(f"{n:10d} {t:9.3f} {ratio}")
        previous = t

    profile = analyze(text)
    start = time.perf_counter()
    for n in range(args.queries):
        query_universality(profile, n)
    elapsed = time.perf_counter() - start
    print(f"{args.queries} queries: {elapsed:.3f}s ({elapsed / args.queries * 1e9:.0f} ns each)")
    print(f"anchors={profile.anchors} k={profile.k} growth={list(profile.growth)}")


if __name__ == "__main__":
    main()
