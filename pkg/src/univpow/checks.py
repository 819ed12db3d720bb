"""Per-word checks of every proven statement, against the brute-force oracles.

Each check takes a :class:`Case` and raises :class:`Falsified` on a
counterexample. ``run_checks`` drives them over a corpus and tallies results
per check name.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable

from . import oracle
from .arch import (
    arch_factorize,
    arch_factorize_seeded,
    concat_growth,
    longest_removable_prefix,
    universality_index,
)
from .circular import circular_index, classify
from .errors import Falsified
from .powers import build_profile, chain_report, descending_bound, growth_at, query_universality
from .words import Word, alph, conjugate, letter_set, reverse


def _expect(claim, w, expected, actual):
    if expected != actual:
        raise Falsified(claim, str(w), expected, actual)


def _popcount(mask):
    return bin(mask).count("1")


class Case:
    """One corpus word with lazily computed shared data."""

    def __init__(self, w: Word, horizon: int = 30, budget: oracle.Budget = oracle.DEFAULT_BUDGET, partner: Word | None = None):
        self.w = w
        self.horizon = max(horizon, 2 * w.sigma + 2)
        self.budget = budget
        self.partner = partner

    @property
    def k(self):
        return self.series[1][0]

    @property
    def sigma(self):
        return self.w.sigma

    @cached_property
    def profile(self):
        return build_profile(self.w)

    @cached_property
    def series(self):
        """``(iota(w^n), len(r(w^n)))`` for ``n = 0..horizon`` from the oracle."""
        return oracle.power_series_oracle(self.w, self.horizon, self.budget)

    @cached_property
    def growth(self):
        """Oracle growth, ``growth[s]`` for ``s = 1..horizon`` (index 0 unused)."""
        iotas = [i for i, _ in self.series]
        return [None] + [iotas[s] - iotas[s - 1] for s in range(1, len(iotas))]

    @cached_property
    def alfrem(self):
        n = len(self.w)
        letters = self.w.letters
        return [letter_set(set(letters[n - length:])) for _, length in self.series]

    @cached_property
    def zeta(self):
        return oracle.zeta_oracle(self.w, self.budget)

    @cached_property
    def circular(self):
        return circular_index(self.w, self.profile)

    def zeta_power(self, s):
        if s == 0:
            return 0
        return oracle.zeta_oracle(Word(self.w.letters * s, self.w.alphabet), self.budget)

    @cached_property
    def zeta_growth(self):
        """Oracle circular growth for ``s = 1..sigma`` (index 0 unused)."""
        zs = [self.zeta_power(s) for s in range(self.sigma + 1)]
        return [None] + [zs[s] - zs[s - 1] for s in range(1, self.sigma + 1)]

    @cached_property
    def remainders_settle(self):
        """Whether the oracle remainders are constant over the last ``sigma + 1`` powers."""
        tail = [length for _, length in self.series[-(self.sigma + 1):]]
        return len(set(tail)) == 1


def check_arches(c: Case):
    w = c.w
    fact = arch_factorize(w)
    full = w.alphabet.full
    rebuilt = tuple(x for a in fact.arches for x in a.letters) + fact.remainder.letters
    _expect("arches and remainder rebuild the word", w, w.letters, rebuilt)
    for i, a in enumerate(fact.arches):
        _expect("every arch holds the whole alphabet", w, full, alph(a))
        _expect("arch minus its last letter misses a letter", w, True, alph(a[:-1]) != full)
        _expect("modus letter ends its arch", w, a.letters[-1], fact.modus.letters[i])
    _expect("remainder misses a letter", w, True, alph(fact.remainder) != full)
    _expect("arch count is the universality index", w, fact.k, universality_index(w))


def check_iota_definition(c: Case):
    _expect("iota equals the definitional index", c.w, oracle.iota_oracle(c.w, c.budget), universality_index(c.w))


def check_reversal(c: Case):
    _expect("iota(w) = iota(reverse(w))", c.w, universality_index(c.w), universality_index(reverse(c.w)))


def check_removable_prefix(c: Case):
    w, k = c.w, universality_index(c.w)
    p = longest_removable_prefix(w)
    _expect("removable prefix is a prefix", w, w.letters[: len(p)], p.letters)
    _expect("removing the prefix keeps iota", w, k, universality_index(w[len(p):]))
    _expect("one more letter drops iota by one", w, k - 1, universality_index(w[len(p) + 1:]))


def check_concat_growth(c: Case):
    w = c.w
    partners = [w, reverse(w)] + ([c.partner] if c.partner is not None else [])
    for u in partners:
        predicted, bonus = concat_growth(w, u)
        actual = len(oracle.naive_arches(w.letters + u.letters, w.sigma))
        _expect(f"concat growth prediction for u={u}", w, actual, predicted)


def check_seeded(c: Case):
    w = c.w
    full = w.alphabet.full
    for seed in range(full):
        members = [i for i in range(w.sigma) if seed >> i & 1]
        seeded = arch_factorize_seeded(seed, w)
        for u in (members, members[::-1] * 2):
            letters = tuple(u) + w.letters
            ends = oracle.naive_arches(letters, w.sigma)
            start = ends[-1] if ends else 0
            _expect(f"seeded arch count for seed {members}", w, len(ends), seeded.arches)
            if seeded.closed:
                _expect(f"seeded remainder for seed {members}", w, letters[start:], w.letters[seeded.remainder_start:])


def check_zeta(c: Case):
    w, k = c.w, c.k
    _expect("zeta equals the best rotation", w, c.zeta, c.circular.zeta)
    _expect("k <= zeta <= k + 1", w, True, k <= c.zeta <= k + 1)
    if c.circular.witness_conjugate is not None:
        v = conjugate(w, c.circular.witness_conjugate)
        _expect("witness conjugate reaches k + 1", w, k + 1, len(oracle.naive_arches(v.letters, w.sigma)))


def check_power_queries(c: Case):
    w, p = c.w, c.profile
    for n, (iota, length) in enumerate(c.series):
        _expect(f"iota(w^{n}) by constant-time query", w, iota, query_universality(p, n))
        _expect(f"|r(w^{n})| from the profile", w, length, p.remainder_length_at(n))


def check_power_bounds(c: Case):
    w, k = c.w, c.k
    for s, (iota, _) in enumerate(c.series):
        _expect(f"sk <= iota(w^{s}) <= sk + s - 1", w, True, s * k <= iota <= max(s * k + s - 1, 0))
    for s in range(1, c.horizon + 1):
        _expect(f"growth at {s} is k or k + 1", w, True, c.growth[s] in (k, k + 1))
    _expect("growth at 1 is k", w, k, c.growth[1])


def check_growth_criterion(c: Case):
    w, k = c.w, c.k
    full = w.alphabet.full
    rev = w.letters[::-1]
    ends = oracle.naive_arches(rev, w.sigma)
    rrev = letter_set(set(rev[ends[-1] if ends else 0:]))
    for s in range(1, c.horizon + 1):
        predicted = k + 1 if c.alfrem[s - 1] | rrev == full else k
        _expect(f"growth at {s} from remainder letters", w, c.growth[s], predicted)
        _expect(f"growth_at({s})", w, c.growth[s], growth_at(c.profile, s))


def check_periodicity(c: Case):
    w, sigma = c.w, c.sigma
    s, t = c.profile.anchors
    _expect("anchors lie in [0, sigma]", w, True, 0 <= s < t <= sigma)
    _expect("anchor letter sets agree", w, c.alfrem[s], c.alfrem[t])
    lengths = [length for _, length in c.series]
    for i in range(1, c.horizon - t + 1):
        _expect(f"r(w^{s + i}) = r(w^{t + i})", w, lengths[s + i], lengths[t + i])
        _expect(f"growth at {s + i} equals growth at {t + i}", w, c.growth[s + i], c.growth[t + i])
    _expect("at most sigma distinct remainder letter sets", w, True, len(set(c.alfrem)) <= sigma)
    last = c.horizon
    pairs_upto = 2 * sigma + 2
    for a in range(pairs_upto + 1):
        for b in range(a + 1, pairs_upto + 1):
            if c.alfrem[a] != c.alfrem[b]:
                continue
            span = range(1, last - b + 1)
            _expect(f"letter sets repeat after {a}, {b}", w, [c.alfrem[a + i] for i in span], [c.alfrem[b + i] for i in span])
            _expect(f"remainders repeat after {a}, {b}", w, [lengths[a + i] for i in span], [lengths[b + i] for i in span])


def check_suffix_direction(c: Case):
    w, k = c.w, c.k
    lengths = [length for _, length in c.series]
    for s in range(c.horizon):
        if lengths[s] == lengths[s + 1]:
            continue
        g = c.growth[s + 1]
        # both remainders are suffixes of w^(s+1), so suffix order is length order
        _expect(f"growth k iff r(w^{s}) is a proper suffix of r(w^{s + 1})", w, g == k, lengths[s] < lengths[s + 1])
        if c.alfrem[s] != c.alfrem[s + 1]:
            ascending = c.alfrem[s] & ~c.alfrem[s + 1] == 0
            _expect(f"growth k iff letter sets ascend at {s}", w, g == k, ascending)


def check_chains(c: Case):
    w, sigma = c.w, c.sigma
    chain = chain_report(c.profile)
    _expect("strict ascending chain length <= sigma", w, True, chain.longest_ascending <= sigma)
    _expect("strict descending chain length <= sigma - 1", w, True, chain.longest_descending <= descending_bound(sigma))
    if chain.longest_ascending == sigma:
        ell = chain.ascending_start
        sizes = [_popcount(c.alfrem[s]) for s in range(ell, ell + sigma)]
        _expect("full ascending chain grows one letter per step", w, list(range(sigma)), sizes)
    growth_settles = len(set(c.growth[-(sigma + 1):])) == 1
    _expect("remainders eventually constant iff growth is", w, c.remainders_settle, growth_settles)
    _expect("chain report eventual constancy", w, c.remainders_settle, chain.eventually_constant)


def check_growth_k_window(c: Case):
    w, k = c.w, c.k
    if all(c.growth[s] == k for s in range(1, c.sigma + 1)):
        _expect("growth k on [1, sigma] persists", w, [k] * c.horizon, c.growth[1:])


def check_zeta_plus_one(c: Case):
    w, k, sigma = c.w, c.k, c.sigma
    if sigma < 2:
        return
    a = c.zeta == k + 1
    b = all(c.growth[s] == k + 1 for s in range(2, sigma + 1))
    b_all = all(c.growth[s] == k + 1 for s in range(2, c.horizon + 1))
    _expect("growth k+1 on [2, sigma] iff zeta = k + 1", w, a, b)
    _expect("growth k+1 on [2, horizon] iff zeta = k + 1", w, a, b_all)
    if a:
        _expect("zeta = k + 1 makes remainders eventually constant", w, True, c.remainders_settle)


def check_power_formulas(c: Case):
    w, k, sigma = c.w, c.k, c.sigma
    iotas = [i for i, _ in c.series]
    if c.zeta == k + 1 and sigma >= 2:
        _expect("zeta = k + 1 gives iota(w^s) = sk + s - 1", w, [s * k + s - 1 for s in range(1, c.horizon + 1)], iotas[1:])
    if all(c.zeta_growth[t] == k for t in range(1, sigma)):
        _expect("circular growth k gives iota(w^s) = sk", w, [s * k for s in range(1, c.horizon + 1)], iotas[1:])


def check_uniform_growth(c: Case):
    w, k, sigma = c.w, c.k, c.sigma
    lhs = all(g == k for g in c.growth[1:])
    rhs = all(c.zeta_growth[t] == k for t in range(1, sigma))
    _expect("growth k everywhere iff circular growth k on [1, sigma - 1]", w, lhs, rhs)
    _expect("uniform circular flag", w, rhs, c.circular.uniform_k_circular)
    if lhs:
        _expect("growth k everywhere gives circular growth k", w, [k] * sigma, c.zeta_growth[1:])


def check_single_occurrence(c: Case):
    w, k = c.w, c.k
    fact = arch_factorize(w)
    pieces = fact.arches + [fact.remainder]
    if all(len(set(p.letters)) == len(p) for p in pieces):
        for s in range(1, 4):
            _expect(f"zeta(w^{s}) = {s}k for single-occurrence arches", w, s * k, c.zeta_power(s))


def check_classify(c: Case):
    verdict = classify(c.w, horizon=c.horizon)
    _expect("classify agrees with oracle zeta", c.w, c.zeta == c.k + 1, verdict.zeta_plus_one)


CHECKS: dict[str, Callable[[Case], None]] = {
    "arch-factorisation": check_arches,
    "iota-definition": check_iota_definition,
    "reversal-symmetry": check_reversal,
    "removable-prefix": check_removable_prefix,
    "concat-growth": check_concat_growth,
    "seeded-remainder": check_seeded,
    "zeta-oracle": check_zeta,
    "power-queries": check_power_queries,
    "power-bounds": check_power_bounds,
    "growth-criterion": check_growth_criterion,
    "periodicity": check_periodicity,
    "suffix-direction": check_suffix_direction,
    "chain-bounds": check_chains,
    "growth-k-window": check_growth_k_window,
    "zeta-plus-one-equivalence": check_zeta_plus_one,
    "power-formulas": check_power_formulas,
    "uniform-growth-equivalence": check_uniform_growth,
    "single-occurrence-arches": check_single_occurrence,
    "classify": check_classify,
}


@dataclass
class VerifyReport:
    passed: dict[str, int] = field(default_factory=lambda: {name: 0 for name in CHECKS})
    failed: dict[str, int] = field(default_factory=lambda: {name: 0 for name in CHECKS})
    failures: list[Falsified] = field(default_factory=list)
    words: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def run_checks(corpus: Iterable[Word], horizon: int = 30, budget: oracle.Budget = oracle.DEFAULT_BUDGET, names=None, max_failures: int = 50) -> VerifyReport:
    names = list(CHECKS) if names is None else list(names)
    report = VerifyReport()
    previous = None
    for w in corpus:
        partner = previous if previous is not None and previous.alphabet == w.alphabet else None
        case = Case(w, horizon, budget, partner=partner)
        previous = w
        report.words += 1
        for name in names:
            try:
                CHECKS[name](case)
            except Falsified as exc:
                report.failed[name] += 1
                if len(report.failures) < max_failures:
                    report.failures.append(exc)
            else:
                report.passed[name] += 1
    return report
