"""Universality of powers ``w^n``.

Every remainder ``r(w^s)`` is a suffix of ``w`` (a longer one would contain a
whole copy of ``w`` and with it an arch), so a profile stores remainders as
suffix lengths. The sets of letters in those remainders form a chain under
inclusion with at most ``sigma`` distinct members; the first repeated set fixes
the period of the whole growth sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .arch import _scan
from .errors import Falsified, NotUniversalError
from .words import LetterSet, Word, format_letters

ASCENDING = "ascending"
DESCENDING = "descending"
EQUAL = "equal"


@dataclass(frozen=True)
class PowerProfile:
    """Per-power data of ``w^s`` for ``s = 0..horizon``.

    ``growth[i]`` is the growth at power ``i + 1``; all other tables are
    indexed by the power itself. ``anchors = (s, t)`` is the first pair with
    equal remainder letter sets, and the tables run one step past ``t``.
    """

    word: Word
    k: int
    rrev_letters: LetterSet
    remainder_lengths: tuple[int, ...]
    alfrem: tuple[LetterSet, ...]
    growth: tuple[int, ...]
    iota_table: tuple[int, ...]
    anchors: tuple[int, int]

    @property
    def period(self) -> int:
        return self.anchors[1] - self.anchors[0]

    @property
    def horizon(self) -> int:
        return len(self.iota_table) - 1

    @property
    def remainders(self) -> list[Word]:
        n = len(self.word)
        return [self.word[n - length:] for length in self.remainder_lengths]

    def alfrem_at(self, s: int) -> LetterSet:
        """Remainder letter set of ``w^s`` for any ``s >= 0``."""
        a, t = self.anchors
        if s > t:
            s = a + (s - a) % (t - a)
        return self.alfrem[s]

    def remainder_length_at(self, s: int) -> int:
        # remainders themselves only repeat from a + 1 on
        a, t = self.anchors
        if s > t + 1:
            s = a + 1 + (s - a - 1) % (t - a)
        return self.remainder_lengths[s]

    def to_dict(self) -> dict:
        alphabet = self.word.alphabet
        return {
            "word": str(self.word),
            "sigma": alphabet.size,
            "k": self.k,
            "anchors": list(self.anchors),
            "period": self.period,
            "growth": list(self.growth),
            "remainders": [str(r) for r in self.remainders],
            "alfrem": [format_letters(m, alphabet) for m in self.alfrem],
            "iota_table": list(self.iota_table),
        }


def build_profile(w: Word) -> PowerProfile:
    sigma = w.sigma
    full = w.alphabet.full
    n = len(w)
    k, start, rem, _ = _scan(w.letters, sigma)
    if k == 0:
        raise NotUniversalError(f"{str(w)!r} is not 1-universal over its alphabet")
    rrev = _scan(w.letters[::-1], sigma)[2]

    lengths = [0, n - start]
    alfrem = [0, rem]
    growth = [k]
    iota = [0, k]
    seen = {0: 0}
    anchors = None
    s = 1
    while anchors is None or s <= anchors[1]:
        if anchors is None:
            if alfrem[s] in seen:
                anchors = (seen[alfrem[s]], s)
            else:
                seen[alfrem[s]] = s
        g = k + 1 if alfrem[s] | rrev == full else k
        count, start, rem, _ = _scan(w.letters, sigma, alfrem[s])
        if count != g:
            raise Falsified("growth from remainder letters", str(w), g, count)
        lengths.append(n - start)
        alfrem.append(rem)
        growth.append(g)
        iota.append(iota[-1] + g)
        s += 1
    return PowerProfile(
        word=w,
        k=k,
        rrev_letters=rrev,
        remainder_lengths=tuple(lengths),
        alfrem=tuple(alfrem),
        growth=tuple(growth),
        iota_table=tuple(iota),
        anchors=anchors,
    )


def query_universality(profile: PowerProfile, n: int) -> int:
    """``iota(w^n)`` in constant time."""
    iota = profile.iota_table
    if n < len(iota):
        if n < 0:
            raise ValueError("power must be non-negative")
        return iota[n]
    s, t = profile.anchors
    ell, m = divmod(n - s, t - s)
    return iota[s + m] + ell * (iota[t] - iota[s])


def growth_at(profile: PowerProfile, s: int) -> int:
    if s < 1:
        raise ValueError("growth is defined for powers s >= 1")
    prev = profile.alfrem_at(s - 1)
    full = profile.word.alphabet.full
    return profile.k + 1 if prev | profile.rrev_letters == full else profile.k


@dataclass(frozen=True)
class ChainReport:
    """Inclusion relations between consecutive remainder letter sets.

    ``steps[i]`` compares powers ``i`` and ``i + 1``. Run lengths count sets,
    so a lone set is a chain of length 1; the ``*_start`` fields give the power
    where a longest run begins.
    """

    steps: tuple[str, ...]
    longest_ascending: int
    ascending_start: int
    longest_descending: int
    descending_start: int
    eventually_constant: bool
    perfect_power: int | None

    def to_dict(self) -> dict:
        return {
            "steps": list(self.steps),
            "longest_ascending": self.longest_ascending,
            "longest_descending": self.longest_descending,
            "eventually_constant": self.eventually_constant,
            "perfect_power": self.perfect_power,
        }


def _compare(prev: LetterSet, cur: LetterSet) -> str | None:
    if prev == cur:
        return EQUAL
    if prev & ~cur == 0:
        return ASCENDING
    if cur & ~prev == 0:
        return DESCENDING
    return None


def _longest_run(steps, kind):
    best, best_start = 1, 0
    run, start = 1, 0
    for i, step in enumerate(steps):
        if step == kind:
            if run == 1:
                start = i
            run += 1
            if run > best:
                best, best_start = run, start
        else:
            run = 1
    return best, best_start


def chain_report(profile: PowerProfile) -> ChainReport:
    a, t = profile.anchors
    # two full periods past the pre-period contain every strict run
    last = a + 2 * profile.period
    sets = [profile.alfrem_at(s) for s in range(last + 1)]
    steps = []
    for s in range(1, last + 1):
        step = _compare(sets[s - 1], sets[s])
        if step is None:
            raise Falsified("remainder letter sets are nested", str(profile.word), "comparable", (s - 1, s))
        steps.append(step)
    asc, asc_start = _longest_run(steps, ASCENDING)
    desc, desc_start = _longest_run(steps, DESCENDING)
    perfect = next((s for s in range(1, profile.horizon + 1) if profile.remainder_lengths[s] == 0), None)
    return ChainReport(
        steps=tuple(steps),
        longest_ascending=asc,
        ascending_start=asc_start,
        longest_descending=desc,
        descending_start=desc_start,
        eventually_constant=profile.period == 1,
        perfect_power=perfect,
    )


def descending_bound(sigma: int) -> int:
    # a lone set already has length 1, so sigma = 1 cannot go below 1
    return max(sigma - 1, 1)


@dataclass
class ChainBoundsReport:
    words: int = 0
    max_ascending: int = 0
    max_descending: int = 0
    ascending_witnesses: list[str] = field(default_factory=list)
    descending_witnesses: list[str] = field(default_factory=list)


def verify_chain_bounds(corpus: Iterable[Word], max_witnesses: int = 10) -> ChainBoundsReport:
    """Check the strict-chain length bounds on every word of ``corpus``.

    Ascending runs are bounded by ``sigma`` and descending runs by
    ``sigma - 1``. A longest ascending run of full length must also grow by
    exactly one letter per step starting from the empty set. Witnesses
    attaining each bound are collected in corpus order.
    """
    report = ChainBoundsReport()
    for w in corpus:
        sigma = w.sigma
        profile = build_profile(w)
        chain = chain_report(profile)
        report.words += 1
        if chain.longest_ascending > sigma:
            raise Falsified("ascending chain bound", str(w), f"<= {sigma}", chain.longest_ascending)
        if chain.longest_descending > descending_bound(sigma):
            raise Falsified("descending chain bound", str(w), f"<= {descending_bound(sigma)}", chain.longest_descending)
        if chain.longest_ascending == sigma:
            ell = chain.ascending_start
            sizes = [bin(profile.alfrem_at(s)).count("1") for s in range(ell, ell + sigma)]
            if sizes != list(range(sigma)):
                raise Falsified("ascending chain sizes", str(w), list(range(sigma)), sizes)
            if len(report.ascending_witnesses) < max_witnesses:
                report.ascending_witnesses.append(str(w))
        if chain.longest_descending == sigma - 1 and len(report.descending_witnesses) < max_witnesses:
            report.descending_witnesses.append(str(w))
        report.max_ascending = max(report.max_ascending, chain.longest_ascending)
        report.max_descending = max(report.max_descending, chain.longest_descending)
    return report
