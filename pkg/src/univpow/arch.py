"""Arch factorisation and the single-word results built on it."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import AlphabetError, NotUniversalError
from .words import LetterSet, Word, reverse


@dataclass(frozen=True)
class ArchFactorisation:
    """Greedy split of ``word`` into arches and a remainder.

    ``arch_ends`` holds the 1-based inclusive end position of every arch, which
    doubles as the slice stop; the remainder is ``word[remainder_start:]``.
    """

    word: Word
    arch_ends: tuple[int, ...]
    remainder_mask: LetterSet

    @property
    def k(self) -> int:
        return len(self.arch_ends)

    @property
    def remainder_start(self) -> int:
        return self.arch_ends[-1] if self.arch_ends else 0

    @cached_property
    def arches(self) -> list[Word]:
        starts = (0,) + self.arch_ends[:-1]
        return [self.word[a:b] for a, b in zip(starts, self.arch_ends)]

    @property
    def remainder(self) -> Word:
        return self.word[self.remainder_start:]

    @property
    def modus(self) -> Word:
        return Word(tuple(self.word.letters[e - 1] for e in self.arch_ends), self.word.alphabet)

    def render(self) -> str:
        return "".join(f"({a})" for a in self.arches) + "|" + str(self.remainder)


@dataclass(frozen=True)
class SeededFactorisation:
    """Factorisation of ``u + w`` for any ``u`` with ``alph(u) == seed``.

    ``arches`` includes the virtual first arch that absorbs ``u``. When
    ``closed`` is false no arch completes and the remainder is ``u + w``
    itself, which is not a suffix of ``w``; ``remainder_start`` is then 0.
    """

    seed: LetterSet
    closed: bool
    first_arch_end: int | None
    arches: int
    remainder_start: int
    remainder_mask: LetterSet


def _scan(letters, sigma, seed=0):
    """Count greedy arches of ``seed + letters``.

    Returns ``(count, remainder_start, remainder_mask, first_arch_end)``.
    """
    full = (1 << sigma) - 1
    bits = [1 << c for c in range(sigma)]
    mask = seed
    count = 0
    last = 0
    first = None
    for i, c in enumerate(letters):
        mask |= bits[c]
        if mask == full:
            count += 1
            mask = 0
            last = i + 1
            if first is None:
                first = last
    return count, last, mask, first


def arch_factorize(w: Word) -> ArchFactorisation:
    full = w.alphabet.full
    bits = [1 << c for c in range(w.sigma)]
    mask = 0
    ends = []
    for i, c in enumerate(w.letters):
        mask |= bits[c]
        if mask == full:
            ends.append(i + 1)
            mask = 0
    return ArchFactorisation(w, tuple(ends), mask)


def arch_factorize_seeded(seed: LetterSet, w: Word) -> SeededFactorisation:
    if seed & w.alphabet.full == w.alphabet.full:
        raise ValueError("seed must be a proper subset of the alphabet")
    count, start, mask, first = _scan(w.letters, w.sigma, seed)
    return SeededFactorisation(seed, count > 0, first, count, start, mask)


def universality_index(w: Word) -> int:
    return _scan(w.letters, w.sigma)[0]


def remainder(w: Word) -> Word:
    return w[_scan(w.letters, w.sigma)[1]:]


def modus(w: Word) -> Word:
    return arch_factorize(w).modus


def remainder_of_reversal(w: Word) -> Word:
    """``r(reverse(w))``, not reversed back."""
    return remainder(reverse(w))


def longest_removable_prefix(w: Word) -> Word:
    """Longest prefix ``p`` whose removal keeps the universality index."""
    count, start, _, _ = _scan(w.letters[::-1], w.sigma)
    if count == 0:
        raise NotUniversalError(f"{w!r} has no arch")
    return w[:len(w) - start]


def concat_growth(w: Word, u: Word) -> tuple[int, bool]:
    """Predict ``iota(w + u)`` from the two factorisations alone.

    The concatenation gains one arch beyond ``iota(w) + iota(u)`` exactly when
    ``r(w)`` and ``r(reverse(u))`` together contain every letter.
    """
    if w.alphabet != u.alphabet:
        raise AlphabetError("concat_growth needs words over the same alphabet")
    kw, _, rem_w, _ = _scan(w.letters, w.sigma)
    ku, _, rem_u, _ = _scan(u.letters[::-1], u.sigma)
    bonus = rem_w | rem_u == w.alphabet.full
    return kw + ku + int(bonus), bonus


def alph_remainder(w: Word) -> LetterSet:
    return _scan(w.letters, w.sigma)[2]

