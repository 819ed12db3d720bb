"""Alphabets, words and scattered-factor primitives.

Letters are stored as dense indices ``0..sigma-1`` into an :class:`Alphabet`;
sets of letters are plain ``int`` bitmasks with bit ``i`` standing for the
``i``-th symbol.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .errors import AlphabetError, BudgetExceeded

LetterSet = int

DEFAULT_MAX_CANDIDATES = 2**22
DEFAULT_MAX_POWER_LENGTH = 10**7


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self):
        if len(self.symbols) == 0:
            raise AlphabetError("an alphabet needs at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise AlphabetError(f"repeated symbols in alphabet {self.symbols!r}")

    @classmethod
    def from_text(cls, text: Iterable[str]) -> Alphabet:
        return cls(tuple(sorted(set(text))))

    @classmethod
    def canonical(cls, sigma: int) -> Alphabet:
        """The first ``sigma`` letters starting at ``a``."""
        return cls(tuple(chr(ord("a") + i) for i in range(sigma)))

    @property
    def size(self) -> int:
        return len(self.symbols)

    @property
    def full(self) -> LetterSet:
        return (1 << len(self.symbols)) - 1

    @cached_property
    def index(self) -> dict[str, int]:
        return {c: i for i, c in enumerate(self.symbols)}

    def __str__(self):
        return "".join(self.symbols)


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    alphabet: Alphabet = field(repr=False)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        symbols = self.alphabet.symbols
        return "".join(symbols[c] for c in self.letters)

    def __repr__(self):
        return f"Word({str(self)!r}, sigma={self.alphabet.size})"

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item], self.alphabet)
        return self.letters[item]

    def __add__(self, other: Word) -> Word:
        _same_alphabet(self, other)
        return Word(self.letters + other.letters, self.alphabet)

    @property
    def sigma(self) -> int:
        return self.alphabet.size


def make_word(text: Sequence[str], alphabet: Alphabet | str | None = None) -> Word:
    """Build a word from glyphs.

    Without an alphabet the distinct letters of ``text`` are used, sorted by
    code point, so equal texts always share an identical alphabet.
    """
    if alphabet is None:
        if len(text) == 0:
            raise AlphabetError("cannot infer an alphabet from the empty word")
        alphabet = Alphabet.from_text(text)
    elif isinstance(alphabet, str):
        alphabet = Alphabet(tuple(alphabet))
    index = alphabet.index
    try:
        letters = tuple(map(index.__getitem__, text))
    except KeyError as exc:
        pos = next(i for i, c in enumerate(text) if c not in index)
        raise AlphabetError(
            f"letter {exc.args[0]!r} at position {pos + 1} is not in alphabet {str(alphabet)!r}"
        ) from None
    return Word(letters, alphabet)


def _same_alphabet(u: Word, w: Word):
    if u.alphabet != w.alphabet:
        raise AlphabetError(f"alphabet mismatch: {str(u.alphabet)!r} vs {str(w.alphabet)!r}")


def letter_set(letters: Iterable[int]) -> LetterSet:
    mask = 0
    for c in letters:
        mask |= 1 << c
    return mask


def alph(w: Word) -> LetterSet:
    return letter_set(set(w.letters))


def format_letters(mask: LetterSet, alphabet: Alphabet) -> str:
    return "".join(c for i, c in enumerate(alphabet.symbols) if mask >> i & 1)


def is_scattered_factor(u: Word, w: Word) -> bool:
    _same_alphabet(u, w)
    # greedy leftmost embedding
    it = iter(w.letters)
    return all(c in it for c in u.letters)


def scatfact_k(w: Word, k: int, max_candidates: int = DEFAULT_MAX_CANDIDATES) -> list[Word]:
    """All scattered factors of ``w`` of length ``k``, in lexicographic order."""
    sigma = w.sigma
    if sigma**k > max_candidates:
        raise BudgetExceeded("scatfact_k candidates", sigma**k, max_candidates)
    if k > len(w):
        return []
    result = []
    for cand in product(range(sigma), repeat=k):
        u = Word(cand, w.alphabet)
        if is_scattered_factor(u, w):
            result.append(u)
    return result


def reverse(w: Word) -> Word:
    return Word(w.letters[::-1], w.alphabet)


def conjugate(w: Word, i: int) -> Word:
    """Rotate left by ``i``: ``w[i:] + w[:i]``."""
    if not 0 <= i <= len(w):
        raise ValueError(f"rotation offset {i} outside [0, {len(w)}]")
    return Word(w.letters[i:] + w.letters[:i], w.alphabet)


def power(w: Word, s: int, max_length: int = DEFAULT_MAX_POWER_LENGTH) -> Word:
    if s < 0:
        raise ValueError("power exponent must be non-negative")
    if s * len(w) > max_length:
        raise BudgetExceeded("power length", s * len(w), max_length)
    return Word(w.letters * s, w.alphabet)
