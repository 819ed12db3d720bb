"""Brute-force reference implementations.

Nothing here calls into the arch, power or circular modules: arches are
recounted with a plain set, and small words are checked straight from the
definition of k-universality.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import BudgetExceeded
from .words import Alphabet, Word, power, scatfact_k

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Budget:
    max_candidates: int = 2**22
    max_power_length: int = 10**6
    max_word_length: int = 64
    # total scattered-factor candidates below which the definition is used
    definitional_limit: int = 4096

    def __post_init__(self):
        for name in ("max_candidates", "max_power_length", "max_word_length", "definitional_limit"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


DEFAULT_BUDGET = Budget()


def naive_arches(letters, sigma) -> list[int]:
    """End positions (exclusive) of the greedy arches."""
    ends = []
    seen = set()
    for i, c in enumerate(letters):
        seen.add(c)
        if len(seen) == sigma:
            ends.append(i + 1)
            seen = set()
    return ends


def _definitional_iota(w: Word, budget: Budget) -> int:
    sigma = w.sigma
    k = 0
    while len(scatfact_k(w, k + 1, budget.max_candidates)) == sigma ** (k + 1):
        k += 1
    return k


def iota_oracle(w: Word, budget: Budget = DEFAULT_BUDGET) -> int:
    if len(w) > budget.max_word_length:
        raise BudgetExceeded("iota_oracle word length", len(w), budget.max_word_length)
    sigma = w.sigma
    top = len(w) // sigma + 1
    cost = sum(sigma**j for j in range(1, top + 1)) * max(len(w), 1)
    if cost <= budget.definitional_limit:
        return _definitional_iota(w, budget)
    log.debug("iota_oracle: %r above definitional limit (%d > %d), counting arches", str(w), cost, budget.definitional_limit)
    return len(naive_arches(w.letters, sigma))


def zeta_oracle(w: Word, budget: Budget = DEFAULT_BUDGET, definitional_length: int = 6) -> int:
    """Maximum universality over all rotations of ``w``.

    Rotations of words up to ``definitional_length`` letters go through
    :func:`iota_oracle`; longer ones only have their arches counted.
    """
    if len(w) > budget.max_word_length:
        raise BudgetExceeded("zeta_oracle word length", len(w), budget.max_word_length)
    n = len(w)
    if n == 0:
        return 0
    best = 0
    for i in range(n):
        letters = w.letters[i:] + w.letters[:i]
        if n <= definitional_length:
            best = max(best, iota_oracle(Word(letters, w.alphabet), budget))
        else:
            best = max(best, len(naive_arches(letters, w.sigma)))
    return best


def power_oracle(w: Word, n: int, budget: Budget = DEFAULT_BUDGET) -> tuple[int, Word]:
    """``(iota(w^n), r(w^n))`` by materializing ``w^n``."""
    wn = power(w, n, budget.max_power_length)
    ends = naive_arches(wn.letters, w.sigma)
    start = ends[-1] if ends else 0
    return len(ends), wn[start:]


def power_series_oracle(w: Word, horizon: int, budget: Budget = DEFAULT_BUDGET) -> list[tuple[int, int]]:
    """``(iota(w^n), len(r(w^n)))`` for ``n = 0..horizon`` from one scan of ``w^horizon``.

    Greedy arches of a prefix are the arches of the whole word that end
    inside it, so one factorisation serves every power.
    """
    wn = power(w, horizon, budget.max_power_length)
    ends = naive_arches(wn.letters, w.sigma)
    out = []
    j = 0
    last = 0
    for n in range(horizon + 1):
        stop = n * len(w)
        while j < len(ends) and ends[j] <= stop:
            last = ends[j]
            j += 1
        out.append((j, stop - last))
    return out


def enumerate_words(sigma: int, max_len: int, budget: Budget = DEFAULT_BUDGET) -> Iterator[Word]:
    """Every word over the first ``sigma`` letters that uses all of them.

    Shorter words come first; words of equal length are in lexicographic order.
    """
    if max_len > budget.max_word_length:
        raise BudgetExceeded("enumerate_words length", max_len, budget.max_word_length)
    if sigma**max_len > budget.max_candidates:
        raise BudgetExceeded("enumerate_words candidates", sigma**max_len, budget.max_candidates)
    alphabet = Alphabet.canonical(sigma)
    for length in range(sigma, max_len + 1):
        for letters in product(range(sigma), repeat=length):
            if len(set(letters)) == sigma:
                yield Word(letters, alphabet)
