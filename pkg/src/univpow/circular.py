"""Circular universality and what it says about the growth of powers."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .arch import universality_index
from .errors import Falsified
from .powers import PowerProfile, build_profile, growth_at, query_universality
from .words import DEFAULT_MAX_POWER_LENGTH, Word, conjugate, power

log = logging.getLogger(__name__)

PLUS_ONE = "plus_one"
UNIFORM = "uniform"
MIXED = "mixed"


@dataclass(frozen=True)
class CircularAnalysis:
    """``zeta`` together with the growth patterns that decide it.

    ``witness_conjugate`` is a left-rotation offset whose conjugate reaches
    ``k + 1``; it is only set when ``zeta == k + 1``.
    """

    k: int
    zeta: int
    uniform_plus_one: bool
    uniform_k_circular: bool
    witness_conjugate: int | None


def _growth_window(profile: PowerProfile, lo: int, hi: int):
    return [growth_at(profile, s) for s in range(lo, hi + 1)]


def circular_index(w: Word, profile: PowerProfile | None = None) -> CircularAnalysis:
    if profile is None:
        profile = build_profile(w)
    k, sigma = profile.k, w.sigma
    if sigma == 1:
        # every rotation is w itself; the sigma-th power rule has nothing to test
        return CircularAnalysis(k, k, False, True, None)

    plus_one = query_universality(profile, sigma) == sigma * k + sigma - 1
    # growth k on [1, sigma] already forces growth k everywhere, which in turn
    # is equivalent to the circular growth being k on [1, sigma - 1]
    uniform = all(g == k for g in _growth_window(profile, 1, sigma))
    witness = None
    if plus_one:
        witness = _witness_offset(profile)
    return CircularAnalysis(k, k + 1 if plus_one else k, plus_one, uniform, witness)


def _witness_offset(profile: PowerProfile) -> int:
    w = profile.word
    n = len(w)
    lengths = profile.remainder_lengths
    if profile.period == 1:
        t = next(s for s in range(1, profile.horizon) if lengths[s] == lengths[s + 1])
        return (n - lengths[t]) % n
    # unreachable when zeta = k + 1, since the remainders are then eventually constant
    log.warning("zeta = k + 1 for %r but remainder period is %d; scanning conjugates", str(w), profile.period)
    return next(i for i in range(n) if universality_index(conjugate(w, i)) == profile.k + 1)


def zeta_growth(w: Word, s: int, max_length: int = DEFAULT_MAX_POWER_LENGTH) -> int:
    """``zeta(w^s) - zeta(w^(s-1))``, computed on materialized powers."""
    if s < 1:
        raise ValueError("zeta growth is defined for s >= 1")
    hi = circular_index(power(w, s, max_length)).zeta
    lo = circular_index(power(w, s - 1, max_length)).zeta if s > 1 else 0
    return hi - lo


@dataclass(frozen=True)
class Verdict:
    zeta_plus_one: bool
    growth_plus_one: bool
    circular_uniform: bool

    @property
    def label(self) -> str:
        if self.zeta_plus_one:
            return PLUS_ONE
        if self.circular_uniform:
            return UNIFORM
        return MIXED


def classify(w: Word, horizon: int = 20) -> Verdict:
    """Evaluate the three growth conditions and check what they imply.

    Raises :class:`Falsified` if ``zeta = k + 1`` disagrees with growth
    ``k + 1`` on ``[2, sigma]``, or if either extreme case fails to pin
    ``iota(w^s)`` for ``s <= horizon``.
    """
    profile = build_profile(w)
    k, sigma = profile.k, w.sigma
    analysis = circular_index(w, profile)
    a = analysis.zeta == k + 1
    b = sigma >= 2 and all(g == k + 1 for g in _growth_window(profile, 2, sigma))
    c = all(zeta_growth(w, t) == k for t in range(1, sigma))
    if a != b:
        raise Falsified("zeta = k+1 iff growth k+1 on [2, sigma]", str(w), a, b)
    if c != analysis.uniform_k_circular:
        raise Falsified("circular growth k iff growth k everywhere", str(w), analysis.uniform_k_circular, c)
    for s in range(1, horizon + 1):
        got = query_universality(profile, s)
        if a and got != s * k + s - 1:
            raise Falsified("zeta = k+1 gives iota(w^s) = sk+s-1", str(w), s * k + s - 1, got)
        if c and got != s * k:
            raise Falsified("circular growth k gives iota(w^s) = sk", str(w), s * k, got)
    return Verdict(a, b, c)

