import logging

import pytest
from hypothesis import given

from univpow import circular
from univpow.arch import arch_factorize, universality_index
from univpow.circular import MIXED, PLUS_ONE, UNIFORM, circular_index, classify, zeta_growth
from univpow.errors import BudgetExceeded, NotUniversalError
from univpow.oracle import power_oracle, zeta_oracle
from univpow.powers import build_profile
from univpow.words import conjugate, make_word, power

from .strategies import full_words


def test_zeta_babccaabc(w_babc):
    analysis = circular_index(w_babc)
    assert (analysis.k, analysis.zeta) == (2, 2)
    assert analysis.witness_conjugate is None


def test_zeta_aabb_with_witness():
    w = make_word("aabb")
    analysis = circular_index(w)
    assert (analysis.k, analysis.zeta) == (1, 2)
    assert analysis.uniform_plus_one
    v = conjugate(w, analysis.witness_conjugate)
    assert str(v) in {"abba", "baab"}
    assert universality_index(v) == 2


def test_zeta_ab():
    analysis = circular_index(make_word("ab"))
    # rotations ab, ba both have one arch
    assert analysis.zeta == 1 == max(universality_index(make_word(v, "ab")) for v in ("ab", "ba"))


def test_zeta_single_letter():
    analysis = circular_index(make_word("aaa"))
    assert analysis.zeta == 3 == zeta_oracle(make_word("aaa"))


def test_zeta_needs_an_arch():
    with pytest.raises(NotUniversalError):
        circular_index(make_word("ab", "abc"))


@given(full_words(max_sigma=4, max_len=11))
def test_zeta_matches_rotation_oracle(w):
    analysis = circular_index(w)
    assert analysis.zeta == zeta_oracle(w)
    assert analysis.k <= analysis.zeta <= analysis.k + 1
    if analysis.witness_conjugate is not None:
        assert universality_index(conjugate(w, analysis.witness_conjugate)) == analysis.k + 1


@given(full_words(min_sigma=2, max_sigma=4, max_len=11))
def test_plus_one_makes_remainders_constant(w):
    analysis = circular_index(w)
    if analysis.zeta == analysis.k + 1:
        assert build_profile(w).period == 1


def test_zeta_growth_squares():
    w = make_word("aabbcc")
    assert zeta_growth(w, 1) == 1
    assert zeta_growth(w, 2) == 2


def test_zeta_growth_first_step_is_zeta(w_babc):
    assert zeta_growth(w_babc, 1) == circular_index(w_babc).zeta
    expected = zeta_oracle(power(w_babc, 2)) - zeta_oracle(w_babc)
    assert zeta_growth(w_babc, 2) == expected


def test_zeta_growth_budget():
    with pytest.raises(BudgetExceeded):
        zeta_growth(make_word("abc"), 10, max_length=20)
    with pytest.raises(ValueError):
        zeta_growth(make_word("abc"), 0)


def test_classify_aabb():
    w = make_word("aabb")
    verdict = classify(w)
    assert verdict.label == PLUS_ONE
    assert [power_oracle(w, s)[0] for s in range(1, 6)] == [2 * s - 1 for s in range(1, 6)]


def test_classify_acabb():
    w = make_word("acabb")
    verdict = classify(w)
    assert verdict.label == UNIFORM
    assert [power_oracle(w, s)[0] for s in range(1, 6)] == list(range(1, 6))
    assert [zeta_oracle(power(w, s)) - zeta_oracle(power(w, s - 1)) if s > 1 else zeta_oracle(w) for s in (1, 2)] == [1, 1]


def test_classify_babccaabc_is_mixed(w_babc):
    verdict = classify(w_babc)
    assert verdict.label == MIXED
    assert not verdict.zeta_plus_one
    assert power_oracle(w_babc, 2)[0] == 2 * 2 + 1


@given(full_words(max_sigma=3, max_len=9))
def test_classify_never_falsified(w):
    verdict = classify(w)
    assert verdict.label in {PLUS_ONE, UNIFORM, MIXED}


@given(full_words(max_sigma=3, max_len=9))
def test_single_occurrence_arches_grow_uniformly(w):
    fact = arch_factorize(w)
    pieces = fact.arches + [fact.remainder]
    if all(len(set(p.letters)) == len(p) for p in pieces):
        for s in range(1, 4):
            assert zeta_oracle(power(w, s)) == s * fact.k


def test_witness_fallback_logs(monkeypatch, caplog):
    w = make_word("aabb")
    profile = build_profile(w)
    fake = type(profile)(**{**profile.__dict__, "anchors": (0, 2)})
    with caplog.at_level(logging.WARNING):
        offset = circular._witness_offset(fake)
    assert universality_index(conjugate(w, offset)) == 2
    assert "scanning conjugates" in caplog.text
