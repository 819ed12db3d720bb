import pytest
from hypothesis import given
import hypothesis.strategies as st

from univpow.arch import (
    arch_factorize,
    arch_factorize_seeded,
    alph_remainder,
    concat_growth,
    longest_removable_prefix,
    modus,
    remainder,
    remainder_of_reversal,
    universality_index,
)
from univpow.errors import NotUniversalError
from univpow.oracle import naive_arches
from univpow.words import Alphabet, alph, make_word, reverse

from .strategies import full_words, words_over


def materialized_remainder(letters, sigma):
    ends = naive_arches(letters, sigma)
    return tuple(letters[ends[-1] if ends else 0:]), len(ends)


def test_three_arch_example():
    fact = arch_factorize(make_word("abccbbacaaaba"))
    assert [str(a) for a in fact.arches] == ["abc", "cbba", "caaab"]
    assert str(fact.remainder) == "a"
    assert str(fact.modus) == "cab"
    assert fact.k == 3
    assert fact.render() == "(abc)(cbba)(caaab)|a"


def test_two_arch_example():
    fact = arch_factorize(make_word("babccaabc"))
    assert fact.render() == "(babc)(caab)|c"
    assert fact.arch_ends == (4, 8)


def test_empty_word():
    fact = arch_factorize(make_word("", "ab"))
    assert fact.k == 0
    assert len(fact.remainder) == 0
    assert fact.render() == "|"


@pytest.mark.parametrize(
    "text, alphabet, k",
    [("anana", "an", 2), ("banana", "abn", 1), ("babccaabc", None, 2), ("aaa", None, 3), ("ab", "abc", 0)],
)
def test_universality_index(text, alphabet, k):
    assert universality_index(make_word(text, alphabet)) == k


def test_remainder_projections():
    w = make_word("babccaabc")
    assert str(remainder(w)) == "c"
    # reverse(w) = cbaaccbab = (cba)(accb)|ab
    assert str(remainder_of_reversal(w)) == str(arch_factorize(reverse(w)).remainder) == "ab"
    assert str(modus(make_word("abccbbacaaaba"))) == "cab"


def test_removable_prefix_nabananab():
    w = make_word("nabananab")
    p = longest_removable_prefix(w)
    assert str(p) == "na"
    assert universality_index(w[2:]) == 2
    assert universality_index(w[3:]) == 1


def test_removable_prefix_single_arch():
    assert len(longest_removable_prefix(make_word("ab"))) == 0


def test_removable_prefix_needs_an_arch():
    with pytest.raises(NotUniversalError):
        longest_removable_prefix(make_word("ab", "abc"))


@given(full_words())
def test_removable_prefix_is_longest(w):
    k = universality_index(w)
    p = longest_removable_prefix(w)
    assert len(p) < len(w)
    assert universality_index(w[len(p):]) == k
    # brute force over every prefix length
    keep = [j for j in range(len(w) + 1) if universality_index(w[j:]) == k]
    assert max(keep) == len(p)
    assert universality_index(w[len(p) + 1:]) == k - 1


@given(full_words())
def test_factorisation_invariants(w):
    fact = arch_factorize(w)
    full = w.alphabet.full
    assert sum(map(len, fact.arches)) + len(fact.remainder) == len(w)
    assert tuple(x for a in fact.arches for x in a.letters) + fact.remainder.letters == w.letters
    for a in fact.arches:
        assert alph(a) == full
        assert a.letters[-1] not in a.letters[:-1]
        for j in range(len(a)):
            assert alph(a[:j]) != full
    assert alph(fact.remainder) != full
    assert fact.remainder_mask == alph(fact.remainder) == alph_remainder(w)
    assert [a.letters[-1] for a in fact.arches] == list(fact.modus.letters)
    assert fact.k == universality_index(w) == len(naive_arches(w.letters, w.sigma))


@given(full_words())
def test_iota_reversal_symmetric(w):
    assert universality_index(w) == universality_index(reverse(w))


def test_seeded_examples():
    w = make_word("babccaabc")
    seeded = arch_factorize_seeded(0b100, w)
    assert seeded.closed
    assert seeded.first_arch_end == 2
    assert seeded.arches == 3
    assert seeded.remainder_start == len(w)
    assert materialized_remainder((2,) + w.letters, 3) == ((), 3)

    w = make_word("acabb")
    seeded = arch_factorize_seeded(0b011, w)
    assert seeded.first_arch_end == 2
    assert w.letters[seeded.remainder_start:] == make_word("abb", w.alphabet).letters
    assert materialized_remainder((0, 1) + w.letters, 3)[0] == w.letters[2:]


def test_seed_empty_is_plain_factorisation():
    w = make_word("abccbbacaaaba")
    seeded = arch_factorize_seeded(0, w)
    fact = arch_factorize(w)
    assert (seeded.arches, seeded.remainder_start) == (fact.k, fact.remainder_start)


def test_seed_full_alphabet_rejected():
    with pytest.raises(ValueError):
        arch_factorize_seeded(0b111, make_word("abc"))


def test_seed_that_never_closes():
    w = make_word("aab", "abc")
    seeded = arch_factorize_seeded(0b001, w)
    assert not seeded.closed
    assert seeded.first_arch_end is None
    assert seeded.remainder_mask == 0b011


@given(full_words(max_sigma=4), st.data())
def test_seeded_matches_any_materialized_prefix(w, data):
    seed = data.draw(st.integers(0, w.alphabet.full - 1))
    members = [i for i in range(w.sigma) if seed >> i & 1]
    u = data.draw(st.lists(st.sampled_from(members), min_size=len(members), max_size=6)) if members else []
    u = sorted(set(members)) + u
    seeded = arch_factorize_seeded(seed, w)
    rem, count = materialized_remainder(tuple(u) + w.letters, w.sigma)
    assert seeded.arches == count
    assert seeded.closed
    assert w.letters[seeded.remainder_start:] == rem


def test_concat_growth_examples():
    w = make_word("babccaabc")
    assert concat_growth(w, w) == (5, True)
    assert universality_index(w + w) == 5

    w = make_word("acabb")
    assert concat_growth(w, w) == (2, False)
    assert len(naive_arches(w.letters * 2, 3)) == 2

    w, u = make_word("abcabc"), make_word("cab")
    assert concat_growth(w, u) == (3, False)


ABC = Alphabet.canonical(3)


@given(words_over(ABC, 16), words_over(ABC, 16))
def test_concat_growth_matches_factorisation(w, u):
    predicted, bonus = concat_growth(w, u)
    assert predicted == universality_index(w + u)
    assert bonus == (alph(remainder(w)) | alph(remainder_of_reversal(u)) == ABC.full)
