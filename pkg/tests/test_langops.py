import pytest

from conftest import AB, dfa_for_word, dfa_for_words
from langorbits.automata import (
    Alphabet,
    Dfa,
    accepts_epsilon,
    equivalent,
    is_empty,
    is_universal,
    words_up_to,
)
from langorbits.langops import InfiniteLanguageError, apply, apply_word, minimal_alphabet
from langorbits import corpus


def lang(dfa, maxlen=4):
    return set(words_up_to(dfa, maxlen))


def test_star_of_empty_is_epsilon():
    empty = Dfa(AB, 0, frozenset(), ((0, 0),))
    k = apply("k", empty)
    assert accepts_epsilon(k)
    assert lang(k) == {""}


def test_positive_closure_keeps_epsilon_behavior():
    ab = dfa_for_word("ab")
    e = apply("e", ab)
    assert not accepts_epsilon(e)
    assert e.accepts("abab")
    # with the empty word present, positive closure equals the star
    with_eps = dfa_for_words(["", "ab"])
    assert equivalent(apply("e", with_eps), apply("k", with_eps))


def test_affix_closures_of_single_word():
    ab = dfa_for_word("ab")
    assert lang(apply("p", ab)) == {"", "a", "ab"}
    assert lang(apply("s", ab)) == {"", "b", "ab"}
    assert lang(apply("f", ab)) == {"", "a", "b", "ab"}
    assert lang(apply("w", ab)) == {"", "a", "b", "ab"}


def test_subwords_scatter():
    # "aa" is a scattered subsequence of "aba" but not a factor
    aba = dfa_for_word("aba")
    assert apply("w", aba).accepts("aa")
    assert not apply("f", aba).accepts("aa")


def test_reversal():
    assert lang(apply("r", dfa_for_word("ab"))) == {"ba"}


def test_proper_prefix_chain_on_unary_family():
    for n in range(3, 8):
        ln = corpus.unary_ln(n).dfa
        smaller = corpus.unary_ln(n - 1).dfa
        assert equivalent(apply("q", ln), smaller)


def test_prefix_row_of_figure1():
    fig1 = corpus.figure1()
    p = apply("p", fig1.dfa)
    expected = Dfa(fig1.dfa.alphabet, fig1.dfa.initial,
                   fig1.expected["rows:pc"]["p"], fig1.dfa.delta)
    assert equivalent(p, expected)


def test_iterated_star_prefix_grows():
    ab = dfa_for_word("ab")
    assert not apply_word("pk", ab).accepts("aab")
    assert apply_word("pkpk", ab).accepts("aab")


def test_apply_word_empty_is_identity():
    dfa = dfa_for_words(["ab", "b"])
    assert equivalent(apply_word("", dfa), dfa)


def test_star_of_factors_is_alphabet_star():
    kf = apply_word("kf", dfa_for_word("ab"))
    assert is_universal(kf)


def test_prefix_complement_suffix_saturates():
    assert is_universal(apply_word("pcs", dfa_for_word("ab")))


def test_exponentiation_on_finite_language():
    t = apply("t", dfa_for_word("ab"))
    assert t.accepts("abab") and t.accepts("ababab")
    assert not t.accepts("aba")
    assert not accepts_epsilon(t)


def test_fractional_exponentiation_on_finite_language():
    n = apply("n", dfa_for_word("ab"))
    assert n.accepts("aba") and n.accepts("ab") and n.accepts("ababa")
    assert not n.accepts("abb")


@pytest.mark.parametrize("op", ["t", "n"])
def test_exponentiation_rejects_infinite_languages(op):
    star = Dfa(AB, 0, frozenset({0}), ((0, 0),))
    with pytest.raises(InfiniteLanguageError):
        apply(op, star)


def test_minimal_alphabet():
    empty = Dfa(AB, 0, frozenset(), ((0, 0),))
    assert minimal_alphabet(empty) == frozenset()
    abc = Alphabet("abc")
    ab_over_abc = dfa_for_word("ab", abc)
    assert minimal_alphabet(ab_over_abc) == frozenset("ab")
    assert minimal_alphabet(corpus.figure2_witness().dfa) == frozenset("abcdefgh")
