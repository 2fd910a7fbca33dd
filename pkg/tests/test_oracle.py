import random

import pytest

from conftest import AB, dfa_for_word, dfa_for_words
from langorbits.automata import Alphabet, random_dfa
from langorbits.oracle import (
    BoundedLang,
    apply_bounded,
    apply_bounded_word,
    bounded_from_dfa,
    check_identity,
    check_inclusion,
    oracle_agrees_with_automata,
    sample_languages,
    space_for,
    true_fragment,
    truncate,
)

UNARY = Alphabet("a")


def bl(words, maxlen=5, alphabet=AB):
    return BoundedLang(alphabet, maxlen, frozenset(words))


def test_rejects_overlong_words():
    with pytest.raises(ValueError):
        BoundedLang(AB, 2, frozenset({"aaa"}))


def test_complement_is_relative_to_cutoff():
    out = apply_bounded("c", BoundedLang(UNARY, 3, frozenset()))
    assert out.words == {"", "a", "aa", "aaa"}


def test_affixes_exact_on_finite_sets():
    lang = bl({"ab", "b"})
    assert apply_bounded("p", lang).words == {"", "a", "ab", "b"}
    assert apply_bounded("s", lang).words == {"", "b", "ab"}
    assert apply_bounded("q", lang).words == {"", "a"}
    assert apply_bounded("r", lang).words == {"ba", "b"}


def test_closures_by_fixpoint():
    lang = bl({"ab"})
    assert apply_bounded("k", lang).words == {"", "ab", "abab"}
    assert apply_bounded("e", lang).words == {"ab", "abab"}
    assert apply_bounded("t", lang).words == {"ab", "abab"}
    assert apply_bounded("n", lang).words == {"ab", "aba", "abab", "ababa"}


def test_truncation_coherence():
    # computing at a large cutoff then truncating equals computing at the
    # small cutoff on the truncated input; for the affix operations this
    # needs the input inside the smaller cutoff, since truncation would
    # otherwise delete exactly the witnessing longer words
    rng = random.Random(5)
    space = space_for(AB, 6)
    small_space = space_for(AB, 4)
    for _ in range(40):
        lang = space.to_lang(rng.getrandbits(space.size))
        small = truncate(lang, 4)
        for op in "kecrtn":
            big_then_cut = truncate(apply_bounded(op, lang), 4)
            assert big_then_cut == apply_bounded(op, small), op
        short_input = BoundedLang(AB, 6, frozenset(w for w in lang.words if len(w) <= 4))
        for op in "psfwq":
            big_then_cut = truncate(apply_bounded(op, short_input), 4)
            assert big_then_cut == apply_bounded(op, truncate(short_input, 4)), op


def test_proper_prefix_iteration_on_block_language():
    words = frozenset("a" * n + "b" * n for n in range(1, 7))
    lang = BoundedLang(AB, 12, words)
    cur = lang
    for i in range(1, 5):
        cur = apply_bounded("q", cur)
        in_a_plus_b = sorted(
            (w for w in cur.words if w.endswith("b") and set(w[:-1]) == {"a"}),
            key=len,
        )
        assert in_a_plus_b[0] == "a" * (i + 1) + "b"


def test_fractional_power_iteration():
    prev = BoundedLang(AB, 8, frozenset({"ab"}))
    for i in range(1, 5):
        cur = apply_bounded("n", prev)
        marker = "ab" + "a" * i
        assert marker in cur.words
        assert marker not in prev.words
        prev = cur


def test_prefix_exponentiation_iteration():
    cur = BoundedLang(AB, 12, frozenset({"ab"}))
    for i in range(1, 5):
        cur = apply_bounded_word("pt", cur)
        assert "ab" + "a" * i in cur.words


def test_check_identity_pass_and_fail():
    assert check_identity("ps", "f").passed
    assert check_identity("ecece", "cece").passed
    report = check_identity("p", "s")
    assert not report.passed
    assert report.counterexample is not None
    assert report.line.startswith("IDENTITY p=s trials=100 result=FAIL")


def test_check_inclusion_pass_and_fail():
    assert check_inclusion("pcpckp", "kp").passed
    assert check_inclusion("t", "k").passed
    assert not check_inclusion("k", "p").passed


def test_reports_are_deterministic():
    a = check_identity("kp", "pk", trials=50, seed=3)
    b = check_identity("kp", "pk", trials=50, seed=3)
    assert a == b


def test_sample_languages_deterministic_and_bounded():
    langs = sample_languages(AB, 4, 10, seed=1)
    again = sample_languages(AB, 4, 10, seed=1)
    assert langs == again
    assert all(len(w) <= 4 for lang in langs for w in lang.words)
    # the four corner languages lead the sample
    space = space_for(AB, 4)
    assert langs[0].words == frozenset()
    assert langs[1].words == {""}
    assert langs[2].words == frozenset(space.words)
    assert langs[3].words == frozenset(space.words) - {""}


def test_true_fragment_saturates_absorbing_patterns():
    lang = bl({"ab"})
    full = frozenset(space_for(AB, 5).words)
    assert true_fragment("pcs", lang).words == full
    assert true_fragment("fcf", lang).words == full
    assert true_fragment("sckp", lang).words == full


def test_oracle_agrees_with_automata_spot_checks():
    from langorbits import corpus

    assert oracle_agrees_with_automata(corpus.figure1().dfa, "cpcpcpc", 6)
    abc = dfa_for_word("abc", Alphabet("abc"))
    assert oracle_agrees_with_automata(abc, "skp", 6)
    assert oracle_agrees_with_automata(dfa_for_word("ab"), "", 5)


def test_oracle_agrees_with_automata_randomized(rng):
    ops = "kecpfswrq"
    for _ in range(25):
        dfa = random_dfa(rng, rng.randint(1, 4), AB)
        for _ in range(4):
            word = "".join(rng.choice(ops) for _ in range(rng.randint(1, 6)))
            assert oracle_agrees_with_automata(dfa, word, 5), (word, dfa)


def test_agreement_with_dfa_based_bounded_language():
    dfa = dfa_for_words(["ab", "b", "aab"])
    lang = bounded_from_dfa(dfa, 5)
    assert lang.words == {"ab", "b", "aab"}
