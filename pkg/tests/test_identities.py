"""Randomized validation of the full identity catalog on both engines."""

import random

import pytest

from conftest import AB
from identity_suite import (
    ABSORBING_WORDS,
    CLOSURE_WORDS,
    EPSILON_ADJUSTED,
    INCLUSIONS,
    PLAIN_IDENTITIES,
    WHOLE_LANGUAGE_IDENTITIES,
    SuiteEvaluator,
)
from langorbits.automata import (
    Alphabet,
    canonicalize,
    complement,
    equivalent,
    is_empty,
    is_universal,
    random_dfa,
    words_up_to,
)
from langorbits.langops import CLOSURE_OPS, apply, apply_word
from langorbits.oracle import BoundedLang, space_for, true_fragment


@pytest.fixture(scope="module")
def evaluators():
    return {size: SuiteEvaluator(size, trials=100) for size in (1, 2, 3)}


def test_plain_identities_on_oracle(evaluators):
    for size, ev in evaluators.items():
        for lhs, rhs in PLAIN_IDENTITIES:
            assert ev.equal(lhs, rhs), (size, lhs, rhs)


def test_epsilon_adjusted_identities_on_oracle(evaluators):
    for size, ev in evaluators.items():
        for lhs, rhs in EPSILON_ADJUSTED:
            assert ev.epsilon_adjusted(lhs, rhs), (size, lhs, rhs)


def test_inclusions_on_oracle(evaluators):
    for size, ev in evaluators.items():
        for lhs, rhs in INCLUSIONS:
            if "t" in lhs + rhs and size > 2:
                continue  # exponentiation sampling is slow on big alphabets
            assert ev.included(lhs, rhs), (size, lhs, rhs)


def test_whole_language_identities():
    rng = random.Random(31)
    space = space_for(AB, 4)
    for _ in range(60):
        mask = rng.getrandbits(space.size)
        lang = space.to_lang(mask)
        for lhs, rhs in WHOLE_LANGUAGE_IDENTITIES:
            assert true_fragment(lhs, lang) == true_fragment(rhs, lang), (lhs, rhs)


def test_absorbing_words_map_samples_into_trivial_class():
    rng = random.Random(17)
    space = space_for(AB, 4)
    full = frozenset(space.words)
    trivial = (frozenset(), {""}, full, full - {""})
    samples = [space.to_lang(rng.getrandbits(space.size)) for _ in range(12)]
    samples.append(space.to_lang(0))
    samples.append(space.to_lang(1))
    for word in ABSORBING_WORDS:
        for lang in samples:
            image = true_fragment(word, lang).words
            assert image in trivial, (word, sorted(lang.words))


def test_factor_star_or_complement_saturates():
    # for every language, the factor closure of it or of its complement
    # is everything
    rng = random.Random(23)
    space = space_for(AB, 4)
    full = frozenset(space.words)
    for _ in range(25):
        lang = space.to_lang(rng.getrandbits(space.size))
        f = true_fragment("f", lang).words
        fc = true_fragment("fc", lang).words
        assert f == full or fc == full


def test_subword_star_decomposition(evaluators):
    # any split of a word in the prefix-star lands in prefix-star and
    # factor-star parts
    ev = evaluators[2]
    space = ev.space
    for mask in ev.masks[:40]:
        kp = ev.space.apply_word("kp", mask)
        kf = ev.space.apply_word("kf", mask)
        ks = ev.space.apply_word("ks", mask)
        kw = ev.space.apply_word("kw", mask)
        for idx_word in range(space.size):
            if not (kp >> idx_word) & 1:
                continue
            word = space.words[idx_word]
            for cut in range(len(word) + 1):
                x, y = word[:cut], word[cut:]
                assert (kp >> space.index[x]) & 1
                assert (kf >> space.index[y]) & 1
        for idx_word in range(space.size):
            word = space.words[idx_word]
            if (ks >> idx_word) & 1:
                for cut in range(len(word) + 1):
                    assert (kf >> space.index[word[:cut]]) & 1
                    assert (ks >> space.index[word[cut:]]) & 1
            if (kf >> idx_word) & 1:
                for cut in range(len(word) + 1):
                    assert (kf >> space.index[word[:cut]]) & 1
                    assert (kf >> space.index[word[cut:]]) & 1
            if (kw >> idx_word) & 1:
                for cut in range(len(word) + 1):
                    assert (kw >> space.index[word[:cut]]) & 1
                    assert (kw >> space.index[word[cut:]]) & 1


def test_closure_operation_laws(evaluators):
    # expanding, inclusion preserving, idempotent
    for size in (1, 2):
        ev = evaluators[size]
        space = ev.space
        masks = ev.masks[:40]
        for op in sorted(CLOSURE_OPS):
            for mask in masks:
                image = space.apply(op, mask)
                assert mask & ~image == 0, op
                assert space.apply(op, image) == image, op
            for small, big in zip(masks, masks[1:]):
                meet = small & big
                assert space.apply(op, meet) & ~space.apply(op, big) == 0, op


def test_plain_identities_on_random_automata(rng):
    # canonical automata agree on every identity, dual to the oracle run
    for lhs, rhs in PLAIN_IDENTITIES + WHOLE_LANGUAGE_IDENTITIES:
        if "e" in lhs + rhs and len(lhs + rhs) > 8:
            continue  # keep the slow positive-closure chains short
        for trial in range(4):
            letters = AB if trial % 2 == 0 else Alphabet("abc")
            dfa = random_dfa(rng, rng.randint(1, 4), letters)
            assert canonicalize(apply_word(lhs, dfa)) == canonicalize(apply_word(rhs, dfa)), (lhs, rhs)


def test_absorbing_words_on_random_automata(rng):
    from langorbits.orbit import trivial_class

    for word in ABSORBING_WORDS:
        for _ in range(3):
            dfa = random_dfa(rng, rng.randint(1, 4), AB)
            image = canonicalize(apply_word(word, dfa))
            assert image in trivial_class(AB).values(), word
