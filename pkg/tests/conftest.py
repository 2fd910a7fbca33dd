import random

import pytest

from langorbits.automata import Alphabet, Dfa, Nfa, determinize, minimize, nfa_word

AB = Alphabet("ab")
ABC = Alphabet("abc")


def dfa_for_word(word: str, alphabet: Alphabet = AB) -> Dfa:
    return minimize(determinize(nfa_word(alphabet, word)))


def dfa_for_words(words, alphabet: Alphabet = AB) -> Dfa:
    from langorbits.automata import nfa_union

    parts = [nfa_word(alphabet, w) for w in words]
    return minimize(determinize(nfa_union(*parts)))


@pytest.fixture
def rng():
    return random.Random(20240809)
