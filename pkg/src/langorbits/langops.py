"""Language operations realized as automaton constructions.

Operations are named by single letters, fixed across the whole package:

====== ===========================  =========================================
letter name                         effect on a language L
====== ===========================  =========================================
``k``  star closure                 L*
``e``  positive closure             L+  (contains the empty word iff L does)
``c``  complement                   all strings not in L
``p``  prefix closure               every prefix of a word of L
``s``  suffix closure               every suffix of a word of L
``f``  factor closure               every contiguous block of a word of L
``w``  subword closure              every scattered subsequence of a word of L
``r``  reversal                     every word of L read right to left
``q``  proper-prefix operation      strictly shorter prefixes only
``t``  exponentiation               x^i for x in L, integer i >= 1
``n``  fractional exponentiation    x^a for x in L, rational a >= 1
====== ===========================  =========================================

Operation words are strings over these letters applied rightmost first,
so ``apply_word("pc", d)`` computes p(c(L)).  ``t`` and ``n`` do not
preserve regularity in general and are therefore restricted to automata
with finite languages; infinite inputs raise :class:`InfiniteLanguageError`
so the caller can fall back to the bounded oracle.

Every function returns a minimized complete DFA, which keeps state counts
bounded under iterated star/complement in orbit computations.
"""

from __future__ import annotations

from .automata import (
    EPSILON,
    Dfa,
    Nfa,
    accessible_states,
    all_words,
    coaccessible_states,
    complement,
    determinize,
    is_finite,
    minimize,
    nfa_concat,
    nfa_from_dfa,
    nfa_none,
    nfa_plus,
    nfa_union,
    nfa_word,
)

# fixed traversal order: k < e < c < p < f < s < w < r, then the extras
OPS = "kecpfswrqtn"

# expanding, inclusion-preserving, idempotent operations
CLOSURE_OPS = frozenset("kepsfwt")


class InfiniteLanguageError(ValueError):
    """Raised when t or n is applied to an automaton with an infinite language."""


def _star(dfa: Dfa) -> Dfa:
    hub = dfa.num_states
    moves = set(nfa_from_dfa(dfa).moves)
    moves.add((hub, EPSILON, dfa.initial))
    for q in dfa.finals:
        moves.add((q, EPSILON, hub))
    nfa = Nfa(dfa.alphabet, hub + 1, frozenset({hub}), frozenset({hub}), frozenset(moves))
    return determinize(nfa)


def _positive(dfa: Dfa) -> Dfa:
    moves = set(nfa_from_dfa(dfa).moves)
    for q in dfa.finals:
        moves.add((q, EPSILON, dfa.initial))
    nfa = Nfa(dfa.alphabet, dfa.num_states, frozenset({dfa.initial}), dfa.finals, frozenset(moves))
    return determinize(nfa)


def _reverse(dfa: Dfa) -> Dfa:
    moves = {
        (dfa.delta[q][i], letter, q)
        for q in range(dfa.num_states)
        for i, letter in enumerate(dfa.alphabet)
    }
    nfa = Nfa(dfa.alphabet, dfa.num_states, dfa.finals, frozenset({dfa.initial}), frozenset(moves))
    return determinize(nfa)


def _prefixes(dfa: Dfa) -> Dfa:
    # a word is a prefix of an accepted word iff it drives the automaton to
    # a state that is both accessible and co-accessible
    finals = frozenset(accessible_states(dfa) & coaccessible_states(dfa))
    return Dfa(dfa.alphabet, dfa.initial, finals, dfa.delta)


def _suffixes(dfa: Dfa) -> Dfa:
    nfa = nfa_from_dfa(dfa)
    return determinize(
        Nfa(dfa.alphabet, dfa.num_states, frozenset(accessible_states(dfa)), dfa.finals, nfa.moves)
    )


def _subwords(dfa: Dfa) -> Dfa:
    # deleting any letter of an accepted word must stay accepted: add an
    # epsilon move alongside every letter transition
    moves = set(nfa_from_dfa(dfa).moves)
    for q in range(dfa.num_states):
        for t in dfa.delta[q]:
            moves.add((q, EPSILON, t))
    nfa = Nfa(dfa.alphabet, dfa.num_states, frozenset({dfa.initial}), dfa.finals, frozenset(moves))
    return determinize(nfa)


def _proper_prefixes(dfa: Dfa) -> Dfa:
    # finals: states with a path of length >= 1 to a final state
    finals = set()
    coacc = coaccessible_states(dfa)
    for q in range(dfa.num_states):
        if any(t in coacc for t in dfa.delta[q]):
            finals.add(q)
    return Dfa(dfa.alphabet, dfa.initial, frozenset(finals), dfa.delta)


def _finite_words(dfa: Dfa, op: str) -> list[str]:
    if not is_finite(dfa):
        raise InfiniteLanguageError(
            f"unsupported: non-finite input for exponentiation ({op!r})"
        )
    return all_words(dfa)


def _powers(dfa: Dfa) -> Dfa:
    words = _finite_words(dfa, "t")
    parts = []
    for x in words:
        if x == "":
            parts.append(nfa_word(dfa.alphabet, ""))
        else:
            parts.append(nfa_plus(nfa_word(dfa.alphabet, x)))
    nfa = nfa_union(*parts) if parts else nfa_none(dfa.alphabet)
    return determinize(nfa)


def _fractional_powers(dfa: Dfa) -> Dfa:
    # x^a for rational a >= 1 is x^i followed by a prefix of x, i >= 1
    words = _finite_words(dfa, "n")
    parts = []
    for x in words:
        if x == "":
            parts.append(nfa_word(dfa.alphabet, ""))
            continue
        cycle = nfa_plus(nfa_word(dfa.alphabet, x))
        prefix_moves = {(i, ch, i + 1) for i, ch in enumerate(x)}
        prefixes = Nfa(
            dfa.alphabet,
            len(x) + 1,
            frozenset({0}),
            frozenset(range(len(x) + 1)),
            frozenset(prefix_moves),
        )
        parts.append(nfa_concat(cycle, prefixes))
    nfa = nfa_union(*parts) if parts else nfa_none(dfa.alphabet)
    return determinize(nfa)


_CONSTRUCTIONS = {
    "k": _star,
    "e": _positive,
    "c": complement,
    "p": _prefixes,
    "s": _suffixes,
    "f": lambda dfa: _prefixes(_suffixes(dfa)),
    "w": _subwords,
    "r": _reverse,
    "q": _proper_prefixes,
    "t": _powers,
    "n": _fractional_powers,
}


def apply(op: str, dfa: Dfa) -> Dfa:
    """Apply one operation letter; the result is minimized and complete."""
    try:
        construction = _CONSTRUCTIONS[op]
    except KeyError:
        raise ValueError(f"unknown operation letter {op!r}") from None
    return minimize(construction(dfa))


def apply_word(word: str, dfa: Dfa) -> Dfa:
    """Apply an operation word, rightmost letter first."""
    out = minimize(dfa)
    for op in reversed(word):
        out = apply(op, out)
    return out


def minimal_alphabet(dfa: Dfa) -> frozenset[str]:
    """The set of letters occurring in at least one accepted word."""
    acc = accessible_states(dfa)
    coacc = coaccessible_states(dfa)
    used = set()
    for q in acc:
        for i, letter in enumerate(dfa.alphabet):
            if dfa.delta[q][i] in coacc:
                used.add(letter)
    return frozenset(used)
