"""Built-in witness automata with known orbit sizes.

Each constructor returns a :class:`Witness`: a DFA together with the
expectations it is known to satisfy (orbit sizes under specific operation
sets, per-word final-state tables).  The transition tables are fixed data;
the expectations are verified mechanically by the test suite and by the
``witness`` CLI command, which guards against transcription errors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Alphabet, Dfa, Nfa, determinize, minimize, nfa_union

ABCD = Alphabet("abcd")
NINE_LETTERS = Alphabet("abcdefghi")
UNARY = Alphabet("a")


@dataclass(frozen=True)
class Witness:
    name: str
    dfa: Dfa
    expected: dict


# Final-state rows of the prefix/complement orbit of the figure1 automaton,
# keyed by operation word (leftmost letter applied last).  State numbers
# are 0-based.
FIGURE1_ROWS: dict[str, frozenset[int]] = {
    word: frozenset(q - 1 for q in states)
    for word, states in {
        "": {3, 7, 8},
        "c": {1, 2, 4, 5, 6},
        "p": {1, 2, 3, 5, 6, 7, 8},
        "pc": {1, 2, 3, 4, 5, 6, 8},
        "cp": {4},
        "cpc": {7},
        "pcp": {1, 4, 5, 8},
        "pcpc": {1, 5, 6, 7},
        "cpcp": {2, 3, 6, 7},
        "cpcpc": {2, 3, 4, 8},
        "pcpcp": {1, 2, 3, 5, 6, 7},
        "pcpcpc": {1, 2, 3, 4, 5, 8},
        "cpcpcp": {4, 8},
        "cpcpcpc": {6, 7},
    }.items()
}

# The thirteen operation words whose images exhaust the orbit of a single
# three-letter word under star/prefix/suffix/factor.
ABC_ORBIT_WORDS = frozenset(
    ["", "k", "p", "s", "f", "kp", "ks", "kf", "pk", "sk", "fk", "pks", "skp"]
)


def figure1() -> Witness:
    """Eight-state witness over {a,b,c,d} whose {p,c}-orbit has size 14."""
    delta = (
        (0, 4, 4, 5),  # 1: a->1  b->5  c->5  d->6
        (2, 2, 2, 2),  # 2: all->3
        (1, 1, 1, 1),  # 3: all->2
        (3, 3, 3, 3),  # 4: all->4
        (2, 7, 3, 6),  # 5: a->3  b->8  c->4  d->7
        (6, 6, 6, 6),  # 6: all->7
        (6, 6, 6, 6),  # 7: all->7
        (3, 3, 3, 3),  # 8: all->4
    )
    dfa = Dfa(ABCD, 0, frozenset({2, 6, 7}), delta)
    return Witness(
        "figure1",
        dfa,
        {"orbit:pc": 14, "rows:pc": FIGURE1_ROWS, "minimal-states": 8},
    )


def figure2_base() -> Dfa:
    """Five-state automaton over {a,b,c,d}; two disjoint copies of it form
    the figure2 witness."""
    delta = (
        (1, 2, 3, 4),  # 1: a->2 b->3 c->4 d->5
        (3, 4, 2, 1),  # 2: a->4 b->5 c->3 d->2
        (3, 4, 4, 2),  # 3: a->4 b->5 c->5 d->3
        (3, 4, 1, 1),  # 4: a->4 b->5 c->2 d->2
        (3, 3, 1, 3),  # 5: a->4 b->4 c->2 d->4
    )
    return Dfa(ABCD, 0, frozenset({1}), delta)


def figure2_witness() -> Witness:
    """Union of the base automaton and a letter-renamed copy, over nine
    letters with `i` unused; its {k,c,f}-orbit has size 50."""
    base = figure2_base()
    letters = NINE_LETTERS

    def copy_moves(offset: int, letter_shift: int):
        for q in range(base.num_states):
            for i in range(4):
                yield (q + offset, letters.letters[i + letter_shift], base.delta[q][i] + offset)

    moves = set(copy_moves(0, 0)) | set(copy_moves(base.num_states, 4))
    nfa = Nfa(
        letters,
        2 * base.num_states,
        frozenset({0, base.num_states}),
        frozenset({1, base.num_states + 1}),
        frozenset(moves),
    )
    dfa = minimize(determinize(nfa))
    return Witness(
        "figure2",
        dfa,
        {"orbit:kcf": 50, "minimal-alphabet-size": 8, "base-minimal-states": 5},
    )


def unary_ln(n: int) -> Witness:
    """Complete unary DFA with n states accepting the words a^i for
    i <= n-2; its orbit under the proper-prefix operation has size n."""
    if n < 2:
        raise ValueError("unary witness needs n >= 2")
    delta = tuple((min(q + 1, n - 1),) for q in range(n))
    dfa = Dfa(UNARY, 0, frozenset(range(n - 1)), delta)
    return Witness(f"l{n}", dfa, {"orbit:q": n})


def single_word(word: str, alphabet: Alphabet | None = None) -> Witness:
    """Minimal complete DFA for a one-word language."""
    if not word:
        raise ValueError("the witness word must be nonempty")
    if alphabet is None:
        alphabet = Alphabet("".join(sorted(set(word))))
    length = len(word)
    sink = length + 1
    delta = []
    for q in range(length):
        row = [sink] * len(alphabet)
        row[alphabet.index(word[q])] = q + 1
        delta.append(tuple(row))
    delta.append(tuple([sink] * len(alphabet)))  # accepting state: any letter dies
    delta.append(tuple([sink] * len(alphabet)))  # sink
    dfa = Dfa(alphabet, 0, frozenset({length}), tuple(delta))
    expected: dict = {}
    if word == "abc":
        expected = {"orbit:kpsf": 13, "orbit-words:kpsf": ABC_ORBIT_WORDS}
    return Witness(word, dfa, expected)


ALL_WITNESS_NAMES = ("figure1", "figure2", "abc", "ln")
