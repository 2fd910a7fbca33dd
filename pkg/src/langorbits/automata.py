"""Finite automata over fixed alphabets.

Complete DFAs (every state has a transition on every letter, sink states
included) are the working representation of regular languages here:
complementation is a finals flip, and language equality reduces to
structural equality of canonical forms.  NFAs with epsilon moves are the
intermediate form used by the language-operation constructions.

All automaton values are immutable after construction and every function
in this module is pure, so concurrent use needs no locking.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

EPSILON = None  # transition label of an epsilon move in an Nfa


@dataclass(frozen=True)
class Alphabet:
    """An ordered, fixed collection of distinct single-character letters.

    The letter order is part of the alphabet's identity: canonical DFA
    numbering and deterministic orbit traversal both depend on it, so an
    alphabet is never inferred or shrunk during a computation.
    """

    letters: tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for ch in self.letters:
            if not (isinstance(ch, str) and len(ch) == 1):
                raise ValueError(f"letters must be single characters, got {ch!r}")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError("alphabet letters must be pairwise distinct")

    def index(self, letter: str) -> int:
        try:
            return self.letters.index(letter)
        except ValueError:
            raise KeyError(f"letter {letter!r} not in alphabet {self.letters}") from None

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __contains__(self, letter):
        return letter in self.letters


@dataclass(frozen=True)
class Dfa:
    """A complete deterministic finite automaton.

    ``delta[q][i]`` is the successor of state ``q`` on the i-th alphabet
    letter.  The table is total, so every input string drives the
    automaton to exactly one state.
    """

    alphabet: Alphabet
    initial: int
    finals: frozenset[int]
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        n = len(self.delta)
        if n == 0:
            raise ValueError("a complete DFA needs at least one state")
        if not 0 <= self.initial < n:
            raise ValueError("initial state out of range")
        if not all(0 <= q < n for q in self.finals):
            raise ValueError("final state out of range")
        for row in self.delta:
            if len(row) != len(self.alphabet):
                raise ValueError("transition row width differs from alphabet size")
            if not all(0 <= q < n for q in row):
                raise ValueError("transition target out of range")

    @property
    def num_states(self) -> int:
        return len(self.delta)

    def step(self, state: int, letter: str) -> int:
        return self.delta[state][self.alphabet.index(letter)]

    def accepts(self, word: str) -> bool:
        q = self.initial
        for ch in word:
            q = self.delta[q][self.alphabet.index(ch)]
        return q in self.finals


@dataclass(frozen=True)
class Nfa:
    """A nondeterministic automaton with optional epsilon moves.

    ``moves`` holds triples ``(source, label, target)`` where the label is
    either a letter of the alphabet or :data:`EPSILON`.
    """

    alphabet: Alphabet
    num_states: int
    initials: frozenset[int]
    finals: frozenset[int]
    moves: frozenset[tuple[int, str | None, int]]

    def __post_init__(self):
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "moves", frozenset(self.moves))
        n = self.num_states
        if any(not 0 <= q < n for q in self.initials | self.finals):
            raise ValueError("initial/final state out of range")
        for src, label, dst in self.moves:
            if not (0 <= src < n and 0 <= dst < n):
                raise ValueError("move endpoint out of range")
            if label is not EPSILON and label not in self.alphabet:
                raise ValueError(f"move label {label!r} not in alphabet")


# ---------------------------------------------------------------------------
# reachability predicates


def accessible_states(dfa: Dfa) -> set[int]:
    """States reachable from the initial state."""
    seen = {dfa.initial}
    stack = [dfa.initial]
    while stack:
        q = stack.pop()
        for t in dfa.delta[q]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return seen


def coaccessible_states(dfa: Dfa) -> set[int]:
    """States from which some final state is reachable (in 0 or more steps)."""
    back: list[set[int]] = [set() for _ in range(dfa.num_states)]
    for q, row in enumerate(dfa.delta):
        for t in row:
            back[t].add(q)
    seen = set(dfa.finals)
    stack = list(dfa.finals)
    while stack:
        q = stack.pop()
        for p in back[q]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def is_empty(dfa: Dfa) -> bool:
    return not (accessible_states(dfa) & dfa.finals)


def is_universal(dfa: Dfa) -> bool:
    """True iff the automaton accepts every string (its complement is empty)."""
    return accessible_states(dfa) <= dfa.finals


def accepts_epsilon(dfa: Dfa) -> bool:
    return dfa.initial in dfa.finals


def complement(dfa: Dfa) -> Dfa:
    """Finals flip; exact because the automaton is complete."""
    finals = frozenset(range(dfa.num_states)) - dfa.finals
    return Dfa(dfa.alphabet, dfa.initial, finals, dfa.delta)


# ---------------------------------------------------------------------------
# determinization, minimization, canonical forms


def determinize(nfa: Nfa) -> Dfa:
    """Subset construction.  The result is complete; the empty subset acts
    as the sink and appears only when reachable."""
    eps_adj: list[list[int]] = [[] for _ in range(nfa.num_states)]
    letter_adj: list[dict[str, list[int]]] = [{} for _ in range(nfa.num_states)]
    for src, label, dst in nfa.moves:
        if label is EPSILON:
            eps_adj[src].append(dst)
        else:
            letter_adj[src].setdefault(label, []).append(dst)

    def closure(states) -> frozenset[int]:
        seen = set(states)
        stack = list(states)
        while stack:
            q = stack.pop()
            for t in eps_adj[q]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)

    start = closure(nfa.initials)
    index: dict[frozenset[int], int] = {start: 0}
    order = [start]
    delta: list[tuple[int, ...]] = []
    i = 0
    while i < len(order):
        cur = order[i]
        row = []
        for letter in nfa.alphabet:
            nxt = closure({t for q in cur for t in letter_adj[q].get(letter, ())})
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        delta.append(tuple(row))
        i += 1
    finals = frozenset(j for j, subset in enumerate(order) if subset & nfa.finals)
    return Dfa(nfa.alphabet, 0, finals, tuple(delta))


def minimize(dfa: Dfa) -> Dfa:
    """Language-equivalent complete DFA with the minimum number of states.

    Unreachable states are removed first, then Moore partition refinement
    merges language-equivalent states.
    """
    reach = sorted(accessible_states(dfa))
    remap = {q: i for i, q in enumerate(reach)}
    width = len(dfa.alphabet)
    delta = [tuple(remap[dfa.delta[q][i]] for i in range(width)) for q in reach]
    finals = {remap[q] for q in dfa.finals if q in remap}
    n = len(reach)

    block = [1 if q in finals else 0 for q in range(n)]
    while True:
        sigs: dict[tuple, int] = {}
        new = [0] * n
        for q in range(n):
            sig = (block[q], *(block[t] for t in delta[q]))
            new[q] = sigs.setdefault(sig, len(sigs))
        if len(sigs) == len(set(block)):
            break
        block = new

    reps: dict[int, int] = {}
    for q in range(n):
        reps.setdefault(block[q], q)
    ordered_blocks = sorted(reps)
    renum = {b: i for i, b in enumerate(ordered_blocks)}
    out_delta = tuple(
        tuple(renum[block[delta[reps[b]][i]]] for i in range(width)) for b in ordered_blocks
    )
    out_finals = frozenset(renum[block[q]] for q in finals)
    return Dfa(dfa.alphabet, renum[block[remap[dfa.initial]]], out_finals, out_delta)


def canonicalize(dfa: Dfa) -> Dfa:
    """Minimized DFA renumbered by breadth-first discovery order.

    Two canonical forms are structurally equal (``==``) iff the input
    automata accept the same language over the same alphabet, which makes
    the result directly usable as a deduplication key.
    """
    m = minimize(dfa)
    pos = {m.initial: 0}
    order = [m.initial]
    for q in order:
        for t in m.delta[q]:
            if t not in pos:
                pos[t] = len(order)
                order.append(t)
    # minimize() leaves only reachable states, so `order` covers all of them
    width = len(m.alphabet)
    delta = tuple(tuple(pos[m.delta[q][i]] for i in range(width)) for q in order)
    finals = frozenset(pos[q] for q in m.finals)
    return Dfa(m.alphabet, 0, finals, delta)


def canonical_key(dfa: Dfa) -> bytes:
    """Flat byte encoding of the canonical form: state count, transition
    rows in order, finals bitmap.  Equal keys <=> equal languages."""
    c = canonicalize(dfa)
    parts = [f"{c.num_states};{''.join(c.alphabet)};"]
    parts.append(",".join(str(t) for row in c.delta for t in row))
    parts.append(";")
    bitmap = 0
    for q in c.finals:
        bitmap |= 1 << q
    parts.append(format(bitmap, "x"))
    return "".join(parts).encode("ascii")


def equivalent(a: Dfa, b: Dfa) -> bool:
    """True iff both automata accept the same language.

    Implemented as a product-automaton search for a distinguishing state
    pair, independently of :func:`canonicalize`, so the two can serve as
    cross-checks of each other.
    """
    if a.alphabet != b.alphabet:
        raise ValueError("alphabet mismatch")
    start = (a.initial, b.initial)
    seen = {start}
    queue = deque([start])
    width = len(a.alphabet)
    while queue:
        qa, qb = queue.popleft()
        if (qa in a.finals) != (qb in b.finals):
            return False
        for i in range(width):
            pair = (a.delta[qa][i], b.delta[qb][i])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return True


# ---------------------------------------------------------------------------
# word-level views


def words_up_to(dfa: Dfa, maxlen: int) -> list[str]:
    """All accepted words of length <= maxlen, shortest first."""
    out = []
    letters = dfa.alphabet.letters
    for length in range(maxlen + 1):
        for tup in product(letters, repeat=length):
            word = "".join(tup)
            if dfa.accepts(word):
                out.append(word)
    return out


def is_finite(dfa: Dfa) -> bool:
    """True iff the accepted language is finite (no productive cycle)."""
    live = accessible_states(dfa) & coaccessible_states(dfa)
    color = {}  # 0 = in progress, 1 = done

    def dfs(q: int) -> bool:
        color[q] = 0
        for t in dfa.delta[q]:
            if t not in live:
                continue
            if t not in color:
                if not dfs(t):
                    return False
            elif color[t] == 0:
                return False
        color[q] = 1
        return True

    for q in live:
        if q not in color and not dfs(q):
            return False
    return True


def all_words(dfa: Dfa) -> list[str]:
    """Every accepted word, shortest first.  Raises if the language is
    infinite; callers must check :func:`is_finite` or be prepared for it."""
    if not is_finite(dfa):
        raise ValueError("language is infinite")
    live = accessible_states(dfa) & coaccessible_states(dfa)
    out = []
    if dfa.initial in live or dfa.initial in dfa.finals:
        frontier = [(dfa.initial, "")]
        while frontier:
            nxt = []
            for q, word in frontier:
                if q in dfa.finals:
                    out.append(word)
                for i, letter in enumerate(dfa.alphabet):
                    t = dfa.delta[q][i]
                    if t in live:
                        nxt.append((t, word + letter))
            frontier = nxt
    return out


# ---------------------------------------------------------------------------
# NFA building blocks


def nfa_from_dfa(dfa: Dfa) -> Nfa:
    moves = {
        (q, letter, dfa.delta[q][i])
        for q in range(dfa.num_states)
        for i, letter in enumerate(dfa.alphabet)
    }
    return Nfa(dfa.alphabet, dfa.num_states, frozenset({dfa.initial}), dfa.finals, frozenset(moves))


def nfa_none(alphabet: Alphabet) -> Nfa:
    """The empty language."""
    return Nfa(alphabet, 1, frozenset({0}), frozenset(), frozenset())


def nfa_word(alphabet: Alphabet, word: str) -> Nfa:
    """The single-word language {word}."""
    moves = {(i, ch, i + 1) for i, ch in enumerate(word)}
    return Nfa(alphabet, len(word) + 1, frozenset({0}), frozenset({len(word)}), frozenset(moves))


def nfa_letters(alphabet: Alphabet, letters) -> Nfa:
    """The language of the given one-letter words."""
    moves = {(0, ch, 1) for ch in letters}
    return Nfa(alphabet, 2, frozenset({0}), frozenset({1}), frozenset(moves))


def _shift(nfa: Nfa, offset: int):
    moves = {(s + offset, a, t + offset) for s, a, t in nfa.moves}
    initials = {q + offset for q in nfa.initials}
    finals = {q + offset for q in nfa.finals}
    return moves, initials, finals


def nfa_union(*nfas: Nfa) -> Nfa:
    if not nfas:
        raise ValueError("union of no automata")
    alphabet = nfas[0].alphabet
    moves: set = set()
    initials: set[int] = set()
    finals: set[int] = set()
    offset = 0
    for nfa in nfas:
        if nfa.alphabet != alphabet:
            raise ValueError("alphabet mismatch")
        m, i, f = _shift(nfa, offset)
        moves |= m
        initials |= i
        finals |= f
        offset += nfa.num_states
    return Nfa(alphabet, offset, frozenset(initials), frozenset(finals), frozenset(moves))


def nfa_concat(a: Nfa, b: Nfa) -> Nfa:
    if a.alphabet != b.alphabet:
        raise ValueError("alphabet mismatch")
    bm, bi, bf = _shift(b, a.num_states)
    moves = set(a.moves) | bm
    for q in a.finals:
        for q2 in bi:
            moves.add((q, EPSILON, q2))
    return Nfa(a.alphabet, a.num_states + b.num_states, a.initials, frozenset(bf), frozenset(moves))


def nfa_star(a: Nfa) -> Nfa:
    """Kleene closure; always accepts the empty word."""
    hub = a.num_states
    moves = set(a.moves)
    for q in a.initials:
        moves.add((hub, EPSILON, q))
    for q in a.finals:
        moves.add((q, EPSILON, hub))
    return Nfa(a.alphabet, hub + 1, frozenset({hub}), frozenset({hub}), frozenset(moves))


def nfa_plus(a: Nfa) -> Nfa:
    """Positive closure; accepts the empty word iff the argument does."""
    moves = set(a.moves)
    for q in a.finals:
        for q2 in a.initials:
            moves.add((q, EPSILON, q2))
    return Nfa(a.alphabet, a.num_states, a.initials, a.finals, frozenset(moves))


# ---------------------------------------------------------------------------
# serialization (the DFA JSON interchange format)


def dfa_to_dict(dfa: Dfa) -> dict:
    return {
        "alphabet": list(dfa.alphabet),
        "states": dfa.num_states,
        "initial": dfa.initial,
        "finals": sorted(dfa.finals),
        "delta": [list(row) for row in dfa.delta],
    }


def dfa_from_dict(data: dict) -> Dfa:
    alphabet = Alphabet(tuple(data["alphabet"]))
    delta = tuple(tuple(row) for row in data["delta"])
    if len(delta) != data["states"]:
        raise ValueError("state count does not match transition table")
    return Dfa(alphabet, data["initial"], frozenset(data["finals"]), delta)


# ---------------------------------------------------------------------------
# randomized instances for property tests


def random_dfa(rng, num_states: int, alphabet: Alphabet) -> Dfa:
    """A uniformly random complete DFA; finals chosen by fair coin."""
    delta = tuple(
        tuple(rng.randrange(num_states) for _ in range(len(alphabet))) for _ in range(num_states)
    )
    finals = frozenset(q for q in range(num_states) if rng.random() < 0.5)
    return Dfa(alphabet, rng.randrange(num_states), finals, delta)
