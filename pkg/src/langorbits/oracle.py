"""Exact bounded-length language oracle.

A :class:`BoundedLang` is the set of words of a language having length at
most a cutoff.  Every supported operation has an exact bounded
counterpart on finite languages: closures are computed by fixpoint
iteration inside the cutoff and the complement is taken relative to the
words up to the cutoff.

Two evaluation semantics coexist, and both are independent of the
automaton engine:

- *model semantics* (:func:`apply_bounded_word`, :func:`check_identity`):
  operation words act on subsets of the words up to the cutoff, with the
  complement relative to that universe.  Every algebraic identity in the
  rule catalog holds in this finite model (their derivations only use
  closure/involution properties that survive truncation), so the model is
  the fast engine for randomized identity checks and rewrite sweeps.
- *whole-language semantics* (:func:`true_fragment`,
  :func:`oracle_agrees_with_automata`): the input is the finite language
  itself, complements are genuinely infinite, and the result is the
  fragment of the composite image up to the cutoff.  This is computed by
  evaluating at an enlarged internal cutoff and truncating, which is how
  facts like "prefix of complement of suffix maps everything to all
  words" are observable at all.  The required enlargement grows with the
  word; the default padding is validated against the automaton engine by
  the cross-agreement tests.

The oracle refutes, it never proves.  Internally languages are bitmasks
over the fixed enumeration of all words up to the cutoff, which keeps
identity sweeps with hundreds of thousands of operation applications in
the seconds range.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .automata import Alphabet, Dfa, words_up_to
from .langops import OPS


@dataclass(frozen=True)
class BoundedLang:
    """A language intersected with the words of length <= maxlen."""

    alphabet: Alphabet
    maxlen: int
    words: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "words", frozenset(self.words))
        for w in self.words:
            if len(w) > self.maxlen:
                raise ValueError(f"word {w!r} longer than the cutoff {self.maxlen}")
            if any(ch not in self.alphabet for ch in w):
                raise ValueError(f"word {w!r} uses letters outside the alphabet")

    def __contains__(self, word: str) -> bool:
        return word in self.words


class _Space:
    """Shared tables for one (alphabet, cutoff) pair.

    Words are indexed length-major, then by radix value in alphabet order,
    so the index of a concatenation is plain arithmetic and sets of words
    can live in machine integers.
    """

    def __init__(self, alphabet: Alphabet, maxlen: int):
        self.alphabet = alphabet
        self.maxlen = maxlen
        s = len(alphabet)
        self.base = s
        self.counts = [s**i for i in range(maxlen + 1)]
        self.offsets = [0]
        for c in self.counts[:-1]:
            self.offsets.append(self.offsets[-1] + c)
        self.size = self.offsets[-1] + self.counts[-1]
        self.universe = (1 << self.size) - 1
        words: list[str] = [""]
        for length in range(1, maxlen + 1):
            start = self.offsets[length - 1]
            prev = words[start : start + self.counts[length - 1]]
            words.extend(w + ch for w in prev for ch in alphabet)
        self.words = words
        self.index = {w: i for i, w in enumerate(words)}
        self._tables: dict[str, list[int]] = {}

    # -- per-word mask tables, built on first use -------------------------

    def _table(self, op: str) -> list[int]:
        table = self._tables.get(op)
        if table is None:
            build = getattr(self, f"_build_{op}")
            table = [build(w) for w in self.words]
            self._tables[op] = table
        return table

    def _mask_of(self, words) -> int:
        mask = 0
        for w in words:
            mask |= 1 << self.index[w]
        return mask

    def _build_p(self, w: str) -> int:
        return self._mask_of(w[:i] for i in range(len(w) + 1))

    def _build_q(self, w: str) -> int:
        return self._mask_of(w[:i] for i in range(len(w)))

    def _build_s(self, w: str) -> int:
        return self._mask_of(w[i:] for i in range(len(w) + 1))

    def _build_f(self, w: str) -> int:
        return self._mask_of(w[i:j] for i in range(len(w) + 1) for j in range(i, len(w) + 1))

    def _build_w(self, w: str) -> int:
        subs = {""}
        for ch in w:
            subs |= {u + ch for u in subs}
        return self._mask_of(subs)

    def _build_r(self, w: str) -> int:
        return 1 << self.index[w[::-1]]

    def _build_t(self, w: str) -> int:
        if not w:
            return 1
        mask = 0
        x = w
        while len(x) <= self.maxlen:
            mask |= 1 << self.index[x]
            x += w
        return mask

    def _build_n(self, w: str) -> int:
        if not w:
            return 1
        mask = 0
        power = w
        while len(power) <= self.maxlen:
            for i in range(len(w) + 1):
                if len(power) + i <= self.maxlen:
                    mask |= 1 << self.index[power + w[:i]]
            power += w
        return mask

    # -- mask-level operations --------------------------------------------

    def spread(self, op: str, mask: int) -> int:
        table = self._table(op)
        out = 0
        while mask:
            low = mask & -mask
            out |= table[low.bit_length() - 1]
            mask ^= low
        return out

    def block(self, mask: int, length: int) -> int:
        return (mask >> self.offsets[length]) & ((1 << self.counts[length]) - 1)

    def concat(self, left: int, right: int) -> int:
        out = 0
        for a in range(self.maxlen + 1):
            la = self.block(left, a)
            if not la:
                continue
            for b in range(self.maxlen + 1 - a):
                rb = self.block(right, b)
                if not rb:
                    continue
                step = self.base**b
                shift_base = self.offsets[a + b]
                bits = la
                while bits:
                    low = bits & -bits
                    i = low.bit_length() - 1
                    out |= rb << (shift_base + i * step)
                    bits ^= low
        return out

    def positive_closure(self, mask: int) -> int:
        # squaring doubles the factor count per pass: logarithmic fixpoint
        reached = mask
        while True:
            grown = reached | self.concat(reached, reached)
            if grown == reached:
                return reached
            reached = grown

    def apply(self, op: str, mask: int) -> int:
        if op == "c":
            return self.universe ^ mask
        if op == "k":
            return self.positive_closure(mask) | 1
        if op == "e":
            return self.positive_closure(mask)
        if op in "psfwrqtn":
            return self.spread(op, mask)
        raise ValueError(f"unknown operation letter {op!r}")

    def apply_word(self, word: str, mask: int) -> int:
        for op in reversed(word):
            mask = self.apply(op, mask)
        return mask

    def to_lang(self, mask: int) -> BoundedLang:
        words = []
        while mask:
            low = mask & -mask
            words.append(self.words[low.bit_length() - 1])
            mask ^= low
        return BoundedLang(self.alphabet, self.maxlen, frozenset(words))


_SPACES: dict[tuple[tuple[str, ...], int], _Space] = {}


def space_for(alphabet: Alphabet, maxlen: int) -> _Space:
    key = (alphabet.letters, maxlen)
    if key not in _SPACES:
        _SPACES[key] = _Space(alphabet, maxlen)
    return _SPACES[key]


def bounded_from_dfa(dfa: Dfa, maxlen: int) -> BoundedLang:
    return BoundedLang(dfa.alphabet, maxlen, frozenset(words_up_to(dfa, maxlen)))


def apply_bounded(op: str, lang: BoundedLang) -> BoundedLang:
    """op(L) intersected with the words up to the cutoff, exactly."""
    space = space_for(lang.alphabet, lang.maxlen)
    return space.to_lang(space.apply(op, space._mask_of(lang.words)))


def apply_bounded_word(word: str, lang: BoundedLang) -> BoundedLang:
    """Apply an operation word, rightmost letter first."""
    for op in word:
        if op not in OPS:
            raise ValueError(f"unknown operation letter {op!r}")
    space = space_for(lang.alphabet, lang.maxlen)
    return space.to_lang(space.apply_word(word, space._mask_of(lang.words)))


def truncate(lang: BoundedLang, maxlen: int) -> BoundedLang:
    if maxlen > lang.maxlen:
        raise ValueError("cannot extend a bounded language")
    return BoundedLang(lang.alphabet, maxlen, frozenset(w for w in lang.words if len(w) <= maxlen))


# ---------------------------------------------------------------------------
# whole-language evaluation at an enlarged cutoff


# what the language looks like beyond the working cutoff
TAIL_EMPTY = "empty"      # no words past the cutoff
TAIL_FULL = "full"        # every word past the cutoff
TAIL_OTHER = "other"      # anything else; top levels may be approximate

# structural closure properties, tracked so that affix operations on
# complements of closed languages saturate the way they do on whole
# languages (a nonempty right ideal has suffixes/factors/subwords
# everywhere, and so on)
SH_NONE = "none"
SH_PREF = "pref"      # prefix-closed
SH_SUFF = "suff"      # suffix-closed
SH_FACT = "fact"      # factor-closed
SH_SUBW = "subw"      # subsequence-closed
SH_RID = "rid"        # right ideal (complement of prefix-closed)
SH_LID = "lid"        # left ideal
SH_TID = "tid"        # two-sided ideal
SH_SUP = "sup"        # supersequence-closed

_SHAPE_COMPLEMENT = {
    SH_PREF: SH_RID, SH_SUFF: SH_LID, SH_FACT: SH_TID, SH_SUBW: SH_SUP,
    SH_RID: SH_PREF, SH_LID: SH_SUFF, SH_TID: SH_FACT, SH_SUP: SH_SUBW,
    SH_NONE: SH_NONE,
}
_SHAPE_REVERSE = {SH_PREF: SH_SUFF, SH_SUFF: SH_PREF, SH_RID: SH_LID, SH_LID: SH_RID}

# (operation, shape of the operand) pairs whose result contains every word
# as soon as the operand is nonempty: the shape guarantees arbitrarily
# long members through which the affix reaches everything
_SATURATING = {
    ("p", SH_LID), ("p", SH_TID), ("p", SH_SUP),
    ("q", SH_LID), ("q", SH_TID), ("q", SH_SUP),
    ("s", SH_RID), ("s", SH_TID), ("s", SH_SUP),
    ("f", SH_RID), ("f", SH_LID), ("f", SH_TID), ("f", SH_SUP),
    ("w", SH_RID), ("w", SH_LID), ("w", SH_TID), ("w", SH_SUP),
}


def _affix_shape(op: str, shape: str) -> str:
    if op in ("p", "q"):
        return {SH_SUBW: SH_SUBW, SH_FACT: SH_FACT, SH_SUFF: SH_FACT}.get(shape, SH_PREF)
    if op == "s":
        return {SH_SUBW: SH_SUBW, SH_FACT: SH_FACT, SH_PREF: SH_FACT}.get(shape, SH_SUFF)
    if op == "f":
        return SH_SUBW if shape == SH_SUBW else SH_FACT
    return SH_SUBW  # w


class _LevelSpace:
    """Length-indexed boolean arrays over all words up to a cutoff; the
    numpy backend for whole-language evaluation at enlarged cutoffs.

    A language state is a pair ``(levels, tail)``: the boolean arrays per
    length plus a tail marker describing everything past the cutoff.
    Empty and full tails are tracked exactly (that is what makes
    "prefix of complement of X maps everything to all words" computable);
    for other tails the affix operations may lose words near the cutoff,
    which the caller absorbs by padding the cutoff."""

    def __init__(self, alphabet: Alphabet, maxlen: int):
        self.alphabet = alphabet
        self.maxlen = maxlen
        self.base = len(alphabet)

    def empty(self) -> list[np.ndarray]:
        return [np.zeros(self.base**b, dtype=bool) for b in range(self.maxlen + 1)]

    def full(self) -> list[np.ndarray]:
        return [np.ones(self.base**b, dtype=bool) for b in range(self.maxlen + 1)]

    def value(self, word: str) -> int:
        v = 0
        for ch in word:
            v = v * self.base + self.alphabet.index(ch)
        return v

    def word_of(self, length: int, value: int) -> str:
        digits = []
        for _ in range(length):
            digits.append(self.alphabet.letters[value % self.base])
            value //= self.base
        return "".join(reversed(digits))

    # -- single operations, acting on level-array states -------------------

    def complement(self, levels):
        return [~lv for lv in levels]

    def reverse(self, levels):
        out = []
        for b, lv in enumerate(levels):
            if b < 2:
                out.append(lv.copy())
            else:
                out.append(lv.reshape((self.base,) * b).transpose(range(b - 1, -1, -1)).ravel())
        return out

    def _drop_last(self, lv: np.ndarray) -> np.ndarray:
        return lv.reshape(-1, self.base).any(axis=1)

    def _drop_first(self, lv: np.ndarray) -> np.ndarray:
        return lv.reshape(self.base, -1).any(axis=0)

    def prefixes(self, levels, proper: bool = False):
        out = [lv.copy() for lv in levels]
        for b in range(self.maxlen - 1, -1, -1):
            out[b] |= self._drop_last(out[b + 1])
        if proper:
            shifted = self.empty()
            for b in range(self.maxlen - 1, -1, -1):
                shifted[b] = self._drop_last(levels[b + 1] | shifted[b + 1])
            return shifted
        return out

    def suffixes(self, levels):
        out = [lv.copy() for lv in levels]
        for b in range(self.maxlen - 1, -1, -1):
            out[b] |= self._drop_first(out[b + 1])
        return out

    def subwords(self, levels):
        out = [lv.copy() for lv in levels]
        for b in range(self.maxlen, 0, -1):
            dropped = np.zeros(self.base ** (b - 1), dtype=bool)
            for j in range(b):
                view = out[b].reshape(self.base**j, self.base, self.base ** (b - 1 - j))
                dropped |= view.any(axis=1).ravel()
            out[b - 1] |= dropped
        return out

    def _concat(self, left, right):
        out = self.empty()
        for a in range(self.maxlen + 1):
            la = left[a]
            if not la.any():
                continue
            for b in range(self.maxlen + 1 - a):
                rb = right[b]
                if not rb.any():
                    continue
                out[a + b] |= (la[:, None] & rb[None, :]).ravel()
        return out

    def positive_closure(self, levels):
        # squaring doubles the number of factors per pass, so the fixpoint
        # arrives in logarithmically many concatenations
        reached = [lv.copy() for lv in levels]
        while True:
            grown = self._concat(reached, reached)
            changed = False
            for b in range(self.maxlen + 1):
                new = reached[b] | grown[b]
                if not np.array_equal(new, reached[b]):
                    changed = True
                reached[b] = new
            if not changed:
                return reached

    def _per_word(self, levels, builder):
        out = self.empty()
        for b in range(self.maxlen + 1):
            for value in np.flatnonzero(levels[b]):
                builder(self.word_of(b, int(value)), out)
        return out

    def powers(self, levels):
        def build(word, out):
            if not word:
                out[0][0] = True
                return
            x = word
            while len(x) <= self.maxlen:
                out[len(x)][self.value(x)] = True
                x += word

        return self._per_word(levels, build)

    def fractional_powers(self, levels):
        def build(word, out):
            if not word:
                out[0][0] = True
                return
            power = word
            while len(power) <= self.maxlen:
                for i in range(len(word) + 1):
                    piece = power + word[:i]
                    if len(piece) <= self.maxlen:
                        out[len(piece)][self.value(piece)] = True
                power += word

        return self._per_word(levels, build)

    def _closure_tail(self, levels, tail: str) -> str:
        if tail == TAIL_FULL:
            return TAIL_FULL
        if not any(lv.any() for lv in levels[1:]) and tail == TAIL_EMPTY:
            return TAIL_EMPTY
        # a full run of consecutive levels m..2m-1 concatenates to cover
        # every longer length, so the closure holds everything out there
        for m in range(1, self.maxlen // 2 + 2):
            if 2 * m - 1 > self.maxlen:
                break
            if all(levels[b].all() for b in range(m, 2 * m)):
                return TAIL_FULL
        return TAIL_OTHER

    def letters_only(self, letters: frozenset[str]):
        """Levels of the language of all words over a letter subset."""
        mask = np.array([ch in letters for ch in self.alphabet.letters], dtype=bool)
        out = [np.ones(1, dtype=bool)]
        for _ in range(self.maxlen):
            out.append((out[-1][:, None] & mask[None, :]).ravel())
        return out

    def apply(self, op: str, state):
        levels, tail, shape, pumps = state
        if op == "c":
            flipped = {TAIL_EMPTY: TAIL_FULL, TAIL_FULL: TAIL_EMPTY, TAIL_OTHER: TAIL_OTHER}
            return self.complement(levels), flipped[tail], _SHAPE_COMPLEMENT[shape], ()
        if op == "r":
            return self.reverse(levels), tail, _SHAPE_REVERSE.get(shape, shape), pumps
        if op in "psfwq":
            witnessed = any(lv.any() for lv in levels) or tail == TAIL_FULL
            new_shape = _affix_shape(op, shape)
            if witnessed and (tail == TAIL_FULL or (op, shape) in _SATURATING):
                return self.full(), TAIL_FULL, new_shape, pumps
            # structural shortcuts: on an operand already closed the right
            # way the operation is the identity, and on a one-sided ideal
            # the missing top-level witnesses are prefixes of generators
            # that live low in the fragment, so the result is exact and
            # the tail kind survives
            if (
                (op == "p" and shape in (SH_PREF, SH_FACT, SH_SUBW))
                or (op == "s" and shape in (SH_SUFF, SH_FACT, SH_SUBW))
                or (op == "f" and shape in (SH_FACT, SH_SUBW))
                or (op == "w" and shape == SH_SUBW)
            ):
                return [lv.copy() for lv in levels], tail, shape, pumps
            if op in "pq" and shape == SH_RID:
                return self.prefixes(levels), tail, SH_PREF, pumps
            if op == "s" and shape == SH_LID:
                return self.suffixes(levels), tail, SH_SUFF, pumps
            if op == "p":
                out = self.prefixes(levels)
            elif op == "q":
                out = self.prefixes(levels, proper=True)
            elif op == "s":
                out = self.suffixes(levels)
            elif op == "f":
                out = self.prefixes(self.suffixes(levels))
            else:
                out = self.subwords(levels)
            if op == "w" and pumps:
                # a cycle through all these letters pumps to arbitrarily
                # many interleavings, so their whole star is in the image
                if any(set(group) >= set(self.alphabet.letters) for group in pumps):
                    return self.full(), TAIL_FULL, new_shape, pumps
                for group in pumps:
                    extra = self.letters_only(frozenset(group))
                    out = [lv | ex for lv, ex in zip(out, extra)]
            if tail == TAIL_OTHER and all(
                out[b].all() for b in range(1, max(2, self.maxlen - 3))
            ):
                # full through all but the top few levels: a language whose
                # automaton is smaller than that pumps to the full language
                # (the top levels themselves are blind to longer witnesses)
                return self.full(), TAIL_FULL, new_shape, pumps
            return out, tail, new_shape, pumps
        if op in "ke":
            out = self.positive_closure(levels)
            if op == "k":
                out[0] = out[0].copy()
                out[0][0] = True
            new_shape = SH_SUBW if shape == SH_SUBW else (
                SH_SUP if (shape == SH_SUP and op == "e") else SH_NONE
            )
            return out, self._closure_tail(out, tail), new_shape, pumps
        if op in "tn":
            out = self.powers(levels) if op == "t" else self.fractional_powers(levels)
            if tail == TAIL_EMPTY and not any(lv.any() for lv in out[1:]):
                return out, TAIL_EMPTY, SH_NONE, pumps
            return out, TAIL_FULL if tail == TAIL_FULL else TAIL_OTHER, SH_NONE, pumps
        raise ValueError(f"unknown operation letter {op!r}")


# padding caps per alphabet size keep the enlarged universes tractable;
# words without closure letters get more room because their level arrays
# are never multiplied by the concatenation fixpoint
_PAD_CAP = {1: 40, 2: 14, 3: 8}
_PAD_CAP_AFFIX = {1: 40, 2: 16, 3: 9, 4: 8}


def _padded_cutoff(word: str, maxlen: int, alphabet_size: int) -> int:
    # every affix operation may need witnesses a few levels past the
    # cutoff (bounded by the state count of the stage's minimal
    # automaton), and complements of closures push further still
    pad = 2 + 3 * len(word)
    caps = _PAD_CAP if any(ch in "ketn" for ch in word) else _PAD_CAP_AFFIX
    return maxlen + min(pad, caps.get(alphabet_size, 4))


def true_fragment(word: str, lang: BoundedLang, pad: int | None = None) -> BoundedLang:
    """The words of word(L) up to the cutoff, for L the finite language.

    Evaluated at an enlarged internal cutoff so that complements really
    contain the long words they should; see the module docstring."""
    if pad is None:
        worklen = _padded_cutoff(word, lang.maxlen, len(lang.alphabet))
    else:
        worklen = lang.maxlen + pad
    level_space = _LevelSpace(lang.alphabet, worklen)
    levels = level_space.empty()
    for w in lang.words:
        levels[len(w)][level_space.value(w)] = True
    state = (levels, TAIL_EMPTY, SH_NONE, ())
    for op in reversed(word):
        state = level_space.apply(op, state)
    out = []
    for b in range(lang.maxlen + 1):
        for value in np.flatnonzero(state[0][b]):
            out.append(level_space.word_of(b, int(value)))
    return BoundedLang(lang.alphabet, lang.maxlen, frozenset(out))


def true_fragment_mask(word: str, mask: int, space: _Space) -> int:
    lang = space.to_lang(mask)
    return space._mask_of(true_fragment(word, lang).words)


# ---------------------------------------------------------------------------
# randomized identity checking


LETTERS = "abcdefghi"
DEFAULT_LETTERS = LETTERS


def _corner_masks(space: _Space) -> list[int]:
    # the trivial class, bounded: empty, {eps}, all words, all nonempty words
    corners = [0, 1, space.universe, space.universe ^ 1]
    if space.base >= 1 and space.maxlen >= 1:
        corners.append(1 << space.index[space.alphabet.letters[0]])
    if space.maxlen >= 2:
        corners.append(1 << space.index[space.words[space.offsets[2]]])
    return corners


def sample_languages(alphabet: Alphabet, maxlen: int, trials: int, seed: int) -> list[BoundedLang]:
    """The corner languages followed by `trials` random ones (seeded)."""
    space = space_for(alphabet, maxlen)
    rng = random.Random(seed)
    masks = _corner_masks(space)
    masks.extend(rng.getrandbits(space.size) for _ in range(trials))
    return [space.to_lang(m) for m in masks]


@dataclass(frozen=True)
class Report:
    """Outcome of a randomized identity or inclusion check."""

    relation: str  # "IDENTITY" or "INCLUSION"
    lhs: str
    rhs: str
    trials: int
    passed: bool
    counterexample: tuple[str, ...] | None = None

    @property
    def line(self) -> str:
        text = (
            f"{self.relation} {self.lhs}={self.rhs} trials={self.trials} "
            f"result={'PASS' if self.passed else 'FAIL'}"
        )
        if self.counterexample is not None:
            text += f" counterexample={','.join(self.counterexample) or 'empty'}"
        return text


def _check(relation: str, lhs: str, rhs: str, trials: int, maxlen: int, alphabet_size: int, seed: int) -> Report:
    alphabet = Alphabet(DEFAULT_LETTERS[:alphabet_size])
    space = space_for(alphabet, maxlen)
    rng = random.Random(seed)
    masks = _corner_masks(space)
    masks.extend(rng.getrandbits(space.size) for _ in range(trials))
    for mask in masks:
        left = space.apply_word(lhs, mask)
        right = space.apply_word(rhs, mask)
        bad = (left != right) if relation == "IDENTITY" else bool(left & ~right)
        if bad:
            witness = tuple(sorted(space.to_lang(mask).words, key=lambda w: (len(w), w)))
            return Report(relation, lhs, rhs, trials, False, witness)
    return Report(relation, lhs, rhs, trials, True)


def check_identity(lhs: str, rhs: str, trials: int = 100, maxlen: int = 5,
                   alphabet_size: int = 2, seed: int = 0) -> Report:
    """Compare lhs(L) and rhs(L) as bounded sets over sampled languages.

    A failure report carries the first counterexample language; a pass
    only means the identity survived the sample.
    """
    return _check("IDENTITY", lhs, rhs, trials, maxlen, alphabet_size, seed)


def check_inclusion(lhs: str, rhs: str, trials: int = 100, maxlen: int = 5,
                    alphabet_size: int = 2, seed: int = 0) -> Report:
    """Check lhs(L) is a subset of rhs(L) over sampled languages."""
    return _check("INCLUSION", lhs, rhs, trials, maxlen, alphabet_size, seed)


def _dfa_levels(dfa: Dfa, level_space: _LevelSpace):
    """Acceptance vector of every word up to the working cutoff, computed
    by propagating reached states level by level."""
    delta = np.array(dfa.delta, dtype=np.int64)
    final = np.zeros(dfa.num_states, dtype=bool)
    for q in dfa.finals:
        final[q] = True
    states = np.array([dfa.initial], dtype=np.int64)
    levels = [final[states].copy()]
    for _ in range(level_space.maxlen):
        states = delta[states].ravel()
        levels.append(final[states])
    return levels


def _dfa_pumps(dfa: Dfa) -> tuple[frozenset[str], ...]:
    """Letter sets labeling the strongly connected pieces of the trim
    automaton.  Any word over such a set is a subword of accepted words,
    arbitrarily often repeated."""
    from .automata import accessible_states, coaccessible_states

    live = accessible_states(dfa) & coaccessible_states(dfa)
    succs = {q: {t for t in dfa.delta[q] if t in live} for q in live}
    preds: dict[int, set[int]] = {q: set() for q in live}
    for q, ts in succs.items():
        for t in ts:
            preds[t].add(q)

    order: list[int] = []
    seen: set[int] = set()
    for root in live:
        if root in seen:
            continue
        stack = [(root, iter(succs[root]))]
        seen.add(root)
        while stack:
            node, it = stack[-1]
            advanced = False
            for succ in it:
                if succ not in seen:
                    seen.add(succ)
                    stack.append((succ, iter(succs[succ])))
                    advanced = True
                    break
            if not advanced:
                order.append(node)
                stack.pop()

    sccs: list[set[int]] = []
    assigned: set[int] = set()
    for root in reversed(order):
        if root in assigned:
            continue
        component = {root}
        frontier = [root]
        assigned.add(root)
        while frontier:
            node = frontier.pop()
            for pred in preds[node]:
                if pred not in assigned:
                    assigned.add(pred)
                    component.add(pred)
                    frontier.append(pred)
        sccs.append(component)

    pumps = []
    for scc in sccs:
        letters = {
            letter
            for q in scc
            for i, letter in enumerate(dfa.alphabet)
            if dfa.delta[q][i] in scc
        }
        if letters:
            pumps.append(frozenset(letters))
    # keep only maximal sets; subsets add nothing
    pumps.sort(key=len, reverse=True)
    kept: list[frozenset[str]] = []
    for group in pumps:
        if not any(group <= other for other in kept):
            kept.append(group)
    return tuple(kept)


def _dfa_tail(dfa: Dfa, worklen: int) -> str:
    """Tail kind of the automaton's language past the working cutoff.

    An n-state automaton's finite language has no word of length >= n, so
    once the cutoff is past the state count the tail is empty iff the
    language is finite and full iff the complement is finite."""
    from .automata import complement, is_finite

    if worklen < dfa.num_states:
        return TAIL_OTHER
    if is_finite(dfa):
        return TAIL_EMPTY
    if is_finite(complement(dfa)):
        return TAIL_FULL
    return TAIL_OTHER


def oracle_agrees_with_automata(dfa: Dfa, word: str, maxlen: int) -> bool:
    """Cross-engine validation: the automaton chain and the oracle's
    whole-language evaluation must produce the same words up to the
    cutoff.  Only meaningful when the automaton's language is determined
    by its fragment at the oracle's working cutoff, which holds for the
    small automata this is used on."""
    from .langops import apply_word as apply_word_dfa

    worklen = _padded_cutoff(word, maxlen, len(dfa.alphabet))
    result_dfa = apply_word_dfa(word, dfa)
    via_automata = _dfa_levels(result_dfa, _LevelSpace(dfa.alphabet, maxlen))
    level_space = _LevelSpace(dfa.alphabet, worklen)
    state = (_dfa_levels(dfa, level_space), _dfa_tail(dfa, worklen), SH_NONE, _dfa_pumps(dfa))
    for op in reversed(word):
        state = level_space.apply(op, state)
    return all(np.array_equal(state[0][b], via_automata[b]) for b in range(maxlen + 1))
