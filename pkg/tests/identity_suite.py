"""The catalog of algebraic facts both engines must satisfy, in one place.

Three families:

- plain identities lhs == rhs, checkable in the truncated model (their
  derivations survive truncation) and on random automata;
- identities that hold up to the empty word (lhs == rhs plus epsilon);
- facts needing whole-language semantics: absorbing words land in the
  trivial class, and the factor closure or its complement's factor
  closure is everything.
"""

import random

from langorbits.automata import Alphabet
from langorbits.oracle import LETTERS, space_for

CLOSURE_WORDS = ["k", "e", "p", "s", "f", "w",
                 "kp", "ks", "kf", "kw", "ep", "es", "ef", "ew"]

PLAIN_IDENTITIES = (
    [("rp", "sr"), ("rs", "pr"), ("rf", "fr"), ("rc", "cr"), ("rk", "kr"), ("rw", "wr")]
    + [("ps", "f"), ("sp", "f"), ("pf", "f"), ("fp", "f"), ("sf", "f"), ("fs", "f")]
    + [("pw", "w"), ("wp", "w"), ("sw", "w"), ("ws", "w"), ("fw", "w"), ("wf", "w")]
    + [("rkw", "kw"), ("ek", "k"), ("ke", "k"), ("fks", "pks"), ("fkp", "skp")]
    + [("rkf", "kf"), ("skf", "kf"), ("pkf", "kf"), ("fkf", "kf")]
    + [(a + b + a, a + b) for a in "ke" for b in "psfw"]
    + [(b + a + b, a + b) for a in "ke" for b in "psfw"]
    + [(x + "c" + y + "c" + x + "c" + y, x + "c" + y)
       for x in CLOSURE_WORDS for y in CLOSURE_WORDS]
    + [(a + b + "c" + a + "c" + a + "c" + a, a + b + "c" + a) for a in "ke" for b in "psfw"]
    + [(b + "c" + b + "c" + b + "c" + a + b, b + "c" + a + b) for a in "ke" for b in "psfw"]
    + [(a + b + "c" + b + "c" + a + b + "c" + a + b, a + b + "c" + a + b)
       for a in "ke" for b in "psfw"]
    + [("ecece", "cece")]
)

# these hold only in whole-language semantics (short subsequences of a
# star may need witnesses past any cutoff)
WHOLE_LANGUAGE_IDENTITIES = [("kw", "wk")]

# lhs(L) equals rhs(L) with the empty word added
EPSILON_ADJUSTED = (
    [("kckck", "ckck")]
    + [("kc" + b, "c" + b) for b in "psfw"]
    + [("kck" + b, "ck" + b) for b in "psfw"]
    + [("k" + b + "c" + b + "ck" + b, b + "c" + b + "ck" + b) for b in "psfw"]
)

INCLUSIONS = [("pcpckp", "kp"), ("t", "k")]

ABSORBING_WORDS = (
    [a + "c" + b for a in "psfw" for b in "psfw" if (a, b) not in (("p", "p"), ("s", "s"))]
    + [a + "ck" + b for a in "psfw" for b in "psfw" if (a, b) not in (("p", "p"), ("s", "s"))]
    + ["scskp", "pcpks"]
)


def suite_masks(alphabet_size: int, maxlen: int, trials: int, seed: int):
    alphabet = Alphabet(LETTERS[:alphabet_size])
    space = space_for(alphabet, maxlen)
    rng = random.Random(seed)
    masks = [0, 1, space.universe, space.universe ^ 1]
    masks.append(1 << space.index[alphabet.letters[0]])
    if maxlen >= 2:
        masks.append(1 << space.index[space.words[space.offsets[2]]])
    masks.extend(rng.getrandbits(space.size) for _ in range(trials))
    return space, masks


class SuiteEvaluator:
    """Memoized word evaluation over a fixed sample of languages."""

    def __init__(self, alphabet_size: int, maxlen: int = 5, trials: int = 100, seed: int = 7):
        self.space, self.masks = suite_masks(alphabet_size, maxlen, trials, seed)
        self.values = {"": list(self.masks)}

    def evaluate(self, word: str):
        got = self.values.get(word)
        if got is None:
            got = [self.space.apply(word[0], m) for m in self.evaluate(word[1:])]
            self.values[word] = got
        return got

    def equal(self, lhs: str, rhs: str) -> bool:
        return self.evaluate(lhs) == self.evaluate(rhs)

    def equal_mod_epsilon(self, lhs: str, rhs: str) -> bool:
        return [m | 1 for m in self.evaluate(lhs)] == [m | 1 for m in self.evaluate(rhs)]

    def epsilon_adjusted(self, lhs: str, rhs: str) -> bool:
        return self.evaluate(lhs) == [m | 1 for m in self.evaluate(rhs)]

    def included(self, lhs: str, rhs: str) -> bool:
        return all(u & ~v == 0 for u, v in zip(self.evaluate(lhs), self.evaluate(rhs)))
