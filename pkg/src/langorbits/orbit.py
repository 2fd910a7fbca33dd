"""Concrete orbits of a regular language under a set of operations.

The orbit of L under an operation set S is every language reachable from
L by composing operations of S.  It is computed by breadth-first closure
over canonical DFAs: children are deduplicated by canonical form, the
frontier is processed in discovery order and operations in the fixed
order ``k < e < c < p < f < s < w < r < q``, so the output is fully
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import corpus
from .automata import Alphabet, Dfa, canonicalize, equivalent
from .langops import apply, apply_word

ORBIT_OPS = "kecpfswrq"


class OrbitCapExceeded(RuntimeError):
    """The orbit grew past the configured cap; either the operation set
    has unbounded orbits (for example {p, t}) or something is wrong."""


def trivial_class(alphabet: Alphabet) -> dict[str, Dfa]:
    """Canonical DFAs of the four languages closed under every operation:
    the empty language, {eps}, all nonempty words, and all words."""
    n = len(alphabet)
    loop = (tuple([0] * n),)
    to_sink = (tuple([1] * n), tuple([1] * n))
    return {
        "empty": Dfa(alphabet, 0, frozenset(), loop),
        "epsilon": Dfa(alphabet, 0, frozenset({0}), to_sink),
        "sigma-plus": Dfa(alphabet, 0, frozenset({1}), to_sink),
        "sigma-star": Dfa(alphabet, 0, frozenset({0}), loop),
    }


def _trivial_kind(canonical: Dfa) -> str | None:
    for kind, dfa in trivial_class(canonical.alphabet).items():
        if canonical == dfa:
            return kind
    return None


@dataclass
class OrbitResult:
    """The orbit of one seed language.

    ``languages[i]`` is the canonical DFA of the i-th discovered language,
    ``witness_words[i]`` a shortest operation word generating it from the
    seed, and ``edges`` holds one ``(source, op, target)`` triple for every
    (language, operation) pair.
    """

    ops: str
    languages: list[Dfa]
    witness_words: list[str]
    edges: list[tuple[int, str, int]]
    trivial_members: dict[int, str] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.languages)


def compute_orbit(seed: Dfa, ops, cap: int = 10000) -> OrbitResult:
    """Breadth-first closure of {seed} under the given operation letters."""
    letters = "".join(sorted(set(ops), key=ORBIT_OPS.index))
    start = canonicalize(seed)
    index: dict[Dfa, int] = {start: 0}
    languages = [start]
    witnesses = [""]
    edges: list[tuple[int, str, int]] = []
    i = 0
    while i < len(languages):
        current = languages[i]
        for op in letters:
            child = canonicalize(apply(op, current))
            target = index.get(child)
            if target is None:
                if len(languages) >= cap:
                    raise OrbitCapExceeded(f"orbit cap exceeded (cap={cap})")
                target = len(languages)
                index[child] = target
                languages.append(child)
                witnesses.append(op + witnesses[i])
            edges.append((i, op, target))
        i += 1
    trivial = {}
    for j, dfa in enumerate(languages):
        kind = _trivial_kind(dfa)
        if kind is not None:
            trivial[j] = kind
    return OrbitResult(letters, languages, witnesses, edges, trivial)


# ---------------------------------------------------------------------------
# table verification for the figure1 witness


@dataclass(frozen=True)
class RowReport:
    word: str
    passed: bool

    @property
    def line(self) -> str:
        return f"row {self.word or 'id'}: {'PASS' if self.passed else 'FAIL'}"


def verify_table1(figure1_dfa: Dfa, rows: dict[str, frozenset[int]] | None = None) -> list[RowReport]:
    """Check each stored final-state row of the figure1 automaton: applying
    the row's operation word must equal the same automaton re-finaled with
    the row's state set."""
    if rows is None:
        rows = corpus.FIGURE1_ROWS
    reports = []
    for word in sorted(rows, key=lambda w: (len(w), w)):
        expected = Dfa(figure1_dfa.alphabet, figure1_dfa.initial, rows[word], figure1_dfa.delta)
        got = apply_word(word, figure1_dfa)
        reports.append(RowReport(word, equivalent(got, expected)))
    return reports


# ---------------------------------------------------------------------------
# DOT export


def export_dot(result: OrbitResult) -> str:
    """Render the orbit graph in DOT; node labels are witness words and
    members of the trivial class are doubly circled."""
    lines = ["digraph orbit {", "  rankdir=LR;"]
    for i, word in enumerate(result.witness_words):
        label = word if word else "\\u03b5"
        shape = ' peripheries=2' if i in result.trivial_members else ""
        lines.append(f'  n{i} [label="{label}"{shape}];')
    for src, op, dst in result.edges:
        lines.append(f'  n{src} -> n{dst} [label="{op}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
