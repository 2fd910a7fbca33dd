"""Orbits of regular languages under closure, complement and related operations.

The package is organized around five cooperating engines:

- :mod:`langorbits.automata` -- complete DFAs/NFAs, minimization, canonical forms;
- :mod:`langorbits.langops`  -- the language operations as automaton constructions;
- :mod:`langorbits.oracle`   -- exact bounded-length brute force, used to validate
  every identity the other engines rely on;
- :mod:`langorbits.orbit`    -- concrete orbits of a language under operation sets;
- :mod:`langorbits.rewrite`  -- symbolic enumeration of operation words modulo a
  rewrite system, reproducing the known orbit-size bounds.

:mod:`langorbits.corpus` bundles witness automata with known orbit sizes and
:mod:`langorbits.cli` exposes everything as a command line tool.
"""

from .automata import (
    Alphabet,
    Dfa,
    Nfa,
    canonical_key,
    canonicalize,
    determinize,
    dfa_from_dict,
    dfa_to_dict,
    equivalent,
    is_empty,
    is_universal,
    accepts_epsilon,
    minimize,
)
from .langops import OPS, CLOSURE_OPS, apply, apply_word, minimal_alphabet
from .oracle import BoundedLang, apply_bounded, apply_bounded_word, check_identity, check_inclusion
from .orbit import OrbitResult, compute_orbit, export_dot, verify_table1
from .rewrite import EnumerationResult, RuleSet, default_rules, enumerate_words, normalize, soundness_sweep
from . import corpus

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "Dfa",
    "Nfa",
    "OPS",
    "CLOSURE_OPS",
    "BoundedLang",
    "OrbitResult",
    "EnumerationResult",
    "RuleSet",
    "accepts_epsilon",
    "apply",
    "apply_bounded",
    "apply_bounded_word",
    "apply_word",
    "canonical_key",
    "canonicalize",
    "check_identity",
    "check_inclusion",
    "compute_orbit",
    "corpus",
    "default_rules",
    "determinize",
    "dfa_from_dict",
    "dfa_to_dict",
    "enumerate_words",
    "equivalent",
    "export_dot",
    "is_empty",
    "is_universal",
    "minimal_alphabet",
    "minimize",
    "normalize",
    "soundness_sweep",
    "verify_table1",
]
