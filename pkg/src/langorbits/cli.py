"""Command line surface for reproducible runs.

Exit codes: 0 on success, 1 when an expectation or check fails, 2 on
usage errors.  All reports go to standard output; identical invocations
(including seeds) produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus
from .automata import dfa_from_dict, equivalent
from .langops import apply_word, minimal_alphabet
from .oracle import check_identity, check_inclusion
from .orbit import compute_orbit, export_dot, verify_table1
from .rewrite import default_rules, enumerate_words, soundness_sweep


def _load_dfa(path: str):
    with open(path, encoding="utf-8") as handle:
        return dfa_from_dict(json.load(handle))


def _cmd_orbit(args) -> int:
    dfa = _load_dfa(args.dfa)
    result = compute_orbit(dfa, args.ops, cap=args.cap)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(export_dot(result))
    print(f"orbit size: {result.size}")
    return 0


def _cmd_enumerate(args) -> int:
    result = enumerate_words(args.ops)
    if args.log:
        with open(args.log, "w", encoding="utf-8") as handle:
            for word in sorted(result.log, key=lambda w: (len(w), w)):
                entry = result.log[word]
                target = "ABSORBED" if entry.status == "absorbed" else entry.result
                handle.write(f"{word}\t{target}\n")
    print(
        f"nontrivial={result.nontrivial_count} total={result.total_count} "
        f"longest={result.longest_examined}"
    )
    return 0


def _cmd_verify(args) -> int:
    try:
        lhs, rhs = args.identity.split("=", 1)
    except ValueError:
        print(f"malformed identity {args.identity!r}; expected LHS=RHS", file=sys.stderr)
        return 2
    check = check_inclusion if args.inclusion else check_identity
    report = check(lhs, rhs, trials=args.trials, maxlen=args.maxlen,
                   alphabet_size=args.alphabet, seed=args.seed)
    print(report.line)
    return 0 if report.passed else 1


def _cmd_witness(args) -> int:
    failures = 0

    def show(label: str, ok: bool):
        nonlocal failures
        failures += 0 if ok else 1
        return f"{label} {'PASS' if ok else 'FAIL'}"

    if args.name == "figure1":
        witness = corpus.figure1()
        rows = verify_table1(witness.dfa)
        ok_rows = sum(r.passed for r in rows)
        row_part = show(f"table1: {ok_rows}/{len(rows)} rows", ok_rows == len(rows))
        size = compute_orbit(witness.dfa, "pc").size
        orbit_part = show(f"orbit{{p,c}}={size}", size == witness.expected["orbit:pc"])
        print(f"{row_part}; {orbit_part}")
    elif args.name == "figure2":
        witness = corpus.figure2_witness()
        letters = len(minimal_alphabet(witness.dfa))
        alpha_part = show(f"alphabet={letters}", letters == witness.expected["minimal-alphabet-size"])
        size = compute_orbit(witness.dfa, "kcf").size
        orbit_part = show(f"orbit{{k,c,f}}={size}", size == witness.expected["orbit:kcf"])
        print(f"{alpha_part}; {orbit_part}")
    elif args.name == "abc":
        witness = corpus.single_word("abc")
        result = compute_orbit(witness.dfa, "kpsf")
        size_part = show(f"orbit{{k,p,s,f}}={result.size}", result.size == witness.expected["orbit:kpsf"])
        words_ok = frozenset(result.witness_words) == witness.expected["orbit-words:kpsf"]
        words_part = show("witness words", words_ok)
        print(f"{size_part}; {words_part}")
    elif args.name == "ln":
        witness = corpus.unary_ln(args.n)
        size = compute_orbit(witness.dfa, "q").size
        chain_ok = True
        if args.n > 2:
            smaller = corpus.unary_ln(args.n - 1)
            chain_ok = equivalent(apply_word("q", witness.dfa), smaller.dfa)
        size_part = show(f"orbit{{q}}={size}", size == args.n)
        chain_part = show("q-step", chain_ok)
        print(f"{size_part}; {chain_part}")
    else:
        print(f"unknown witness {args.name!r}", file=sys.stderr)
        return 2
    return 1 if failures else 0


def _cmd_crosscheck(args) -> int:
    result = enumerate_words(args.ops)
    report = soundness_sweep(result, trials=args.trials, seed=args.seed)
    print(report.line)
    for violation in report.violations[:10]:
        print(f"  {violation.word} -> {violation.entry.result or 'ABSORBED'} "
              f"fails on {{{','.join(violation.language)}}}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="langorbits")
    sub = parser.add_subparsers(dest="command", required=True)

    p_orbit = sub.add_parser("orbit", help="concrete orbit of a DFA under an operation set")
    p_orbit.add_argument("--dfa", required=True, help="path to a DFA JSON file")
    p_orbit.add_argument("--ops", required=True, help="operation letters, e.g. kcf")
    p_orbit.add_argument("--cap", type=int, default=10000)
    p_orbit.add_argument("--dot", help="write the orbit graph in DOT format")
    p_orbit.set_defaults(func=_cmd_orbit)

    p_enum = sub.add_parser("enumerate", help="symbolic enumeration of operation words")
    p_enum.add_argument("--ops", required=True)
    p_enum.add_argument("--log", help="write the simplification log")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_verify = sub.add_parser("verify", help="randomized oracle check of an identity")
    p_verify.add_argument("--identity", required=True, help='e.g. "ps=f"')
    p_verify.add_argument("--inclusion", action="store_true", help="check inclusion instead")
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--maxlen", type=int, default=5)
    p_verify.add_argument("--alphabet", type=int, default=2)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=_cmd_verify)

    p_witness = sub.add_parser("witness", help="run a bundled witness's expected checks")
    p_witness.add_argument("name", choices=["figure1", "figure2", "abc", "ln"])
    p_witness.add_argument("--n", type=int, default=5, help="size parameter for ln")
    p_witness.set_defaults(func=_cmd_witness)

    p_cross = sub.add_parser("crosscheck", help="oracle-validate an enumeration's rewrites")
    p_cross.add_argument("--ops", required=True)
    p_cross.add_argument("--trials", type=int, default=20)
    p_cross.add_argument("--seed", type=int, default=0)
    p_cross.set_defaults(func=_cmd_crosscheck)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
