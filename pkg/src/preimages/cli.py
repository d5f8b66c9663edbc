"""Command-line interface.

Exit codes: 0 = yes, 1 = no, 2 = unknown (budget- or method-limited),
3 = usage error, 4 = input/file error, 5 = internal error.  Every witness is
re-verified before it is printed; a verification failure is an internal
error.  The node budget and the oracle state cap honor the environment
variables PREIMAGES_BUDGET and PREIMAGES_ORACLE_CAP unless flags override
them.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Optional

from . import avoid as avoid_mod
from . import extend as extend_mod
from . import oracle as oracle_mod
from . import resize as resize_mod
from .automaton import (Automaton, StateSet, Word, apply_word, is_permutation_automaton,
                        is_strongly_connected, preimage_word, sink_state)
from .errors import (BudgetExceededError, DEFAULT_NODE_BUDGET, DEFAULT_ORACLE_STATE_CAP,
                     NotSynchronizingError)
from .fileformat import AutomatonFormatError, parse_automaton_file, serialize_automaton, serialize_gadget
from .gadgets import (CONSTRAINTS, DfaWithAcceptance, binarize, intersection_gadget,
                      large_extend_gadget, random_automaton, sink_binarize)
from .pairs import greedy_reset_word, is_synchronizing, minimal_rank_word, avoidable_state
from .extend import totally_extensible_synchronizing
from .report import (ANSWER_NO, ANSWER_UNKNOWN, ANSWER_YES, WitnessReport, witness_holds)

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3
EXIT_DATA = 4
EXIT_INTERNAL = 5

_GOAL_OF = {
    "extend": "extending",
    "extend-total": "totally-extending",
    "avoid": "avoiding",
    "resize": "resizing",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2, which we reserve
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"environment variable {name} must be an integer, got {raw!r}")


def _parse_subset(aut: Automaton, text: str) -> StateSet:
    text = text.strip()
    if text == "":
        return StateSet.empty(aut.n)
    try:
        states = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"bad subset {text!r}: expected comma-separated state indices")
    return aut.state_set(states)


def _classification(aut: Automaton, want_sync: bool) -> dict:
    from .pairs import known_synchronizing

    sync = known_synchronizing(aut)
    if sync is None and want_sync:
        sync = is_synchronizing(aut)
    return {
        "strongly_connected": is_strongly_connected(aut),
        "synchronizing": sync,
        "permutation": is_permutation_automaton(aut),
        "sink_state": sink_state(aut),
    }


def _decide(aut: Automaton, s: StateSet, problem: str, method: str, budget: int,
            oracle_cap: int, want_witness: bool, max_len: Optional[int], stats: dict):
    """Returns (answer, word, used_method, shortest_known, note)."""
    goal = _GOAL_OF[problem]

    def run_oracle():
        hit = oracle_mod.oracle_shortest(aut, s, goal, node_limit=budget, state_cap=oracle_cap)
        return (ANSWER_YES, hit[0], "oracle", True, None) if hit else (ANSWER_NO, None, "oracle", True, None)

    if method == "oracle":
        return run_oracle()

    oracle_allowed = method == "auto" and aut.n <= oracle_cap

    if problem == "extend":
        try:
            word = extend_mod.shortest_extending_word_small(aut, s, budget=budget, stats=stats)
        except BudgetExceededError:
            if oracle_allowed:
                return run_oracle()
            return ANSWER_UNKNOWN, None, "poly", False, "node budget exceeded"
        if word is None:
            return ANSWER_NO, None, "poly", True, None
        return ANSWER_YES, word, "poly", True, None

    if problem == "resize":
        if method == "auto" and not want_witness and max_len is None and is_synchronizing(aut):
            decision = resize_mod.resizable_decision_fast(aut, s)
            return (ANSWER_YES if decision else ANSWER_NO), None, "fast-path", True, None
        word = resize_mod.shortest_resizing_word(aut, s, stats=stats)
        if word is None:
            return ANSWER_NO, None, "poly", True, None
        return ANSWER_YES, word, "poly", True, None

    if problem == "extend-total":
        if is_synchronizing(aut):
            got = totally_extensible_synchronizing(aut, s, witness=want_witness or max_len is not None)
            if isinstance(got, tuple):
                decision, word = got
            else:
                decision, word = got, None
            if not decision:
                return ANSWER_NO, None, "fast-path", True, None
            return ANSWER_YES, word, "fast-path", False, None
        try:
            word = extend_mod.totally_extending_word_small(aut, s, budget=budget, stats=stats)
        except BudgetExceededError:
            if oracle_allowed:
                return run_oracle()
            return ANSWER_UNKNOWN, None, "poly", False, "node budget exceeded"
        if word is None:
            return ANSWER_NO, None, "poly", True, None
        return ANSWER_YES, word, "poly", False, None

    if problem == "avoid":
        if s.size == 1 and not want_witness and max_len is None:
            decision = avoidable_state(aut, next(iter(s)))
            return (ANSWER_YES if decision else ANSWER_NO), None, "poly", False, None
        try:
            word = avoid_mod.avoiding_word(aut, s, budget=budget, stats=stats)
        except BudgetExceededError:
            if oracle_allowed:
                return run_oracle()
            return ANSWER_UNKNOWN, None, "poly", False, "node budget exceeded"
        if word is None:
            return ANSWER_NO, None, "poly", True, None
        return ANSWER_YES, word, "poly", False, None

    raise ValueError(f"unknown problem {problem!r}")


def _apply_max_len(aut: Automaton, s: StateSet, problem: str, max_len: int, answer: str,
                   word: Optional[Word], used: str, shortest_known: bool, budget: int,
                   oracle_cap: int, method: str):
    """Resolve the bounded-length variant honestly."""
    if answer != ANSWER_YES:
        return answer, word, used, None
    if shortest_known:
        if len(word) <= max_len:
            return ANSWER_YES, word, used, None
        return ANSWER_NO, None, used, "shortest witness exceeds the length bound"
    if word is not None and len(word) <= max_len:
        return ANSWER_YES, word, used, None
    if method == "auto" and aut.n <= oracle_cap:
        hit = oracle_mod.oracle_shortest(aut, s, _GOAL_OF[problem],
                                         node_limit=budget, state_cap=oracle_cap)
        if hit is not None and hit[1] <= max_len:
            return ANSWER_YES, hit[0], "oracle", None
        return ANSWER_NO, None, "oracle", "shortest witness exceeds the length bound"
    return (ANSWER_UNKNOWN, None, used,
            "method does not produce shortest witnesses; length bound undecided")


def _emit(report: WitnessReport, as_json: bool, k: int) -> None:
    if as_json:
        sys.stdout.write(report.to_json())
        return
    lines = [f"problem: {report.problem}", f"answer: {report.answer}"]
    if report.method:
        lines.append(f"method: {report.method}")
    if report.witness is not None:
        lines.append(f"witness: {report.witness} (length {report.witness_length})")
    if report.preimage_size is not None:
        lines.append(f"preimage size: {report.preimage_size} (|S| = {report.subset_size})")
    if report.note:
        lines.append(f"note: {report.note}")
    sys.stdout.write("\n".join(lines) + "\n")


def _exit_code(answer: str) -> int:
    return {ANSWER_YES: EXIT_YES, ANSWER_NO: EXIT_NO, ANSWER_UNKNOWN: EXIT_UNKNOWN}[answer]


def _cmd_check(args) -> int:
    aut = parse_automaton_file(args.file)
    s = _parse_subset(aut, args.subset)
    budget = args.budget if args.budget is not None else _env_int("PREIMAGES_BUDGET", DEFAULT_NODE_BUDGET)
    cap = args.oracle_cap if args.oracle_cap is not None else _env_int(
        "PREIMAGES_ORACLE_CAP", DEFAULT_ORACLE_STATE_CAP)
    stats: dict = {}
    t0 = time.perf_counter()
    try:
        answer, word, used, shortest_known, note = _decide(
            aut, s, args.problem, args.method, budget, cap, args.witness, args.max_len, stats)
    except BudgetExceededError as exc:
        answer, word, used, shortest_known, note = ANSWER_UNKNOWN, None, args.method, False, str(exc)

    if args.max_len is not None and answer != ANSWER_UNKNOWN:
        answer, word, used, len_note = _apply_max_len(
            aut, s, args.problem, args.max_len, answer, word, used, shortest_known,
            budget, cap, args.method)
        note = note or len_note

    preimage_size = None
    witness_text = None
    witness_length = None
    if word is not None and answer == ANSWER_YES:
        if not witness_holds(aut, s, args.problem, word):
            raise RuntimeError(f"internal error: witness {word.text(aut.k)!r} failed re-verification")
        preimage_size = preimage_word(aut, s, word).size
        if args.witness:
            witness_text = word.text(aut.k)
            witness_length = len(word)

    if args.timing:
        stats["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    report = WitnessReport(
        problem=args.problem,
        answer=answer,
        subset_size=s.size,
        method=used,
        witness=witness_text,
        witness_length=witness_length,
        preimage_size=preimage_size,
        stats=stats,
        classification=_classification(aut, want_sync=False),
        max_len=args.max_len,
        note=note,
    )
    _emit(report, args.json, aut.k)
    return _exit_code(answer)


def _cmd_oracle(args) -> int:
    aut = parse_automaton_file(args.file)
    s = _parse_subset(aut, args.subset)
    budget = args.budget if args.budget is not None else _env_int("PREIMAGES_BUDGET", DEFAULT_NODE_BUDGET)
    cap = args.oracle_cap if args.oracle_cap is not None else _env_int(
        "PREIMAGES_ORACLE_CAP", DEFAULT_ORACLE_STATE_CAP)
    problem = {v: p for p, v in _GOAL_OF.items()}[args.goal]
    try:
        hit = oracle_mod.oracle_shortest(aut, s, args.goal, node_limit=budget, state_cap=cap)
    except BudgetExceededError as exc:
        report = WitnessReport(problem=problem, answer=ANSWER_UNKNOWN, subset_size=s.size,
                               method="oracle", note=str(exc),
                               classification=_classification(aut, want_sync=False))
        _emit(report, args.json, aut.k)
        return EXIT_UNKNOWN

    answer = ANSWER_YES if hit else ANSWER_NO
    word = hit[0] if hit else None
    if args.max_len is not None and word is not None and len(word) > args.max_len:
        answer, word = ANSWER_NO, None
    witness_text = witness_length = preimage_size = None
    if word is not None:
        if not witness_holds(aut, s, problem, word):
            raise RuntimeError("internal error: oracle witness failed re-verification")
        preimage_size = preimage_word(aut, s, word).size
        if args.witness:
            witness_text = word.text(aut.k)
            witness_length = len(word)
    report = WitnessReport(problem=problem, answer=answer, subset_size=s.size, method="oracle",
                           witness=witness_text, witness_length=witness_length,
                           preimage_size=preimage_size, max_len=args.max_len,
                           classification=_classification(aut, want_sync=False))
    _emit(report, args.json, aut.k)
    return _exit_code(answer)


def _cmd_classify(args) -> int:
    aut = parse_automaton_file(args.file)
    info = _classification(aut, want_sync=True)
    if args.json:
        import json

        sys.stdout.write(json.dumps(info, sort_keys=True, indent=2) + "\n")
    else:
        for key in ("strongly_connected", "synchronizing", "permutation"):
            sys.stdout.write(f"{key.replace('_', '-')}: {'yes' if info[key] else 'no'}\n")
        sink = info["sink_state"]
        sys.stdout.write(f"sink-state: {sink if sink is not None else 'none'}\n")
    return EXIT_YES


def _cmd_rank(args) -> int:
    aut = parse_automaton_file(args.file)
    result = minimal_rank_word(aut)
    if args.json:
        import json

        payload = {
            "rank": result.rank,
            "word": result.word.text(aut.k),
            "word_length": len(result.word),
            "image": sorted(result.image),
        }
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(f"rank: {result.rank}\nword: {result.word.text(aut.k)}\n"
                         f"image: {result.image!r}\n")
    return EXIT_YES


def _cmd_reset(args) -> int:
    aut = parse_automaton_file(args.file)
    if args.method == "greedy":
        word = greedy_reset_word(aut)
    else:
        cap = args.oracle_cap if args.oracle_cap is not None else _env_int(
            "PREIMAGES_ORACLE_CAP", DEFAULT_ORACLE_STATE_CAP)
        hit = oracle_mod.oracle_shortest_reset(aut, state_cap=cap)
        word = hit[0] if hit else None
    if word is None:
        sys.stdout.write("answer: no (not synchronizing)\n")
        return EXIT_NO
    if apply_word(aut, StateSet.full(aut.n), word).size != 1:
        raise RuntimeError("internal error: reset word failed re-verification")
    sys.stdout.write(f"answer: yes\nword: {word.text(aut.k)}\nlength: {len(word)}\n")
    return EXIT_YES


def _cmd_gadget(args) -> int:
    if args.kind != "intersection" and not args.file:
        raise ValueError(f"gadget {args.kind} needs an automaton file")
    if args.kind == "intersection":
        if not args.dfa:
            raise ValueError("gadget intersection needs at least one --dfa FILE INITIAL ACCEPTING")
        dfas = []
        for path, initial, accepting in args.dfa:
            aut = parse_automaton_file(path)
            acc = _parse_subset(aut, accepting)
            dfas.append(DfaWithAcceptance(aut, int(initial), acc))
        out = intersection_gadget(dfas)
    elif args.kind == "binarize":
        aut = parse_automaton_file(args.file)
        out = binarize(aut, _parse_subset(aut, args.subset))
    elif args.kind == "sink":
        aut = parse_automaton_file(args.file)
        out = sink_binarize(aut)
    else:  # large-extend
        aut = parse_automaton_file(args.file)
        out = large_extend_gadget(aut, _parse_subset(aut, args.subset), args.target)
    text = serialize_gadget(out)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def _cmd_random(args) -> int:
    aut = random_automaton(args.states, args.letters, args.seed, args.constraint)
    sys.stdout.write(serialize_automaton(aut))
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="preimages",
                     description="Decide and witness preimage problems for complete DFAs")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide extend / extend-total / avoid / resize")
    check.add_argument("file")
    check.add_argument("--subset", required=True, help="comma-separated state indices")
    check.add_argument("--problem", required=True, choices=("extend", "extend-total", "avoid", "resize"))
    check.add_argument("--method", default="auto", choices=("auto", "poly", "oracle"))
    check.add_argument("--max-len", type=int, default=None)
    check.add_argument("--witness", action="store_true")
    check.add_argument("--json", action="store_true")
    check.add_argument("--budget", type=int, default=None)
    check.add_argument("--oracle-cap", type=int, default=None)
    check.add_argument("--timing", action="store_true")
    check.set_defaults(func=_cmd_check)

    orc = sub.add_parser("oracle", help="exhaustive shortest-word queries (desk scale)")
    orc.add_argument("file")
    orc.add_argument("--subset", required=True)
    orc.add_argument("--goal", required=True,
                     choices=("extending", "totally-extending", "avoiding", "resizing"))
    orc.add_argument("--max-len", type=int, default=None)
    orc.add_argument("--witness", action="store_true")
    orc.add_argument("--json", action="store_true")
    orc.add_argument("--budget", type=int, default=None)
    orc.add_argument("--oracle-cap", type=int, default=None)
    orc.set_defaults(func=_cmd_oracle)

    classify = sub.add_parser("classify", help="structural flags of an automaton")
    classify.add_argument("file")
    classify.add_argument("--json", action="store_true")
    classify.set_defaults(func=_cmd_classify)

    rank = sub.add_parser("rank", help="minimal rank and a witnessing word")
    rank.add_argument("file")
    rank.add_argument("--json", action="store_true")
    rank.set_defaults(func=_cmd_rank)

    reset = sub.add_parser("reset", help="reset word (greedy or exhaustive-shortest)")
    reset.add_argument("file")
    reset.add_argument("--method", default="greedy", choices=("greedy", "oracle"))
    reset.add_argument("--oracle-cap", type=int, default=None)
    reset.set_defaults(func=_cmd_reset)

    gadget = sub.add_parser("gadget", help="reduction constructions")
    gadget.add_argument("kind", choices=("intersection", "binarize", "sink", "large-extend"))
    gadget.add_argument("file", nargs="?")
    gadget.add_argument("--dfa", nargs=3, action="append", metavar=("FILE", "INITIAL", "ACCEPTING"),
                        help="intersection input (repeatable)")
    gadget.add_argument("--subset", default="")
    gadget.add_argument("--target", type=int, default=0, help="anchor state for large-extend")
    gadget.add_argument("--output", default=None)
    gadget.set_defaults(func=_cmd_gadget)

    rand = sub.add_parser("random", help="seeded random automaton")
    rand.add_argument("--states", type=int, required=True)
    rand.add_argument("--letters", type=int, required=True)
    rand.add_argument("--seed", type=int, required=True)
    rand.add_argument("--constraint", default="none", choices=CONSTRAINTS)
    rand.set_defaults(func=_cmd_random)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (AutomatonFormatError, FileNotFoundError, IsADirectoryError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DATA
    except (ValueError, NotSynchronizingError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except BudgetExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_UNKNOWN
    except RuntimeError as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
