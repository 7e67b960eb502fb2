"""Command-line entry point: ``stratarg <subcommand> ...``.

Exit codes: 0 yes/compliant/success, 1 no/violation, 2 usage, parse or bound error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .aims import Aim, Semantics, Side, verify_aim
from .agents import play_match
from .audit import audit_trace, render_text, report_to_json
from .corpus import FIXTURE_NAMES, GeneratorParams, fixture, random_split
from .errors import StratArgError
from .formats import TraceFile, dump_saf, dump_trace, load_split, parse_trace
from .framework import fmt_set, grounded_labeling, labeling, stable_extensions
from .game import GameState, MovePolicy, Standard, find_minimal_move, minimal_moves
from .search import GameTrace, winning_sequence, winning_strategy


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _labeling_lines(lab) -> list[str]:
    return [
        f"accepted {fmt_set(lab.accepted)}",
        f"rejected {fmt_set(lab.rejected)}",
        f"undecided {fmt_set(lab.undecided)}",
    ]


def cmd_semantics(args) -> int:
    af = load_split(args.af).framework
    if args.sem == "grounded":
        print("\n".join(_labeling_lines(grounded_labeling(af))))
        return 0
    exts = stable_extensions(af)
    print(f"stable extensions {len(exts)}")
    if args.enumerate:
        for i, ext in enumerate(exts, start=1):
            print(f"extension {i}")
            print("\n".join("  " + ln for ln in _labeling_lines(labeling(af, ext))))
    return 0


def cmd_verify(args) -> int:
    af = load_split(args.af).framework
    ok = verify_aim(af, Semantics(args.sem), Aim(args.aim), args.focal, Side.parse(args.side))
    print("yes" if ok else "no")
    return 0 if ok else 1


def _ids(text: str | None) -> frozenset[str]:
    if not text:
        return frozenset()
    return frozenset(t for t in text.replace(",", " ").split() if t)


def cmd_move(args) -> int:
    split = load_split(args.split)
    turn = Side.parse(args.turn)
    state = GameState(split, split.common | _ids(args.revealed), turn)
    if args.all_minimal:
        moves = minimal_moves(state)
        for mv in moves:
            print(mv)
        if not moves:
            print("none")
        return 0
    mv = find_minimal_move(state, MovePolicy.parse(args.policy))
    print(mv if mv is not None else "none")
    return 0


def _trace_file(trace: GameTrace, game: str) -> TraceFile:
    return TraceFile(game, trace.split.semantics, trace.split.aim, trace.moves, trace.winner)


def cmd_play(args) -> int:
    split = load_split(args.split)
    trace = play_match(split, MovePolicy.parse(args.agent_p), MovePolicy.parse(args.agent_o))
    text = dump_trace(_trace_file(trace, args.split))
    if args.out:
        Path(args.out).write_text(text)
    sys.stdout.write(text)
    return 0


def cmd_search_seq(args) -> int:
    split = load_split(args.split)
    trace = winning_sequence(split, Side.parse(args.winner), Standard(args.standard))
    if trace is None:
        print("none")
        return 1
    for mv in trace.moves:
        print(mv)
    print(f"winner {trace.winner.letter}")
    if args.out:
        Path(args.out).write_text(dump_trace(_trace_file(trace, args.split)))
    return 0


def cmd_search_strat(args) -> int:
    split = load_split(args.split)
    adversary = "minimal_only" if args.adversary == "minimal" else "all_effective"
    strategy = winning_strategy(split, Side.parse(args.side), adversary)
    if strategy is None:
        print("none")
        return 1
    print(f"strategy for {strategy.side.letter}: {len(strategy)} positions")
    for revealed, mv in strategy.moves.items():
        print(f"{fmt_set(revealed)} -> {fmt_set(mv.args)}")
    return 0


def cmd_audit(args) -> int:
    trace_path = Path(args.trace)
    tf = parse_trace(trace_path.read_text())
    if args.split:
        split = load_split(args.split)
    else:
        split = load_split(tf.game, base=trace_path.parent)
    split = replace(split, semantics=tf.semantics, aim=tf.aim)
    report = audit_trace(split, tf, Standard(args.standard))
    if args.format == "json":
        sys.stdout.write(report_to_json(report))
    else:
        sys.stdout.write(render_text(report, advisories=args.advisory))
    return 0 if report.compliant else 1


def cmd_gen(args) -> int:
    params = GeneratorParams(
        n_common=args.n_common,
        n_p=args.n_p,
        n_o=args.n_o,
        attack_probability=Fraction(args.p_att),
        seed=args.seed,
        acyclic_only=args.acyclic,
        semantics=Semantics(args.sem),
        aim=Aim(args.aim),
    )
    _emit(dump_saf(random_split(params)), args.out)
    return 0


def cmd_fixture(args) -> int:
    _emit(dump_saf(fixture(args.name)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stratarg", description="Strategic argumentation engine and auditor.")
    sub = parser.add_subparsers(dest="command", required=True)
    sems = [s.value for s in Semantics]
    aims = [a.value for a in Aim]
    standards = [s.value for s in Standard]
    sides = ["p", "o"]

    p = sub.add_parser("semantics", help="grounded labeling or stable extensions")
    p.add_argument("--af", required=True, help="framework file or fixture:<name>")
    p.add_argument("--sem", required=True, choices=sems)
    p.add_argument("--enumerate", action="store_true", help="list every stable extension")
    p.set_defaults(func=cmd_semantics)

    p = sub.add_parser("verify", help="aim verification")
    p.add_argument("--af", required=True)
    p.add_argument("--sem", required=True, choices=sems)
    p.add_argument("--aim", required=True, choices=aims)
    p.add_argument("--focal", required=True)
    p.add_argument("--side", default="p", choices=sides)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("move", help="pick a minimal effective move")
    p.add_argument("--split", required=True)
    p.add_argument("--policy", default="lex", help="lex | random:<seed> | optimal")
    p.add_argument("--all-minimal", action="store_true")
    p.add_argument("--revealed", default="", help="comma-separated arguments already played")
    p.add_argument("--turn", default="p", choices=sides)
    p.set_defaults(func=cmd_move)

    p = sub.add_parser("play", help="honest self-play")
    p.add_argument("--split", required=True)
    p.add_argument("--agent-p", default="lex")
    p.add_argument("--agent-o", default="lex")
    p.add_argument("--out")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("search-seq", help="winning sequence (collusion) search")
    p.add_argument("--split", required=True)
    p.add_argument("--winner", required=True, choices=sides)
    p.add_argument("--standard", default="legacy", choices=standards)
    p.add_argument("--out")
    p.set_defaults(func=cmd_search_seq)

    p = sub.add_parser("search-strat", help="winning strategy (espionage) search")
    p.add_argument("--split", required=True)
    p.add_argument("--side", required=True, choices=sides)
    p.add_argument("--adversary", default="all", choices=["all", "minimal"])
    p.set_defaults(func=cmd_search_strat)

    p = sub.add_parser("audit", help="audit a recorded trace")
    p.add_argument("--split", help="defaults to the trace's game line")
    p.add_argument("--trace", required=True)
    p.add_argument("--standard", default="min_both", choices=standards)
    p.add_argument("--advisory", action="store_true", help="include self-injury advisories")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("gen", help="generate a random split framework")
    p.add_argument("--n-common", type=int, default=0)
    p.add_argument("--n-p", type=int, required=True)
    p.add_argument("--n-o", type=int, required=True)
    p.add_argument("--p-att", required=True, help="attack probability, e.g. 0.3 or 1/3")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--acyclic", action="store_true")
    p.add_argument("--sem", default="grounded", choices=sems)
    p.add_argument("--aim", default="existential", choices=aims)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fixture", help="print a built-in example game")
    p.add_argument("--name", required=True, choices=FIXTURE_NAMES)
    p.add_argument("--out")
    p.set_defaults(func=cmd_fixture)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (StratArgError, OSError, ValueError) as exc:
        print(f"stratarg: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
