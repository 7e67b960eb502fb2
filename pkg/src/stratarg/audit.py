"""Post-hoc compliance audit of recorded games."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Protocol, Sequence

from .aims import Side
from .framework import fmt_set
from .game import (
    GameState,
    Move,
    SplitFramework,
    Standard,
    aim_satisfied,
    find_minimal_move,
    has_effective_move,
    minimality_witness,
)

class RecordedGame(Protocol):
    """Anything carrying a move list and a claimed winner (GameTrace, TraceFile)."""

    @property
    def moves(self) -> Sequence[Move]: ...

    @property
    def winner(self) -> Side: ...


# structural problems: the move could not have been played at all
STRUCTURAL = ("wrong_turn", "empty_move", "unknown_argument", "unowned_argument", "already_revealed")


@dataclass(frozen=True)
class MoveRecord:
    index: int
    player: Side
    args: frozenset[str]
    effective: bool | None
    # None: minimality not required by the standard, or the move was malformed
    minimal: bool | None
    witness_subset: frozenset[str] | None = None
    min_effective_size: int | None = None
    violations: tuple[str, ...] = ()


@dataclass(frozen=True)
class Advisory:
    index: int
    kind: str
    attacked_own: frozenset[tuple[str, str]]


@dataclass(frozen=True)
class Violation:
    index: int | None
    kind: str
    detail: str = ""


@dataclass
class AuditReport:
    standard: Standard
    per_move: list[MoveRecord] = field(default_factory=list)
    loser_had_no_move: bool = True
    winner_matches: bool = True
    advisories: list[Advisory] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)

    @property
    def compliant(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "compliant" if self.compliant else "violation"

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


def self_injury_report(
    split: SplitFramework,
    trace: RecordedGame,
    revealed_only: bool = False,
) -> list[Advisory]:
    """Moves whose arguments attack the mover's own arguments.

    By default the mover's whole private pool counts as "own", played or not;
    ``revealed_only`` restricts targets to own arguments already on the table.
    """
    out = []
    revealed = set(split.common)
    for i, mv in enumerate(trace.moves, start=1):
        revealed |= mv.args
        own = split.private(mv.player)
        if revealed_only:
            own = own & revealed
        hits = frozenset((a, b) for a, b in split.attacks if a in mv.args and b in own)
        if hits:
            out.append(Advisory(i, "self_injury", hits))
    return out


def audit_trace(
    split: SplitFramework,
    trace: RecordedGame,
    standard: Standard = Standard.MIN_BOTH,
    revealed_only_injury: bool = False,
) -> AuditReport:
    """Replay a recorded game and check it against ``standard``.

    Problems are reported, never raised. Self-injury advisories are attached
    but do not affect the verdict.
    """
    standard = Standard(standard)
    report = AuditReport(standard)
    known = split.all_arguments
    revealed = frozenset(split.common)
    turn = Side.PROPONENT
    for i, mv in enumerate(trace.moves, start=1):
        kinds: list[str] = []
        if mv.player is not turn:
            kinds.append("wrong_turn")
        if not mv.args:
            kinds.append("empty_move")
        if mv.args - known:
            kinds.append("unknown_argument")
        if (mv.args & known) - split.private(mv.player):
            kinds.append("unowned_argument")
        if mv.args & revealed:
            kinds.append("already_revealed")
        effective = minimal = witness = size = None
        if not kinds:
            state = GameState(split, revealed, mv.player)
            effective = aim_satisfied(split, revealed | mv.args, mv.player)
            smallest = find_minimal_move(state)
            size = len(smallest.args) if smallest else None
            if not effective:
                kinds.append("ineffective")
            elif standard.requires_minimal(mv.player):
                witness = minimality_witness(state, mv)
                minimal = witness is None
                if not minimal:
                    kinds.append("non_minimal")
        report.per_move.append(MoveRecord(i, mv.player, mv.args, effective, minimal, witness, size, tuple(kinds)))
        for k in kinds:
            detail = f"witness {fmt_set(witness)}" if k == "non_minimal" and witness else ""
            report.violations.append(Violation(i, k, detail))
        revealed = revealed | (mv.args & known)
        turn = mv.player.other

    last_mover = turn.other
    report.loser_had_no_move = not has_effective_move(GameState(split, revealed, turn))
    if not report.loser_had_no_move:
        report.violations.append(
            Violation(None, "premature_surrender", f"{turn.value} still had an effective move")
        )
    winner = Side(trace.winner)
    report.winner_matches = winner is last_mover
    if not report.winner_matches:
        report.violations.append(
            Violation(None, "wrong_winner", f"claimed {winner.value}, last mover {last_mover.value}")
        )
    report.advisories = self_injury_report(split, trace, revealed_only_injury)
    return report


def _pairs(pairs: Iterable[tuple[str, str]]) -> list[list[str]]:
    return [list(p) for p in sorted(pairs)]


def report_to_dict(report: AuditReport) -> dict[str, Any]:
    return {
        "standard": report.standard.value,
        "verdict": report.verdict,
        "per_move": [
            {
                "index": r.index,
                "player": r.player.letter,
                "args": sorted(r.args),
                "effective": r.effective,
                "minimal": "not-required" if r.minimal is None else r.minimal,
                "witness_subset": sorted(r.witness_subset) if r.witness_subset is not None else None,
                "min_effective_size": r.min_effective_size,
                "violations": list(r.violations),
            }
            for r in report.per_move
        ],
        "end_check": {
            "loser_had_no_move": report.loser_had_no_move,
            "winner_matches": report.winner_matches,
        },
        "violations": [{"index": v.index, "kind": v.kind, "detail": v.detail} for v in report.violations],
        "advisories": [
            {"index": a.index, "kind": a.kind, "attacked_own": _pairs(a.attacked_own)} for a in report.advisories
        ],
    }


def report_to_json(report: AuditReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def render_text(report: AuditReport, advisories: bool = True) -> str:
    lines = [f"standard {report.standard.value}"]
    for r in report.per_move:
        status = "ok" if not r.violations else ",".join(r.violations)
        extra = f" witness {fmt_set(r.witness_subset)}" if r.witness_subset is not None else ""
        lines.append(f"move {r.index} {r.player.letter} {fmt_set(r.args)}: {status}{extra}")
    lines.append(f"end check: loser had no move = {str(report.loser_had_no_move).lower()}")
    for v in report.violations:
        where = f"move {v.index}" if v.index is not None else "end"
        lines.append(f"violation at {where}: {v.kind}" + (f" ({v.detail})" if v.detail else ""))
    if advisories:
        for a in report.advisories:
            pairs = " ".join(f"{x}->{y}" for x, y in sorted(a.attacked_own))
            lines.append(f"advisory at move {a.index}: {a.kind} {pairs}")
    lines.append(f"verdict {report.verdict}")
    return "\n".join(lines) + "\n"
