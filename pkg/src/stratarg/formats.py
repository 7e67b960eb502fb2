"""Line-oriented text formats for split frameworks (.saf) and game traces (.trace)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .aims import Aim, Semantics, Side
from .errors import FormatError
from .framework import ID_PATTERN
from .game import Move, SplitFramework

_STATEMENT = re.compile(r"\s*([a-z]+)\s*\(([^()]*)\)\s*\.")


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("%", 1)[0] for line in text.splitlines())


def _ident(token: str, where: str) -> str:
    token = token.strip()
    if not ID_PATTERN.fullmatch(token):
        raise FormatError(f"bad identifier {token!r} in {where}")
    return token


def parse_saf(text: str) -> SplitFramework:
    body = _strip_comments(text)
    args: list[str] = []
    attacks: list[tuple[str, str]] = []
    owners: dict[str, str] = {}
    focal: list[str] = []
    sem: list[str] = []
    aim: list[str] = []
    pos = 0
    while True:
        while pos < len(body) and body[pos].isspace():
            pos += 1
        if pos >= len(body):
            break
        m = _STATEMENT.match(body, pos)
        if not m:
            snippet = body[pos:pos + 30].split("\n")[0]
            raise FormatError(f"cannot parse near {snippet!r}")
        pos = m.end()
        name, inner = m.group(1), [t.strip() for t in m.group(2).split(",")]
        where = m.group(0).strip()
        if name == "arg" and len(inner) == 1:
            args.append(_ident(inner[0], where))
        elif name == "att" and len(inner) == 2:
            attacks.append((_ident(inner[0], where), _ident(inner[1], where)))
        elif name == "own" and len(inner) == 2:
            if inner[1] not in ("common", "p", "o"):
                raise FormatError(f"bad owner in {where}")
            arg = _ident(inner[0], where)
            if arg in owners:
                raise FormatError(f"owner of {arg} given twice")
            owners[arg] = inner[1]
        elif name == "focal" and len(inner) == 1:
            focal.append(_ident(inner[0], where))
        elif name == "sem" and len(inner) == 1:
            sem.append(inner[0])
        elif name == "aim" and len(inner) == 1:
            aim.append(inner[0])
        else:
            raise FormatError(f"unknown directive {where!r}")
    if len(focal) != 1:
        raise FormatError("exactly one focal(...) directive is required")
    if len(sem) > 1 or len(aim) > 1:
        raise FormatError("sem(...) and aim(...) may appear at most once")
    if len(set(args)) != len(args):
        raise FormatError("duplicate arg(...) directive")
    known = set(args)
    for a, b in attacks:
        if a not in known or b not in known:
            raise FormatError(f"att({a},{b}) mentions an undeclared argument")
    for a in owners:
        if a not in known:
            raise FormatError(f"own({a},...) mentions an undeclared argument")
    pools: dict[str, set[str]] = {"common": set(), "p": set(), "o": set()}
    for a in args:
        pools[owners.get(a, "common")].add(a)
    try:
        return SplitFramework(
            common=frozenset(pools["common"]),
            proponent_private=frozenset(pools["p"]),
            opponent_private=frozenset(pools["o"]),
            attacks=frozenset(attacks),
            focal=focal[0],
            semantics=Semantics(sem[0]) if sem else Semantics.GROUNDED,
            aim=Aim(aim[0]) if aim else Aim.EXISTENTIAL,
        )
    except (ValueError, KeyError) as exc:
        raise FormatError(str(exc)) from exc


def dump_saf(split: SplitFramework) -> str:
    lines = [f"arg({a})." for a in sorted(split.all_arguments)]
    for a in sorted(split.all_arguments):
        owner = split.owner(a)
        if owner != "common":
            lines.append(f"own({a},{owner}).")
    lines += [f"att({a},{b})." for a, b in sorted(split.attacks)]
    lines.append(f"focal({split.focal}).")
    lines.append(f"sem({split.semantics.value}).")
    lines.append(f"aim({split.aim.value}).")
    return "\n".join(lines) + "\n"


def load_split(ref: str, base: Path | None = None) -> SplitFramework:
    """Resolve ``fixture:<name>`` or a path to a .saf file."""
    if ref.startswith("fixture:"):
        from .corpus import fixture

        return fixture(ref.split(":", 1)[1])
    path = Path(ref)
    if base is not None and not path.is_absolute():
        path = base / path
    return parse_saf(path.read_text())


@dataclass(frozen=True)
class TraceFile:
    """A recorded game as stored on disk."""

    game: str
    semantics: Semantics
    aim: Aim
    moves: tuple[Move, ...]
    winner: Side


def parse_trace(text: str) -> TraceFile:
    lines = [ln.split() for ln in _strip_comments(text).splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or lines[0][0] != "game" or len(lines[0]) != 2:
        raise FormatError("first line must be 'game <path-or-fixture:name>'")
    game = lines[0][1]
    semantics = aim = winner = None
    moves: list[Move] = []
    for i, ln in enumerate(lines[1:], start=2):
        head, rest = ln[0], ln[1:]
        try:
            if head == "semantics" and len(rest) == 1 and semantics is None and not moves:
                semantics = Semantics(rest[0])
            elif head == "aim" and len(rest) == 1 and aim is None and not moves:
                aim = Aim(rest[0])
            elif head == "move" and len(rest) >= 2 and winner is None:
                ids = [_ident(t, f"line {i}") for t in rest[1:]]
                if len(set(ids)) != len(ids):
                    raise FormatError(f"repeated argument in move on line {i}")
                moves.append(Move(_side(rest[0]), frozenset(ids)))
            elif head == "winner" and len(rest) == 1 and winner is None:
                winner = _side(rest[0])
            else:
                raise FormatError(f"unexpected line {i}: {' '.join(ln)!r}")
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {i}: {exc}") from exc
    if semantics is None or aim is None:
        raise FormatError("trace must declare 'semantics' and 'aim'")
    if winner is None:
        raise FormatError("trace must end with 'winner P|O'")
    return TraceFile(game, semantics, aim, tuple(moves), winner)


def _side(token: str) -> Side:
    if token == "P":
        return Side.PROPONENT
    if token == "O":
        return Side.OPPONENT
    raise FormatError(f"side must be P or O, got {token!r}")


def dump_trace(trace: TraceFile) -> str:
    lines = [f"game {trace.game}", f"semantics {trace.semantics.value}", f"aim {trace.aim.value}"]
    for mv in trace.moves:
        lines.append(" ".join(["move", mv.player.letter, *sorted(mv.args)]))
    lines.append(f"winner {trace.winner.letter}")
    return "\n".join(lines) + "\n"
