"""Split-framework game: move legality, minimality and state transitions."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .aims import Aim, Semantics, Side, aim_holds, count_status
from .errors import (
    IllegalMoveError,
    IneffectiveMoveError,
    NotEffectiveError,
    SizeBoundExceeded,
    UnknownArgumentError,
    WrongTurnError,
)
from .framework import DEFAULT_ENUMERATION_BOUND, ArgumentationFramework, canonical_key, fmt_set


class Standard(str, Enum):
    """Which sides must play minimal moves; ``legacy`` only asks for effectiveness."""

    LEGACY = "legacy"
    MIN_P = "min_p"
    MIN_O = "min_o"
    MIN_BOTH = "min_both"

    def requires_minimal(self, side: Side) -> bool:
        if self is Standard.MIN_BOTH:
            return True
        if self is Standard.MIN_P:
            return side is Side.PROPONENT
        if self is Standard.MIN_O:
            return side is Side.OPPONENT
        return False


@dataclass(frozen=True)
class SplitFramework:
    common: frozenset[str]
    proponent_private: frozenset[str]
    opponent_private: frozenset[str]
    attacks: frozenset[tuple[str, str]]
    focal: str
    semantics: Semantics = Semantics.GROUNDED
    aim: Aim = Aim.EXISTENTIAL

    def __post_init__(self) -> None:
        for name in ("common", "proponent_private", "opponent_private"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        object.__setattr__(self, "attacks", frozenset(tuple(p) for p in self.attacks))
        object.__setattr__(self, "semantics", Semantics(self.semantics))
        object.__setattr__(self, "aim", Aim(self.aim))
        c, p, o = self.common, self.proponent_private, self.opponent_private
        if c & p or c & o or p & o:
            raise ValueError("argument pools must be pairwise disjoint")
        # validates ids and attack endpoints
        self.framework
        if self.focal not in c | p:
            raise UnknownArgumentError(f"focal argument {self.focal!r} must be common or proponent-owned")

    @cached_property
    def framework(self) -> ArgumentationFramework:
        return ArgumentationFramework.build(self.all_arguments, self.attacks)

    @property
    def all_arguments(self) -> frozenset[str]:
        return self.common | self.proponent_private | self.opponent_private

    def private(self, side: Side) -> frozenset[str]:
        return self.proponent_private if side is Side.PROPONENT else self.opponent_private

    def owner(self, arg: str) -> str:
        if arg in self.proponent_private:
            return "p"
        if arg in self.opponent_private:
            return "o"
        if arg in self.common:
            return "common"
        raise UnknownArgumentError(f"unknown argument {arg!r}")

    def visible(self, revealed: Iterable[str]) -> ArgumentationFramework:
        return self.framework.restrict(revealed)

    def view(self, side: Side, revealed: Iterable[str]) -> SplitFramework:
        """What ``side`` knows: everything except the opponent's unplayed arguments.

        The focal argument is public even before it is played.
        """
        revealed = frozenset(revealed) | {self.focal}
        hidden = self.private(side.other) - revealed
        keep = self.all_arguments - hidden
        attacks = frozenset((a, b) for a, b in self.attacks if a in keep and b in keep)
        if side is Side.PROPONENT:
            return replace(self, opponent_private=self.opponent_private & revealed, attacks=attacks)
        return replace(self, proponent_private=self.proponent_private & revealed, attacks=attacks)


@dataclass(frozen=True)
class Move:
    player: Side
    args: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "player", Side(self.player))
        object.__setattr__(self, "args", frozenset(self.args))

    @classmethod
    def of(cls, player: Side | str, *args: str) -> Move:
        if isinstance(player, str) and not isinstance(player, Side):
            player = Side.parse(player)
        return cls(player, frozenset(args))

    def key(self) -> tuple[int, tuple[str, ...]]:
        return canonical_key(self.args)

    def __str__(self) -> str:
        return f"{self.player.letter} {fmt_set(self.args)}"


@dataclass(frozen=True)
class GameState:
    split: SplitFramework
    revealed: frozenset[str]
    turn: Side = Side.PROPONENT

    def __post_init__(self) -> None:
        object.__setattr__(self, "revealed", frozenset(self.revealed))
        object.__setattr__(self, "turn", Side(self.turn))
        split = self.split
        if not split.common <= self.revealed:
            raise ValueError("revealed arguments must include the common pool")
        extra = self.revealed - split.all_arguments
        if extra:
            raise UnknownArgumentError(f"unknown argument(s) {fmt_set(extra)}")

    @classmethod
    def initial(cls, split: SplitFramework) -> GameState:
        return cls(split, split.common, Side.PROPONENT)

    def available(self, side: Side | None = None) -> frozenset[str]:
        """Unplayed private arguments of ``side`` (default: the player to move)."""
        return self.split.private(side or self.turn) - self.revealed

    @property
    def framework(self) -> ArgumentationFramework:
        return self.split.visible(self.revealed)


@lru_cache(maxsize=1 << 18)
def aim_satisfied(split: SplitFramework, revealed: frozenset[str], side: Side) -> bool:
    """Does ``side``'s aim hold on the framework visible when ``revealed`` is common?"""
    af = split.visible(revealed)
    holds = aim_holds(count_status(af, split.semantics, split.focal), split.aim)
    return holds if side is Side.PROPONENT else not holds


def is_degenerate(split: SplitFramework) -> bool:
    """True when the proponent's aim already holds before anyone has moved."""
    return aim_satisfied(split, split.common, Side.PROPONENT)


def _check_legal(state: GameState, move: Move) -> None:
    if not move.args:
        raise IllegalMoveError("a move must contain at least one argument")
    pool = state.split.private(move.player)
    foreign = move.args - pool
    if foreign:
        raise IllegalMoveError(f"{move.player.value} does not own {fmt_set(foreign)}")
    again = move.args & state.revealed
    if again:
        raise IllegalMoveError(f"{fmt_set(again)} already revealed")


def is_effective(state: GameState, move: Move) -> bool:
    _check_legal(state, move)
    return aim_satisfied(state.split, state.revealed | move.args, move.player)


def _proper_subsets(args: frozenset[str]) -> Iterator[frozenset[str]]:
    ordered = sorted(args)
    for k in range(1, len(ordered)):
        for combo in itertools.combinations(ordered, k):
            yield frozenset(combo)


def minimality_witness(state: GameState, move: Move) -> frozenset[str] | None:
    """First effective nonempty proper subset of ``move`` in canonical order, if any.

    Every proper subset is tried: effectiveness is not monotone, so a set that
    cannot be shrunk by dropping one argument may still be non-minimal.
    """
    if not is_effective(state, move):
        raise NotEffectiveError(f"{move} is not effective")
    for sub in _proper_subsets(move.args):
        if aim_satisfied(state.split, state.revealed | sub, move.player):
            return sub
    return None


def is_minimal(state: GameState, move: Move) -> bool:
    return minimality_witness(state, move) is None


def _candidate_sets(state: GameState, side: Side, bound: int) -> Iterator[frozenset[str]]:
    pool = sorted(state.available(side))
    if len(pool) > bound:
        raise SizeBoundExceeded(f"{len(pool)} candidate arguments exceed the enumeration bound {bound}")
    for k in range(1, len(pool) + 1):
        for combo in itertools.combinations(pool, k):
            yield frozenset(combo)


def effective_moves(state: GameState, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[Move]:
    """Every effective move of the player to move, canonical order."""
    side = state.turn
    return [
        Move(side, s)
        for s in _candidate_sets(state, side, bound)
        if aim_satisfied(state.split, state.revealed | s, side)
    ]


def has_effective_move(state: GameState, bound: int = DEFAULT_ENUMERATION_BOUND) -> bool:
    side = state.turn
    return any(aim_satisfied(state.split, state.revealed | s, side) for s in _candidate_sets(state, side, bound))


def minimal_moves(state: GameState, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[Move]:
    """The antichain of minimal effective moves for the player to move.

    Sets are visited by increasing size, so an effective set is minimal exactly
    when it contains no minimal set found earlier.
    """
    side = state.turn
    found: list[frozenset[str]] = []
    for s in _candidate_sets(state, side, bound):
        if any(m <= s for m in found):
            continue
        if aim_satisfied(state.split, state.revealed | s, side):
            found.append(s)
    return [Move(side, s) for s in found]


@dataclass(frozen=True)
class MovePolicy:
    """How a player picks among minimal effective moves."""

    kind: str = "lex_first"
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("lex_first", "seeded_random", "optimal"):
            raise ValueError(f"unknown policy kind {self.kind!r}")
        if self.kind == "seeded_random" and self.seed is None:
            raise ValueError("seeded_random needs a seed")

    @classmethod
    def lex_first(cls) -> MovePolicy:
        return cls("lex_first")

    @classmethod
    def seeded_random(cls, seed: int) -> MovePolicy:
        return cls("seeded_random", seed)

    @classmethod
    def optimal(cls) -> MovePolicy:
        return cls("optimal")

    @classmethod
    def parse(cls, text: str) -> MovePolicy:
        """Accepts ``lex``, ``random:<seed>`` or ``optimal``."""
        t = text.strip().lower()
        if t in ("lex", "lex_first"):
            return cls.lex_first()
        if t == "optimal":
            return cls.optimal()
        if t.startswith("random:"):
            return cls.seeded_random(int(t.split(":", 1)[1]))
        raise ValueError(f"unknown policy {text!r}")

    def __str__(self) -> str:
        if self.kind == "seeded_random":
            return f"random:{self.seed}"
        return "lex" if self.kind == "lex_first" else self.kind


def find_minimal_move(
    state: GameState,
    policy: MovePolicy = MovePolicy(),
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> Move | None:
    if policy.kind == "lex_first":
        side = state.turn
        for s in _candidate_sets(state, side, bound):
            # the first effective set by size is necessarily minimal
            if aim_satisfied(state.split, state.revealed | s, side):
                return Move(side, s)
        return None
    if policy.kind == "seeded_random":
        moves = minimal_moves(state, bound)
        if not moves:
            return None
        return random.Random(policy.seed).choice(moves)
    from .agents import honest_move

    return honest_move(state, policy)


def apply_move(state: GameState, move: Move) -> GameState:
    if move.player is not state.turn:
        raise WrongTurnError(f"it is {state.turn.value}'s turn, not {move.player.value}'s")
    if not is_effective(state, move):
        raise IneffectiveMoveError(f"{move} does not achieve the {move.player.value}'s aim")
    return GameState(state.split, state.revealed | move.args, state.turn.other)
