"""Exact game solvers: game value, winning sequences, winning strategies, dominance."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .aims import Side
from .errors import IneffectiveMoveError, SizeBoundExceeded
from .game import (
    GameState,
    Move,
    SplitFramework,
    Standard,
    apply_move,
    effective_moves,
    has_effective_move,
    is_effective,
    minimal_moves,
)

DEFAULT_SEARCH_BOUND = 16


@dataclass(frozen=True)
class GameTrace:
    split: SplitFramework
    moves: tuple[Move, ...]
    winner: Side

    def states(self) -> Iterator[GameState]:
        """Replay the trace, yielding the state before each move and the final state."""
        state = GameState.initial(self.split)
        yield state
        for mv in self.moves:
            state = apply_move(state, mv)
            yield state

    def __str__(self) -> str:
        body = " / ".join(str(m) for m in self.moves) or "(no moves)"
        return f"{body} ; winner {self.winner.letter}"


def _check_bound(split: SplitFramework, bound: int) -> None:
    n = len(split.all_arguments)
    if n > bound:
        raise SizeBoundExceeded(f"{n} arguments exceed the search bound {bound}")


def moves_under(state: GameState, standard: Standard) -> list[Move]:
    if standard.requires_minimal(state.turn):
        return minimal_moves(state)
    return effective_moves(state)


@lru_cache(maxsize=1 << 18)
def _value(split: SplitFramework, revealed: frozenset[str], turn: Side, standard: Standard) -> tuple[Side, Move | None]:
    state = GameState(split, revealed, turn)
    for mv in moves_under(state, standard):
        winner, _ = _value(split, revealed | mv.args, turn.other, standard)
        if winner is turn:
            return turn, mv
    return turn.other, None


def game_value(state: GameState, standard: Standard = Standard.LEGACY, bound: int = DEFAULT_SEARCH_BOUND) -> Side:
    """Winner under optimal play by both sides.

    Each side may play any effective move, or only minimal ones when the
    standard names that side.
    """
    _check_bound(state.split, bound)
    return _value(state.split, state.revealed, state.turn, Standard(standard))[0]


def best_move(state: GameState, standard: Standard = Standard.LEGACY, bound: int = DEFAULT_SEARCH_BOUND) -> Move | None:
    """A canonical-order winning move for the player to move, if one exists."""
    _check_bound(state.split, bound)
    return _value(state.split, state.revealed, state.turn, Standard(standard))[1]


def dominates(state: GameState, a: Move, b: Move, bound: int = DEFAULT_SEARCH_BOUND) -> bool:
    """Is move ``a`` at least as good as ``b`` for the mover under optimal continuation?"""
    for mv in (a, b):
        if not is_effective(state, mv):
            raise IneffectiveMoveError(f"{mv} is not effective")
    mover = state.turn
    after_a = game_value(apply_move(state, a), Standard.LEGACY, bound)
    after_b = game_value(apply_move(state, b), Standard.LEGACY, bound)
    return after_a is mover or after_b is not mover


def winning_sequence(
    split: SplitFramework,
    winner: Side,
    standard: Standard = Standard.LEGACY,
    bound: int = DEFAULT_SEARCH_BOUND,
) -> GameTrace | None:
    """Search for a jointly scripted game that ``winner`` wins.

    Every move must be effective and, for sides named by ``standard``, minimal;
    the game ends when the loser has no effective move. The searcher picks both
    sides' moves. The winner's options are explored largest-first and the
    loser's smallest-first; the first trace found is returned.
    """
    _check_bound(split, bound)
    winner = Side(winner)
    standard = Standard(standard)
    memo: dict[tuple[frozenset[str], Side], tuple[Move, ...] | None] = {}

    def search(state: GameState) -> tuple[Move, ...] | None:
        key = (state.revealed, state.turn)
        if key in memo:
            return memo[key]
        result: tuple[Move, ...] | None = None
        if state.turn is not winner and not has_effective_move(state):
            result = ()
        else:
            options = moves_under(state, standard)
            if state.turn is winner:
                options = options[::-1]
            for mv in options:
                rest = search(apply_move(state, mv))
                if rest is not None:
                    result = (mv, *rest)
                    break
        memo[key] = result
        return result

    moves = search(GameState.initial(split))
    return None if moves is None else GameTrace(split, moves, winner)


@dataclass
class Strategy:
    """Prescribed move for every position (revealed set) the owner can face."""

    side: Side
    moves: dict[frozenset[str], Move] = field(default_factory=dict)

    def __call__(self, revealed: frozenset[str]) -> Move:
        return self.moves[frozenset(revealed)]

    def __len__(self) -> int:
        return len(self.moves)


def winning_strategy(
    split: SplitFramework,
    side: Side,
    adversary: str = "all_effective",
    bound: int = DEFAULT_SEARCH_BOUND,
) -> Strategy | None:
    """AND-OR search for a strategy of minimal moves that wins against every reply.

    ``adversary`` is ``all_effective`` or ``minimal_only`` and fixes which
    replies the other side may make.
    """
    _check_bound(split, bound)
    side = Side(side)
    if adversary not in ("all_effective", "minimal_only"):
        raise ValueError(f"unknown adversary {adversary!r}")
    memo: dict[tuple[frozenset[str], Side], tuple[bool, Move | None]] = {}

    def replies(state: GameState) -> list[Move]:
        if adversary == "minimal_only":
            return minimal_moves(state)
        return effective_moves(state)

    def solve(state: GameState) -> bool:
        key = (state.revealed, state.turn)
        if key in memo:
            return memo[key][0]
        if state.turn is side:
            outcome: tuple[bool, Move | None] = (False, None)
            for mv in minimal_moves(state):
                if solve(apply_move(state, mv)):
                    outcome = (True, mv)
                    break
        else:
            outcome = (all(solve(apply_move(state, mv)) for mv in replies(state)), None)
        memo[key] = outcome
        return outcome[0]

    start = GameState.initial(split)
    if not solve(start):
        return None
    strategy = Strategy(side)
    stack = [start]
    while stack:
        state = stack.pop()
        if state.turn is side:
            if state.revealed in strategy.moves:
                continue
            mv = memo[(state.revealed, state.turn)][1]
            assert mv is not None
            strategy.moves[state.revealed] = mv
            stack.append(apply_move(state, mv))
        else:
            stack.extend(apply_move(state, mv) for mv in replies(state))
    strategy.moves = dict(sorted(strategy.moves.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))))
    return strategy
