"""Automated players and a match runner."""

from __future__ import annotations

from .aims import Side
from .game import (
    GameState,
    Move,
    MovePolicy,
    SplitFramework,
    Standard,
    apply_move,
    find_minimal_move,
    minimal_moves,
)
from .search import (
    DEFAULT_SEARCH_BOUND,
    GameTrace,
    Strategy,
    game_value,
    winning_sequence,
    winning_strategy,
)


def honest_move(state: GameState, policy: MovePolicy = MovePolicy()) -> Move | None:
    """A minimal effective move chosen from what the mover can actually see.

    The state is first reduced to the mover's view, which drops the other
    side's unplayed arguments, so the choice cannot depend on them.

    The ``optimal`` policy solves the game on that view, i.e. as if the
    opponent had nothing left to play, and takes the first minimal move that
    wins there. Under that assumption every effective move wins immediately,
    so in practice it agrees with ``lex_first``.
    """
    mover = state.turn
    seen = GameState(state.split.view(mover, state.revealed), state.revealed, mover)
    if policy.kind != "optimal":
        return find_minimal_move(seen, policy)
    candidates = minimal_moves(seen)
    for mv in candidates:
        if game_value(apply_move(seen, mv), Standard.LEGACY, bound=len(seen.split.all_arguments)) is mover:
            return mv
    return candidates[0] if candidates else None


def play_match(
    split: SplitFramework,
    policy_p: MovePolicy = MovePolicy(),
    policy_o: MovePolicy = MovePolicy(),
) -> GameTrace:
    state = GameState.initial(split)
    moves: list[Move] = []
    while True:
        policy = policy_p if state.turn is Side.PROPONENT else policy_o
        mv = honest_move(state, policy)
        if mv is None:
            return GameTrace(split, tuple(moves), state.turn.other)
        moves.append(mv)
        state = apply_move(state, mv)


def collusion_script(
    split: SplitFramework,
    designated_winner: Side,
    standard: Standard = Standard.LEGACY,
    bound: int = DEFAULT_SEARCH_BOUND,
) -> GameTrace | None:
    """The move sequence a colluding pair would replay verbatim."""
    return winning_sequence(split, designated_winner, standard, bound)


def espionage_strategy(split: SplitFramework, side: Side, bound: int = DEFAULT_SEARCH_BOUND) -> Strategy | None:
    # the spy sees both pools, so it can solve the full game tree
    return winning_strategy(split, side, "all_effective", bound)
