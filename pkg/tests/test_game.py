import itertools
import random

import pytest

from stratarg.aims import Aim, Semantics, Side
from stratarg.corpus import GeneratorParams, fixture, random_split
from stratarg.errors import IllegalMoveError, IneffectiveMoveError, NotEffectiveError, WrongTurnError
from stratarg.game import (
    GameState,
    Move,
    MovePolicy,
    SplitFramework,
    aim_satisfied,
    apply_move,
    effective_moves,
    find_minimal_move,
    has_effective_move,
    is_degenerate,
    is_effective,
    is_minimal,
    minimal_moves,
    minimality_witness,
)

P, O = Side.PROPONENT, Side.OPPONENT


def st(name, revealed, turn=P):
    return GameState(fixture(name), frozenset(revealed), turn)


def moves(*sets, player=O):
    return [Move(player, frozenset(s)) for s in sets]


def test_effective():
    s = st("saf8", {"A"}, O)
    assert is_effective(s, Move.of(O, "B1"))
    assert not is_effective(s, Move.of(O, "B2"))
    assert is_effective(s, Move.of(O, "B1", "B2"))


def test_illegal_moves():
    s = st("saf8", {"A"}, O)
    with pytest.raises(IllegalMoveError):
        is_effective(s, Move.of(O, "C"))
    with pytest.raises(IllegalMoveError):
        is_effective(s, Move.of(P, "A"))
    with pytest.raises(IllegalMoveError):
        is_effective(s, Move(O, frozenset()))


def test_minimal():
    s = st("saf8", {"A"}, O)
    assert minimality_witness(s, Move.of(O, "B1", "B2")) == {"B1"}
    assert not is_minimal(s, Move.of(O, "B1", "B2"))
    assert is_minimal(s, Move.of(O, "B1"))
    assert is_minimal(st("saf8", {"A", "B1", "B2"}), Move.of(P, "C"))
    with pytest.raises(NotEffectiveError):
        is_minimal(s, Move.of(O, "B2"))


def test_has_effective_move():
    assert not has_effective_move(st("saf8", {"A", "B1", "C", "D"}, P))
    assert not has_effective_move(st("saf8", {"A", "B1", "B2", "C"}, O))
    assert has_effective_move(st("saf8", {"A"}, O))


def test_minimal_moves():
    assert minimal_moves(st("saf8", {"A"}, O)) == moves({"B1"})
    assert minimal_moves(st("saf16", {"A", "B1", "B2", "C1", "C2"}, O)) == moves({"D1"}, {"D2"}, {"E"})
    assert minimal_moves(st("choice", {"A"}, O)) == moves({"B"}, {"C"})


def test_find_minimal_move():
    assert find_minimal_move(st("saf8", {"A"}, O)) == Move.of(O, "B1")
    assert find_minimal_move(st("saf8", {"A", "B1", "C", "D"}, P)) is None
    assert find_minimal_move(st("ah", {"A", "E"}, P), MovePolicy.lex_first()) == Move.of(P, "G")
    picks = {find_minimal_move(st("ah", {"A", "E"}, P), MovePolicy.seeded_random(7)) for _ in range(5)}
    assert len(picks) == 1 and picks <= {Move.of(P, "G"), Move.of(P, "H")}


def test_apply_move():
    s0 = GameState.initial(fixture("saf8"))
    s1 = apply_move(s0, Move.of(P, "A"))
    assert s1.revealed == {"A"} and s1.turn is O
    with pytest.raises(IllegalMoveError):
        apply_move(s1, Move.of(P, "A"))
    with pytest.raises(WrongTurnError):
        apply_move(s1, Move.of(P, "C"))
    with pytest.raises(IneffectiveMoveError):
        apply_move(s1, Move.of(O, "B2"))


def test_policy_parse():
    assert MovePolicy.parse("lex") == MovePolicy.lex_first()
    assert MovePolicy.parse("random:42") == MovePolicy.seeded_random(42)
    assert MovePolicy.parse("optimal").kind == "optimal"
    with pytest.raises(ValueError):
        MovePolicy.parse("greedy")


def test_split_invariants():
    with pytest.raises(ValueError):
        SplitFramework(frozenset("a"), frozenset("a"), frozenset(), frozenset(), "a")
    with pytest.raises(KeyError):
        SplitFramework(frozenset(), frozenset("a"), frozenset("b"), frozenset(), "b")


def test_degenerate_start():
    split = SplitFramework(frozenset({"a"}), frozenset({"p"}), frozenset({"o"}), frozenset({("o", "a")}), "a")
    assert is_degenerate(split)
    assert not is_degenerate(fixture("saf8"))
    # unrejected holds vacuously while the focal argument is unplayed
    assert is_degenerate(SplitFramework(frozenset(), frozenset({"a"}), frozenset(), frozenset(), "a", aim=Aim.UNREJECTED))


def _reachable(split):
    seen = set()
    stack = [GameState.initial(split)]
    while stack:
        s = stack.pop()
        if (s.revealed, s.turn) in seen:
            continue
        seen.add((s.revealed, s.turn))
        yield s
        stack.extend(apply_move(s, m) for m in effective_moves(s))


def _instances(n, seed=3):
    rng = random.Random(seed)
    for i in range(n):
        yield random_split(
            GeneratorParams(
                n_common=rng.randint(0, 1),
                n_p=rng.randint(1, 3),
                n_o=rng.randint(1, 3),
                attack_probability=rng.choice([0.2, 0.3, 0.4]),
                seed=rng.getrandbits(32),
                semantics=rng.choice(list(Semantics)),
                aim=rng.choice(list(Aim)),
            )
        )


def test_game_properties():
    for split in _instances(60):
        for s in _reachable(split):
            if s.revealed != split.common:
                # the previous mover established her aim, so the turn player's does not hold
                assert not aim_satisfied(split, s.revealed, s.turn)
            found = minimal_moves(s)
            sets = [m.args for m in found]
            for a, b in itertools.permutations(sets, 2):
                assert not a <= b
            for m in effective_moves(s):
                assert any(x <= m.args for x in sets)
            pick = find_minimal_move(s)
            assert (pick is None) == (not found)
            if pick is not None:
                assert is_effective(s, pick) and is_minimal(s, pick)
                assert pick == found[0]
            # oracle: a minimal set is effective with no effective nonempty proper subset
            for m in found:
                for k in range(1, len(m.args)):
                    for sub in itertools.combinations(sorted(m.args), k):
                        assert not aim_satisfied(split, s.revealed | set(sub), s.turn)
