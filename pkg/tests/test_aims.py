import random

import pytest

from oracles import random_af
from stratarg.aims import Aim, AimCounts, Semantics, Side, aim_counts, aim_holds, verify_aim
from stratarg.errors import UnknownArgumentError
from stratarg.framework import ArgumentationFramework, grounded_labeling

G, S = Semantics.GROUNDED, Semantics.STABLE
P, O = Side.PROPONENT, Side.OPPONENT


def test_counts(two_cycle, three_cycle):
    assert aim_counts(two_cycle, S, "a") == AimCounts(1, 1, 0, 2)
    assert aim_counts(three_cycle, S, "a") == AimCounts(0, 0, 0, 0)
    assert aim_counts(three_cycle, G, "a") == AimCounts(0, 0, 1, 1)


def test_counts_unknown_focal(two_cycle):
    with pytest.raises(UnknownArgumentError):
        aim_counts(two_cycle, G, "z")


def test_verify_examples(saf8_af, two_cycle, three_cycle):
    assert verify_aim(saf8_af, G, Aim.EXISTENTIAL, "A", P)
    assert not verify_aim(two_cycle, S, Aim.UNIVERSAL, "a", P)
    assert verify_aim(two_cycle, S, Aim.EXISTENTIAL, "a", P)
    assert verify_aim(three_cycle, S, Aim.UNIVERSAL, "a", P)


@pytest.mark.parametrize(
    "aim, expected",
    [
        (Aim.EXISTENTIAL, False),
        (Aim.UNIVERSAL, True),
        (Aim.UNREJECTED, True),
        (Aim.UNCONTESTED, False),
        (Aim.PLURALITY, False),
        (Aim.MAJORITY, False),
        (Aim.SUPERMAJORITY, True),
    ],
)
def test_no_extensions_reads_quantifiers_literally(three_cycle, aim, expected):
    assert verify_aim(three_cycle, S, aim, "a") is expected
    assert verify_aim(three_cycle, S, aim, "a", strict_empty=True) is False


def test_supermajority_is_non_strict():
    assert aim_holds(AimCounts(2, 1, 0, 3), Aim.SUPERMAJORITY)
    assert not aim_holds(AimCounts(2, 2, 0, 4), Aim.SUPERMAJORITY)
    # undecided-status extensions count as "not accepted"
    assert not aim_holds(AimCounts(2, 0, 2, 4), Aim.SUPERMAJORITY)
    assert not aim_holds(AimCounts(2, 0, 2, 4), Aim.MAJORITY)
    assert aim_holds(AimCounts(2, 0, 2, 4), Aim.PLURALITY)


def _random_cases(n, seed=11):
    rng = random.Random(seed)
    for _ in range(n):
        args, attacks = random_af(rng, 7)
        if not args:
            continue
        yield ArgumentationFramework.build(args, attacks), rng.choice(sorted(args))


def test_aim_properties():
    for af, focal in _random_cases(300):
        for sem in Semantics:
            c = aim_counts(af, sem, focal)
            assert c.n_accepted + c.n_rejected + c.n_undecided_status == c.n_total
            if sem is G:
                assert c.n_total == 1
            else:
                assert c.n_undecided_status == 0
            for aim in Aim:
                p = verify_aim(af, sem, aim, focal, P)
                assert verify_aim(af, sem, aim, focal, O) is (not p)
            assert verify_aim(af, sem, Aim.UNCONTESTED, focal) == (
                verify_aim(af, sem, Aim.EXISTENTIAL, focal) and verify_aim(af, sem, Aim.UNREJECTED, focal)
            )
        accepted = focal in grounded_labeling(af).accepted
        for aim in Aim:
            if aim is not Aim.UNREJECTED:
                assert verify_aim(af, G, aim, focal) is accepted
        assert verify_aim(af, S, Aim.PLURALITY, focal) == verify_aim(af, S, Aim.MAJORITY, focal)
