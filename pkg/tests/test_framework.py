import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import complete_extensions, least_complete, random_af, stable_filter
from stratarg.corpus import fixture
from stratarg.errors import SizeBoundExceeded, UnknownArgumentError
from stratarg.framework import (
    ArgumentationFramework,
    grounded_labeling,
    is_complete_extension,
    is_conflict_free,
    is_stable_extension,
    is_well_founded,
    labeling,
    stable_extensions,
)


def test_conflict_free(two_cycle, saf8_af):
    assert is_conflict_free(two_cycle, {"a"})
    assert not is_conflict_free(two_cycle, {"a", "b"})
    assert is_conflict_free(saf8_af, {"A", "B2", "C"})


def test_unknown_argument_is_rejected(two_cycle):
    with pytest.raises(UnknownArgumentError):
        is_conflict_free(two_cycle, {"z"})
    with pytest.raises(UnknownArgumentError):
        is_stable_extension(two_cycle, {"a", "z"})


def test_complete(two_cycle, three_cycle, saf8_af):
    assert is_complete_extension(three_cycle, set())
    assert is_complete_extension(two_cycle, {"a"})
    assert not is_complete_extension(saf8_af, {"A"})


def test_grounded(three_cycle, saf8_af):
    lab = grounded_labeling(three_cycle)
    assert lab.accepted == set() and lab.rejected == set() and lab.undecided == {"a", "b", "c"}
    lab = grounded_labeling(saf8_af)
    assert lab.accepted == {"A", "B2", "C"}
    assert lab.rejected == {"B1", "D"}
    assert lab.undecided == set()
    lab = grounded_labeling(fixture("safmulti").framework)
    assert lab.accepted == {"A", "F", "G", "H"}
    assert lab.rejected == {"B", "C", "D", "E"}
    assert lab.undecided == set()


def test_stable(two_cycle, three_cycle, saf8_af):
    assert is_stable_extension(two_cycle, {"a"})
    assert not is_stable_extension(three_cycle, {"a"})
    assert is_stable_extension(saf8_af, {"A", "B2", "C"})
    assert stable_extensions(two_cycle) == ({"a"}, {"b"})
    assert stable_extensions(three_cycle) == ()
    assert stable_extensions(saf8_af) == ({"A", "B2", "C"},)


def test_stable_bound():
    af = ArgumentationFramework.build([f"x{i}" for i in range(6)])
    with pytest.raises(SizeBoundExceeded):
        stable_extensions(af, bound=5)
    assert stable_extensions(af, bound=6) == (frozenset(af.arguments),)


def test_self_attack_is_allowed():
    af = ArgumentationFramework.build("ab", {("a", "a"), ("a", "b")})
    assert not is_conflict_free(af, {"a"})
    assert grounded_labeling(af).undecided == {"a", "b"}
    assert stable_extensions(af) == ()
    assert not is_well_founded(af)


def test_well_founded(two_cycle, saf8_af):
    assert not is_well_founded(two_cycle)
    assert is_well_founded(fixture("safmulti").framework)
    assert is_well_founded(saf8_af)
    assert not is_well_founded(fixture("choice").framework)


def test_framework_rejects_bad_input():
    with pytest.raises(UnknownArgumentError):
        ArgumentationFramework.build("a", {("a", "b")})
    with pytest.raises(ValueError):
        ArgumentationFramework.build(["a-b"])
    with pytest.raises(ValueError):
        ArgumentationFramework(("a", "a"))


@st.composite
def frameworks(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    args = [f"x{i}" for i in range(n)]
    pairs = [(a, b) for a in args for b in args]
    attacks = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return ArgumentationFramework.build(args, attacks)


@settings(max_examples=150, deadline=None)
@given(frameworks())
def test_grounded_is_least_complete(af):
    args, attacks = af.arguments, set(af.attacks)
    assert grounded_labeling(af).accepted == least_complete(args, attacks)


@settings(max_examples=150, deadline=None)
@given(frameworks())
def test_stable_matches_filter_and_is_complete(af):
    args, attacks = af.arguments, set(af.attacks)
    exts = stable_extensions(af)
    assert set(exts) == set(stable_filter(args, attacks))
    completes = set(complete_extensions(args, attacks))
    for e in exts:
        assert e in completes
        assert is_complete_extension(af, e)
        assert labeling(af, e).undecided == set()


@settings(max_examples=150, deadline=None)
@given(frameworks())
def test_labeling_partitions(af):
    lab = grounded_labeling(af)
    assert lab.accepted | lab.rejected | lab.undecided == set(af.arguments)
    assert not (lab.accepted & lab.rejected or lab.accepted & lab.undecided or lab.rejected & lab.undecided)


@settings(max_examples=150, deadline=None)
@given(frameworks())
def test_well_founded_has_single_complete_extension(af):
    if not is_well_founded(af):
        return
    completes = complete_extensions(af.arguments, set(af.attacks))
    assert completes == [grounded_labeling(af).accepted]
    assert stable_extensions(af) == (completes[0],)
    assert grounded_labeling(af).undecided == set()


def test_stable_output_is_canonically_ordered():
    rng = random.Random(5)
    for _ in range(50):
        args, attacks = random_af(rng, 7)
        af = ArgumentationFramework.build(args, attacks)
        exts = stable_extensions(af)
        keys = [(len(e), sorted(e)) for e in exts]
        assert keys == sorted(keys)
