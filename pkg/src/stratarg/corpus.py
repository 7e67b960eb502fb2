"""Built-in example games and a seeded random split-framework generator."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .aims import Aim, Semantics
from .errors import InvalidParamsError, UnknownFixtureError
from .game import SplitFramework


def _edges(spec: str) -> frozenset[tuple[str, str]]:
    return frozenset(tuple(e.split(">")) for e in spec.split())


_FIXTURES: dict[str, tuple[str, str, str]] = {
    # name: (proponent pool, opponent pool, attacks)
    "saf8": ("A C", "B1 B2 D", "B1>A C>B1 D>C B2>D"),
    "safmulti": ("A C E G H", "B D F", "B>A C>B G>B D>C E>D H>D F>C F>E"),
    "saf16": (
        "A C1 C2 F",
        "B1 B2 D1 D2 E",
        "B1>A B2>A C1>B1 C2>B2 D1>C1 D2>C2 F>B1 E>B2 E>C1 E>C2 E>D1 E>D2",
    ),
    "ah": ("A C F G H", "B D E", "B>A C>B D>C E>A F>B G>E H>E H>F"),
    "choice": ("A D", "B C", "B>A B>C C>A C>B D>C"),
}

FIXTURE_NAMES = tuple(_FIXTURES)


def fixture(name: str) -> SplitFramework:
    """One of the worked example games, focal argument A, grounded/existential."""
    try:
        p, o, att = _FIXTURES[name]
    except KeyError:
        raise UnknownFixtureError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}") from None
    return SplitFramework(
        common=frozenset(),
        proponent_private=frozenset(p.split()),
        opponent_private=frozenset(o.split()),
        attacks=_edges(att),
        focal="A",
        semantics=Semantics.GROUNDED,
        aim=Aim.EXISTENTIAL,
    )


@dataclass(frozen=True)
class GeneratorParams:
    n_common: int = 0
    n_p: int = 3
    n_o: int = 3
    attack_probability: Fraction | float = Fraction(1, 3)
    seed: int = 0
    require_focal_playable: bool = True
    acyclic_only: bool = False
    self_attacks: bool = False
    semantics: Semantics = Semantics.GROUNDED
    aim: Aim = Aim.EXISTENTIAL

    def validate(self) -> None:
        if min(self.n_common, self.n_p, self.n_o) < 0:
            raise InvalidParamsError("argument counts must be non-negative")
        if not 0 <= self.attack_probability <= 1:
            raise InvalidParamsError("attack probability must lie in [0, 1]")
        if self.require_focal_playable and self.n_p < 1:
            raise InvalidParamsError("a playable focal argument needs n_p >= 1")
        if self.n_p + self.n_common < 1:
            raise InvalidParamsError("no argument can serve as focal")
        if not 0 <= self.seed < 2**64:
            raise InvalidParamsError("seed must be a 64-bit unsigned integer")


def random_split(params: GeneratorParams) -> SplitFramework:
    """Draw a split framework; equal params always give the same framework.

    Each ordered pair of distinct arguments is attacked independently. With
    ``acyclic_only`` the arguments are first shuffled and only pairs pointing
    forward in that order may be drawn, so the result is always well-founded.
    """
    params.validate()
    rng = random.Random(params.seed)
    common = [f"c{i}" for i in range(1, params.n_common + 1)]
    prop = [f"p{i}" for i in range(1, params.n_p + 1)]
    opp = [f"o{i}" for i in range(1, params.n_o + 1)]
    names = common + prop + opp
    q = params.attack_probability
    rank = {a: i for i, a in enumerate(names)}
    if params.acyclic_only:
        order = names[:]
        rng.shuffle(order)
        rank = {a: i for i, a in enumerate(order)}
    attacks = set()
    for a in names:
        for b in names:
            if a == b:
                if params.self_attacks and not params.acyclic_only and rng.random() < q:
                    attacks.add((a, a))
                continue
            if params.acyclic_only and rank[a] > rank[b]:
                continue
            if rng.random() < q:
                attacks.add((a, b))
    return SplitFramework(
        common=frozenset(common),
        proponent_private=frozenset(prop),
        opponent_private=frozenset(opp),
        attacks=frozenset(attacks),
        focal=prop[0] if prop else common[0],
        semantics=params.semantics,
        aim=params.aim,
    )
