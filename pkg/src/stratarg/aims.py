"""Strategic aims for a focal argument and their evaluation."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .framework import (
    DEFAULT_ENUMERATION_BOUND,
    ArgumentationFramework,
    grounded_extension,
    stable_extensions,
)
from .errors import UnknownArgumentError


class Semantics(str, Enum):
    GROUNDED = "grounded"
    STABLE = "stable"


class Aim(str, Enum):
    EXISTENTIAL = "existential"
    UNIVERSAL = "universal"
    UNREJECTED = "unrejected"
    UNCONTESTED = "uncontested"
    PLURALITY = "plurality"
    MAJORITY = "majority"
    SUPERMAJORITY = "supermajority"


class Side(str, Enum):
    PROPONENT = "proponent"
    OPPONENT = "opponent"

    @property
    def other(self) -> Side:
        return Side.OPPONENT if self is Side.PROPONENT else Side.PROPONENT

    @property
    def letter(self) -> str:
        return "P" if self is Side.PROPONENT else "O"

    @classmethod
    def parse(cls, text: str) -> Side:
        t = text.strip().lower()
        if t in ("p", "proponent"):
            return cls.PROPONENT
        if t in ("o", "opponent"):
            return cls.OPPONENT
        raise ValueError(f"unknown side {text!r}")


@dataclass(frozen=True)
class AimCounts:
    n_accepted: int
    n_rejected: int
    n_undecided_status: int
    n_total: int


def extensions(af: ArgumentationFramework, sem: Semantics, bound: int = DEFAULT_ENUMERATION_BOUND) -> tuple[frozenset[str], ...]:
    if sem is Semantics.GROUNDED:
        return (grounded_extension(af),)
    return stable_extensions(af, bound)


def count_status(
    af: ArgumentationFramework,
    sem: Semantics,
    focal: str,
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> AimCounts:
    # Tolerates an absent focal argument (neither accepted nor rejected anywhere);
    # the game needs this before the focal argument has been played.
    acc = rej = und = 0
    attackers = af.attackers.get(focal, frozenset())
    exts = extensions(af, Semantics(sem), bound)
    for ext in exts:
        if focal in ext:
            acc += 1
        elif attackers & ext:
            rej += 1
        else:
            und += 1
    return AimCounts(acc, rej, und, len(exts))


def aim_counts(
    af: ArgumentationFramework,
    sem: Semantics,
    focal: str,
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> AimCounts:
    if focal not in af.argument_set:
        raise UnknownArgumentError(f"unknown focal argument {focal!r}")
    return count_status(af, sem, focal, bound)


def aim_holds(counts: AimCounts, aim: Aim, strict_empty: bool = False) -> bool:
    """Proponent truth value of ``aim`` given per-extension counts.

    With no extensions at all the quantifiers are read literally (universal,
    unrejected and supermajority hold vacuously) unless ``strict_empty`` is set,
    in which case every proponent aim fails.
    """
    acc, rej, total = counts.n_accepted, counts.n_rejected, counts.n_total
    if strict_empty and total == 0:
        return False
    not_acc = total - acc
    match Aim(aim):
        case Aim.EXISTENTIAL:
            return acc >= 1
        case Aim.UNIVERSAL:
            return acc == total
        case Aim.UNREJECTED:
            return rej == 0
        case Aim.UNCONTESTED:
            return acc >= 1 and rej == 0
        case Aim.PLURALITY:
            return acc > rej
        case Aim.MAJORITY:
            return acc > not_acc
        case Aim.SUPERMAJORITY:
            return acc >= 2 * not_acc
    raise AssertionError(aim)


def verify_aim(
    af: ArgumentationFramework,
    sem: Semantics,
    aim: Aim,
    focal: str,
    side: Side = Side.PROPONENT,
    *,
    strict_empty: bool = False,
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> bool:
    """Aim verification: does ``side``'s aim hold for ``focal`` in ``af``?

    The opponent's aim is the negation of the proponent's.
    """
    holds = aim_holds(aim_counts(af, sem, focal, bound), aim, strict_empty)
    return holds if Side(side) is Side.PROPONENT else not holds
