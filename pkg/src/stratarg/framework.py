"""Abstract argumentation frameworks and their grounded/stable semantics."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import SizeBoundExceeded, UnknownArgumentError

ID_PATTERN = re.compile(r"[A-Za-z0-9_]+")

DEFAULT_ENUMERATION_BOUND = 20


def canonical_key(args: Iterable[str]) -> tuple[int, tuple[str, ...]]:
    """Sort key for argument sets: size first, then sorted ids."""
    ids = tuple(sorted(args))
    return len(ids), ids


def fmt_set(args: Iterable[str]) -> str:
    return "{" + ",".join(sorted(args)) + "}"


@dataclass(frozen=True)
class ArgumentationFramework:
    """A finite set of arguments with a binary attack relation.

    ``arguments`` is kept in canonical (sorted) order so that every derived
    result iterates deterministically.
    """

    arguments: tuple[str, ...]
    attacks: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        args = tuple(sorted(set(self.arguments)))
        if len(args) != len(self.arguments):
            raise ValueError("duplicate argument ids")
        object.__setattr__(self, "arguments", args)
        for a in args:
            if not ID_PATTERN.fullmatch(a):
                raise ValueError(f"invalid argument id {a!r}")
        attacks = frozenset((a, b) for a, b in self.attacks)
        known = set(args)
        for a, b in attacks:
            if a not in known or b not in known:
                raise UnknownArgumentError(f"attack ({a},{b}) refers to an unknown argument")
        object.__setattr__(self, "attacks", attacks)

    @classmethod
    def build(cls, arguments: Iterable[str], attacks: Iterable[tuple[str, str]] = ()) -> ArgumentationFramework:
        return cls(tuple(sorted(set(arguments))), frozenset(attacks))

    @cached_property
    def argument_set(self) -> frozenset[str]:
        return frozenset(self.arguments)

    @cached_property
    def attackers(self) -> dict[str, frozenset[str]]:
        out: dict[str, set[str]] = {a: set() for a in self.arguments}
        for a, b in self.attacks:
            out[b].add(a)
        return {a: frozenset(s) for a, s in out.items()}

    @cached_property
    def targets(self) -> dict[str, frozenset[str]]:
        out: dict[str, set[str]] = {a: set() for a in self.arguments}
        for a, b in self.attacks:
            out[a].add(b)
        return {a: frozenset(s) for a, s in out.items()}

    def restrict(self, keep: Iterable[str]) -> ArgumentationFramework:
        """Sub-framework induced by ``keep``."""
        keep = frozenset(keep)
        self.check(keep)
        return ArgumentationFramework(
            tuple(a for a in self.arguments if a in keep),
            frozenset((a, b) for a, b in self.attacks if a in keep and b in keep),
        )

    def check(self, s: Iterable[str]) -> frozenset[str]:
        s = frozenset(s)
        unknown = s - self.argument_set
        if unknown:
            raise UnknownArgumentError(f"unknown argument(s) {fmt_set(unknown)}")
        return s

    def __len__(self) -> int:
        return len(self.arguments)


@dataclass(frozen=True)
class Labeling:
    accepted: frozenset[str]
    rejected: frozenset[str]
    undecided: frozenset[str]

    def status(self, arg: str) -> str:
        if arg in self.accepted:
            return "accepted"
        if arg in self.rejected:
            return "rejected"
        return "undecided"


def attacked_by(af: ArgumentationFramework, s: frozenset[str]) -> frozenset[str]:
    return frozenset(itertools.chain.from_iterable(af.targets[a] for a in s))


def defended_by(af: ArgumentationFramework, s: frozenset[str]) -> frozenset[str]:
    """Arguments all of whose attackers are attacked by ``s``."""
    hit = attacked_by(af, s)
    return frozenset(a for a in af.arguments if af.attackers[a] <= hit)


def labeling(af: ArgumentationFramework, extension: Iterable[str]) -> Labeling:
    accepted = af.check(extension)
    rejected = attacked_by(af, accepted)
    return Labeling(accepted, rejected, af.argument_set - accepted - rejected)


def is_conflict_free(af: ArgumentationFramework, s: Iterable[str]) -> bool:
    s = af.check(s)
    return not any(af.targets[a] & s for a in s)


def is_complete_extension(af: ArgumentationFramework, s: Iterable[str]) -> bool:
    s = af.check(s)
    return is_conflict_free(af, s) and defended_by(af, s) == s


def is_stable_extension(af: ArgumentationFramework, s: Iterable[str]) -> bool:
    s = af.check(s)
    return is_conflict_free(af, s) and attacked_by(af, s) | s == af.argument_set


def grounded_extension(af: ArgumentationFramework) -> frozenset[str]:
    current: frozenset[str] = frozenset()
    while True:
        nxt = defended_by(af, current)
        if nxt == current:
            return current
        current = nxt


def grounded_labeling(af: ArgumentationFramework) -> Labeling:
    return labeling(af, grounded_extension(af))


def _iter_stable(af: ArgumentationFramework) -> Iterator[frozenset[str]]:
    order = af.arguments
    index = {a: i for i, a in enumerate(order)}
    attackers = af.attackers
    targets = af.targets
    n = len(order)

    # forbidden: may not be IN (conflicts with something already IN)
    def search(i: int, inset: frozenset[str], forbidden: frozenset[str]) -> Iterator[frozenset[str]]:
        # every decided non-member must still be attackable by some member
        for b in order[:i]:
            if b in inset or attackers[b] & inset:
                continue
            if not any(index[c] >= i and c not in forbidden for c in attackers[b]):
                return
        if i == n:
            yield inset
            return
        a = order[i]
        if a not in forbidden and a not in targets[a]:
            yield from search(i + 1, inset | {a}, forbidden | targets[a] | attackers[a])
        yield from search(i + 1, inset, forbidden)

    yield from search(0, frozenset(), frozenset())


def stable_extensions(af: ArgumentationFramework, bound: int = DEFAULT_ENUMERATION_BOUND) -> tuple[frozenset[str], ...]:
    """All stable extensions, in canonical order.

    Raises SizeBoundExceeded when the framework has more than ``bound`` arguments.
    """
    if len(af) > bound:
        raise SizeBoundExceeded(f"{len(af)} arguments exceed the enumeration bound {bound}")
    return tuple(sorted(_iter_stable(af), key=canonical_key))


def is_well_founded(af: ArgumentationFramework) -> bool:
    """True iff the attack graph has no cycle (self-attacks included)."""
    indegree = {a: len(af.attackers[a]) for a in af.arguments}
    ready = [a for a, d in indegree.items() if d == 0]
    seen = 0
    while ready:
        a = ready.pop()
        seen += 1
        for b in af.targets[a]:
            indegree[b] -= 1
            if indegree[b] == 0:
                ready.append(b)
    return seen == len(af)
