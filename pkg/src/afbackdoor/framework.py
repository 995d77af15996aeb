"""Core data model: argumentation frameworks and the semantic predicates.

An argumentation framework is a finite set of named arguments together with
a directed attack relation; it doubles as a directed graph. The predicate
:func:`satisfies` is the trusted, definition-level membership test for the
five supported semantics. For the preferred and semi-stable semantics it
enumerates admissible supersets and is therefore exponential; fast paths
live in :mod:`afbackdoor.evaluation`.
"""

from __future__ import annotations

import itertools
import re
from enum import Enum
from typing import Iterable, Iterator

__all__ = [
    "Semantics",
    "ArgumentationFramework",
    "is_valid_name",
    "satisfies",
]

# Argument names must survive the apx syntax unquoted: nonempty, and free of
# whitespace, parentheses and commas.
_NAME_RE = re.compile(r"[^\s(),]+\Z")


class Semantics(str, Enum):
    """The five extension-based semantics supported by this library."""

    ADM = "adm"
    PRF = "prf"
    COM = "com"
    SEM = "sem"
    STB = "stb"


def is_valid_name(name: str) -> bool:
    """True iff ``name`` may be used as an argument identifier."""
    return isinstance(name, str) and bool(_NAME_RE.fullmatch(name))


class ArgumentationFramework:
    """Immutable set of arguments plus a directed attack relation.

    Arguments keep their declaration order (first appearance); attacks have
    set semantics (duplicates collapse, order of first appearance is kept
    for serialization). Self-attacks are legal.
    """

    __slots__ = ("_arguments", "_argument_set", "_attacks", "_attack_set",
                 "_attackers", "_targets")

    def __init__(self, arguments: Iterable[str],
                 attacks: Iterable[tuple[str, str]] = ()) -> None:
        args: list[str] = []
        seen: set[str] = set()
        for name in arguments:
            if not is_valid_name(name):
                raise ValueError(f"invalid argument name: {name!r}")
            if name in seen:
                raise ValueError(f"duplicate argument: {name!r}")
            seen.add(name)
            args.append(name)

        ordered: list[tuple[str, str]] = []
        dedupe: set[tuple[str, str]] = set()
        for pair in attacks:
            source, target = pair
            if source not in seen:
                raise ValueError(f"attack source {source!r} is not an argument")
            if target not in seen:
                raise ValueError(f"attack target {target!r} is not an argument")
            if (source, target) not in dedupe:
                dedupe.add((source, target))
                ordered.append((source, target))

        self._arguments: tuple[str, ...] = tuple(args)
        self._argument_set: frozenset[str] = frozenset(args)
        self._attacks: tuple[tuple[str, str], ...] = tuple(ordered)
        self._attack_set: frozenset[tuple[str, str]] = frozenset(ordered)

        attackers: dict[str, set[str]] = {x: set() for x in args}
        targets: dict[str, set[str]] = {x: set() for x in args}
        for source, target in ordered:
            targets[source].add(target)
            attackers[target].add(source)
        self._attackers = {x: frozenset(v) for x, v in attackers.items()}
        self._targets = {x: frozenset(v) for x, v in targets.items()}

    # -- basic views ------------------------------------------------------

    @property
    def arguments(self) -> tuple[str, ...]:
        """All argument names in declaration order."""
        return self._arguments

    @property
    def argument_set(self) -> frozenset[str]:
        return self._argument_set

    @property
    def attacks(self) -> tuple[tuple[str, str], ...]:
        """All attacks, deduplicated, in order of first appearance."""
        return self._attacks

    @property
    def attack_set(self) -> frozenset[tuple[str, str]]:
        return self._attack_set

    def __contains__(self, name: object) -> bool:
        return name in self._argument_set

    def __iter__(self) -> Iterator[str]:
        return iter(self._arguments)

    def __len__(self) -> int:
        return len(self._arguments)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArgumentationFramework):
            return NotImplemented
        return (self._arguments == other._arguments
                and self._attack_set == other._attack_set)

    def __hash__(self) -> int:
        return hash((self._arguments, self._attack_set))

    def __repr__(self) -> str:
        return (f"ArgumentationFramework({len(self._arguments)} arguments, "
                f"{len(self._attack_set)} attacks)")

    # -- graph accessors ---------------------------------------------------

    def attackers(self, name: str) -> frozenset[str]:
        """All arguments that attack ``name``."""
        self._check_member(name)
        return self._attackers[name]

    def targets(self, name: str) -> frozenset[str]:
        """All arguments attacked by ``name``."""
        self._check_member(name)
        return self._targets[name]

    def has_attack(self, source: str, target: str) -> bool:
        return (source, target) in self._attack_set

    def _check_member(self, name: str) -> None:
        if name not in self._argument_set:
            raise ValueError(f"unknown argument: {name!r}")

    def check_subset(self, members: Iterable[str]) -> frozenset[str]:
        """Validate ``members`` against this framework and freeze it."""
        subset = frozenset(members)
        stray = subset - self._argument_set
        if stray:
            raise ValueError(f"not arguments of this framework: {sorted(stray)}")
        return subset

    # -- structural operations ----------------------------------------------

    def without(self, removed: Iterable[str]) -> "ArgumentationFramework":
        """The framework induced on the arguments outside ``removed``."""
        gone = self.check_subset(removed)
        if not gone:
            return self
        keep = [x for x in self._arguments if x not in gone]
        attacks = [(a, b) for a, b in self._attacks
                   if a not in gone and b not in gone]
        return ArgumentationFramework(keep, attacks)

    def range_of(self, members: Iterable[str]) -> frozenset[str]:
        """``members`` together with every argument attacked from it."""
        subset = self.check_subset(members)
        reached = set(subset)
        for x in subset:
            reached |= self._targets[x]
        return frozenset(reached)

    # -- elementary semantic predicates --------------------------------------

    def is_conflict_free(self, members: Iterable[str]) -> bool:
        """True iff no attack has both endpoints inside ``members``."""
        subset = self.check_subset(members)
        return all(not (self._targets[x] & subset) for x in subset)

    def defends(self, members: Iterable[str], name: str) -> bool:
        """True iff every attacker of ``name`` is attacked by ``members``."""
        subset = self.check_subset(members)
        self._check_member(name)
        counter = set()
        for x in subset:
            counter |= self._targets[x]
        return self._attackers[name] <= counter


def _is_admissible(af: ArgumentationFramework, subset: frozenset[str]) -> bool:
    if not af.is_conflict_free(subset):
        return False
    counter: set[str] = set()
    for x in subset:
        counter |= af.targets(x)
    return all(af.attackers(x) <= counter for x in subset)


def satisfies(af: ArgumentationFramework, members: Iterable[str],
              semantics: Semantics) -> bool:
    """Definition-level test for membership of ``members`` in a semantics.

    Conflict-freeness is checked first for all five semantics. PRF and SEM
    enumerate admissible sets and are exponential in the number of
    arguments; callers wanting speed should use the solver pipeline.
    """
    subset = af.check_subset(members)
    if not af.is_conflict_free(subset):
        return False
    if semantics is Semantics.STB:
        return af.range_of(subset) == af.argument_set

    if not _is_admissible(af, subset):
        return False
    if semantics is Semantics.ADM:
        return True

    if semantics is Semantics.COM:
        return all(x in subset for x in af.arguments if af.defends(subset, x))

    if semantics is Semantics.PRF:
        rest = [x for x in af.arguments if x not in subset]
        for size in range(1, len(rest) + 1):
            for extra in itertools.combinations(rest, size):
                if _is_admissible(af, subset | frozenset(extra)):
                    return False
        return True

    if semantics is Semantics.SEM:
        own_range = af.range_of(subset)
        names = af.arguments
        for size in range(len(names) + 1):
            for combo in itertools.combinations(names, size):
                other = frozenset(combo)
                if _is_admissible(af, other) and own_range < af.range_of(other):
                    return False
        return True

    raise ValueError(f"unsupported semantics: {semantics!r}")
