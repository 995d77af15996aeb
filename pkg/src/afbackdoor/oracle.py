"""Brute-force reference enumeration of extensions and acceptance.

Ground truth for everything else in this package: sweep all 2^n argument
subsets and keep those matching the semantics definitions. A guard refuses
frameworks too large to sweep instead of silently crawling. Deliberately
naive in approach; subsets are encoded as bitmasks so the sweep stays
usable inside large test corpora.
"""

from __future__ import annotations

import os
from typing import Iterable

from .framework import ArgumentationFramework, Semantics

__all__ = [
    "OracleGuardError",
    "DEFAULT_GUARD",
    "GUARD_ENV_VAR",
    "extension_sort_key",
    "canonical_extensions",
    "enumerate_oracle",
    "enumerate_all",
    "credulous_oracle",
    "skeptical_oracle",
]

DEFAULT_GUARD = 20
GUARD_ENV_VAR = "AFBACKDOOR_ORACLE_GUARD"


class OracleGuardError(RuntimeError):
    """The framework exceeds the exhaustive-enumeration guard."""


def _resolve_guard(guard: int | None) -> int:
    if guard is not None:
        return guard
    raw = os.environ.get(GUARD_ENV_VAR)
    if raw is not None:
        return int(raw)
    return DEFAULT_GUARD


def extension_sort_key(members: frozenset[str]) -> tuple[int, tuple[str, ...]]:
    """Canonical extension order: by size, then lexicographically."""
    return (len(members), tuple(sorted(members)))


def canonical_extensions(
        sets: Iterable[frozenset[str]]) -> tuple[frozenset[str], ...]:
    """Deduplicate and sort a family of argument sets canonically."""
    return tuple(sorted(set(sets), key=extension_sort_key))


class _MaskIndex:
    """Bitmask encoding of a framework for the subset sweep."""

    def __init__(self, af: ArgumentationFramework) -> None:
        self.names = af.arguments
        position = {name: i for i, name in enumerate(self.names)}
        n = len(self.names)
        self.full = (1 << n) - 1
        self.attacker_mask = [0] * n
        self.target_mask = [0] * n
        for a, b in af.attack_set:
            self.target_mask[position[a]] |= 1 << position[b]
            self.attacker_mask[position[b]] |= 1 << position[a]

    def targets_union(self, mask: int) -> int:
        result = 0
        masks = self.target_mask
        while mask:
            low = mask & -mask
            result |= masks[low.bit_length() - 1]
            mask ^= low
        return result

    def attackers_union(self, mask: int) -> int:
        result = 0
        masks = self.attacker_mask
        while mask:
            low = mask & -mask
            result |= masks[low.bit_length() - 1]
            mask ^= low
        return result

    def to_set(self, mask: int) -> frozenset[str]:
        names = self.names
        members = []
        while mask:
            low = mask & -mask
            members.append(names[low.bit_length() - 1])
            mask ^= low
        return frozenset(members)


def _families(af: ArgumentationFramework) -> tuple[_MaskIndex, list[int],
                                                   list[int], list[int]]:
    """One sweep over all subsets: admissible, complete and stable masks."""
    idx = _MaskIndex(af)
    full = idx.full
    attacker_mask = idx.attacker_mask
    admissible: list[int] = []
    complete: list[int] = []
    stable: list[int] = []
    for mask in range(full + 1):
        struck = idx.targets_union(mask)
        if struck & mask:
            continue  # not conflict-free
        if (struck | mask) == full:
            stable.append(mask)
        if idx.attackers_union(mask) & ~struck:
            continue  # some member is undefended
        admissible.append(mask)
        outside = full & ~mask
        is_complete = True
        while outside:
            low = outside & -outside
            if not attacker_mask[low.bit_length() - 1] & ~struck:
                is_complete = False  # an outside argument is defended
                break
            outside ^= low
        if is_complete:
            complete.append(mask)
    return idx, admissible, complete, stable


def _maximal(masks: list[int]) -> list[int]:
    return [m for m in masks
            if not any(m != other and m & other == m for other in masks)]


def _range_maximal(idx: _MaskIndex, masks: list[int]) -> list[int]:
    ranges = [m | idx.targets_union(m) for m in masks]
    keep = []
    for mask, rng in zip(masks, ranges):
        if not any(rng != other and rng & other == rng for other in ranges):
            keep.append(mask)
    return keep


def enumerate_all(af: ArgumentationFramework, *, guard: int | None = None
                  ) -> dict[Semantics, tuple[frozenset[str], ...]]:
    """All five extension families from a single subset sweep."""
    limit = _resolve_guard(guard)
    if len(af) > limit:
        raise OracleGuardError(
            f"{len(af)} arguments exceed the oracle guard of {limit}")
    idx, admissible, complete, stable = _families(af)

    def convert(masks: list[int]) -> tuple[frozenset[str], ...]:
        return canonical_extensions(idx.to_set(m) for m in masks)

    return {
        Semantics.ADM: convert(admissible),
        Semantics.COM: convert(complete),
        Semantics.STB: convert(stable),
        Semantics.PRF: convert(_maximal(admissible)),
        Semantics.SEM: convert(_range_maximal(idx, admissible)),
    }


def enumerate_oracle(af: ArgumentationFramework, semantics: Semantics, *,
                     guard: int | None = None) -> tuple[frozenset[str], ...]:
    """Exactly the subsets of arguments satisfying ``semantics``."""
    return enumerate_all(af, guard=guard)[semantics]


def credulous_oracle(af: ArgumentationFramework, semantics: Semantics,
                     argument: str, *, guard: int | None = None) -> bool:
    """True iff ``argument`` belongs to at least one extension."""
    if argument not in af:
        raise ValueError(f"unknown argument: {argument!r}")
    return any(argument in ext
               for ext in enumerate_oracle(af, semantics, guard=guard))


def skeptical_oracle(af: ArgumentationFramework, semantics: Semantics,
                     argument: str, *, guard: int | None = None) -> bool:
    """True iff ``argument`` belongs to every extension.

    Vacuously true when the extension family is empty (which happens only
    for the stable semantics).
    """
    if argument not in af:
        raise ValueError(f"unknown argument: {argument!r}")
    return all(argument in ext
               for ext in enumerate_oracle(af, semantics, guard=guard))
