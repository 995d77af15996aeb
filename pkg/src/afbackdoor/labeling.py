"""Partial labelings and their deterministic propagation.

A partial labeling maps a subset of a framework's arguments to in/out/und.
Propagation extends a labeling to further arguments by exhaustively
applying three rules to unlabeled arguments:

* an argument with an attacker labeled in becomes out;
* an argument all of whose attackers are labeled out becomes in;
* an argument all of whose attackers are labeled out or und, at least one
  und, becomes und.

The rules never relabel anything and their premises only ever become true
as labels are added, so the fixpoint is unique no matter the order of
application. Propagation also never validates the seed labels: a seed
that contradicts the rules is simply extended, and bad guesses are weeded
out later by the completeness filter of the evaluation pipeline.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Mapping
from enum import Enum

from .framework import ArgumentationFramework

__all__ = [
    "Label",
    "PartialLabeling",
    "labeling_from_set",
    "is_compatible",
    "propagate",
    "residual",
]


class Label(str, Enum):
    IN = "in"
    OUT = "out"
    UND = "und"


class PartialLabeling:
    """Immutable assignment of labels to a subset of arguments.

    Querying an argument outside the assigned domain yields ``None`` from
    :meth:`get` (or a ``KeyError`` from indexing); there is no implicit
    default label.
    """

    __slots__ = ("_assignments",)

    def __init__(self, assignments: Mapping[str, Label] |
                 Iterable[tuple[str, Label]] = ()) -> None:
        mapping = dict(assignments)
        for name, label in mapping.items():
            if not isinstance(label, Label):
                raise ValueError(f"{name!r} carries a non-label: {label!r}")
        self._assignments = mapping

    @classmethod
    def empty(cls) -> "PartialLabeling":
        return cls()

    @property
    def defined(self) -> frozenset[str]:
        """The arguments this labeling assigns a label to."""
        return frozenset(self._assignments)

    def get(self, name: str) -> Label | None:
        return self._assignments.get(name)

    def __getitem__(self, name: str) -> Label:
        return self._assignments[name]

    def __contains__(self, name: object) -> bool:
        return name in self._assignments

    def __len__(self) -> int:
        return len(self._assignments)

    def __iter__(self) -> Iterator[str]:
        return iter(self._assignments)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialLabeling):
            return NotImplemented
        return self._assignments == other._assignments

    def __repr__(self) -> str:
        inner = ", ".join(f"{name}={label.value}"
                          for name, label in sorted(self._assignments.items()))
        return f"PartialLabeling({inner})"

    def with_label(self, label: Label) -> frozenset[str]:
        return frozenset(name for name, current in self._assignments.items()
                         if current is label)

    @property
    def in_args(self) -> frozenset[str]:
        return self.with_label(Label.IN)

    @property
    def out_args(self) -> frozenset[str]:
        return self.with_label(Label.OUT)

    @property
    def und_args(self) -> frozenset[str]:
        return self.with_label(Label.UND)

    def dump(self) -> str:
        """Debug text: one ``<arg>=<in|out|und>`` line per labeled argument,
        in canonical name order."""
        lines = [f"{name}={self._assignments[name].value}"
                 for name in sorted(self._assignments)]
        return "\n".join(lines) + "\n" if lines else ""


def labeling_from_set(af: ArgumentationFramework,
                      members: Iterable[str]) -> PartialLabeling:
    """The total labeling induced by an argument set: the set itself is in,
    everything it attacks is out, the rest is und."""
    subset = af.check_subset(members)
    reached = af.range_of(subset)
    assignments = {}
    for name in af.arguments:
        if name in subset:
            assignments[name] = Label.IN
        elif name in reached:
            assignments[name] = Label.OUT
        else:
            assignments[name] = Label.UND
    return PartialLabeling(assignments)


def is_compatible(af: ArgumentationFramework, labeling: PartialLabeling,
                  members: Iterable[str]) -> bool:
    """True iff ``labeling`` agrees with the set-induced labeling of
    ``members`` everywhere it is defined."""
    af.check_subset(labeling.defined)
    total = labeling_from_set(af, members)
    return all(total[name] is labeling[name] for name in labeling)


def propagate(af: ArgumentationFramework,
              labeling: PartialLabeling) -> PartialLabeling:
    """The unique fixpoint extension of ``labeling`` under the three rules.

    Work-queue implementation with per-argument attacker counters; linear
    in the number of attacks. Seed labels are kept verbatim.
    """
    af.check_subset(labeling.defined)
    label: dict[str, Label] = {name: labeling[name] for name in labeling}

    pending = {x: len(af.attackers(x)) for x in af.arguments if x not in label}
    out_count = {x: 0 for x in pending}
    und_count = {x: 0 for x in pending}
    in_seen = {x: False for x in pending}

    queue: deque[str] = deque()

    def assign(name: str, value: Label) -> None:
        label[name] = value
        del pending[name]
        queue.append(name)

    # Unattacked arguments satisfy the all-attackers-out rule vacuously.
    for name in list(pending):
        if pending[name] == 0:
            assign(name, Label.IN)
    queue.extend(labeling.defined)

    while queue:
        source = queue.popleft()
        value = label[source]
        for target in sorted(af.targets(source)):
            if target not in pending:
                continue
            if value is Label.IN:
                in_seen[target] = True
            elif value is Label.OUT:
                out_count[target] += 1
            else:
                und_count[target] += 1
            total = pending[target]
            if in_seen[target]:
                assign(target, Label.OUT)
            elif out_count[target] == total:
                assign(target, Label.IN)
            elif out_count[target] + und_count[target] == total:
                assign(target, Label.UND)
    return PartialLabeling(label)


def residual(af: ArgumentationFramework) -> ArgumentationFramework:
    """The framework left after removing everything the empty labeling
    propagates to. Every surviving argument keeps at least one attacker."""
    closure = propagate(af, PartialLabeling.empty())
    return af.without(closure.defined)
