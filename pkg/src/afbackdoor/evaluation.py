"""Extension enumeration and acceptance through a backdoor.

Pipeline: enumerate the 3^k labelings of the backdoor, propagate each,
collect candidate extensions (the in-part joined with each admissible set
of the still-unlabeled remainder), filter the candidates down to the
complete extensions, and derive the preferred / semi-stable / stable
families from those. Acceptance is then a membership scan.

Candidate collection is parameterized over a sub-solver for the remainder
frameworks. Production uses the no-even-cycle sub-solver: after labeling
has settled, every remaining argument keeps an attacker, so the remainder
of a framework without even directed cycles admits only the empty set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .backdoor import Backdoor, detect
from .fragments import FragmentClass, recognize
from .framework import ArgumentationFramework, Semantics, satisfies
from .labeling import Label, PartialLabeling, propagate, residual
from .oracle import canonical_extensions, enumerate_oracle

__all__ = [
    "DetectionBudgetExceeded",
    "NotInFragmentError",
    "NoEvenSubSolver",
    "OracleSubSolver",
    "candidates_for_labeling",
    "candidates_for_backdoor",
    "complete_extensions",
    "extensions",
    "credulous",
    "skeptical",
]

_EVALUATION_CLASSES = (FragmentClass.ACYC, FragmentClass.NOEVEN)


class DetectionBudgetExceeded(RuntimeError):
    """No backdoor within the requested budget: the distance exceeds k."""


class NotInFragmentError(RuntimeError):
    """A validating sub-solver was handed a framework outside its class."""


@dataclass(frozen=True)
class NoEvenSubSolver:
    """Admissible sets of the residual, for acyclic / no-even-cycle inputs.

    Every argument of a residual framework has an attacker there, hence
    sits on a directed cycle when no even cycles exist, and the only
    admissible set is the empty one. Inputs are trusted by default; with
    ``validate`` the solver first checks class membership and refuses
    outsiders.
    """

    fragment: FragmentClass = FragmentClass.NOEVEN
    validate: bool = False

    def __post_init__(self) -> None:
        if self.fragment not in _EVALUATION_CLASSES:
            raise ValueError(
                f"no polynomial admissible-set solver for {self.fragment.value}")

    def admissible_sets(
            self, af: ArgumentationFramework) -> tuple[frozenset[str], ...]:
        if self.validate and not recognize(af, self.fragment):
            raise NotInFragmentError(
                f"framework is not in class {self.fragment.value}")
        return (frozenset(),)


@dataclass(frozen=True)
class OracleSubSolver:
    """Exhaustive sub-solver, usable for any fragment; test/diagnostic aid."""

    guard: int | None = None

    def admissible_sets(
            self, af: ArgumentationFramework) -> tuple[frozenset[str], ...]:
        return enumerate_oracle(residual(af), Semantics.ADM, guard=self.guard)


def candidates_for_labeling(af: ArgumentationFramework,
                            labeling: PartialLabeling,
                            sub) -> tuple[frozenset[str], ...]:
    """Candidate extensions induced by one backdoor labeling.

    Propagates the labeling, then joins its in-part with every admissible
    set the sub-solver reports for the unlabeled remainder.
    """
    settled = propagate(af, labeling)
    remainder = af.without(settled.defined)
    in_part = settled.in_args
    return canonical_extensions(in_part | extra
                                for extra in sub.admissible_sets(remainder))


def candidates_for_backdoor(af: ArgumentationFramework,
                            backdoor: Backdoor | Iterable[str],
                            sub) -> tuple[frozenset[str], ...]:
    """Union of the candidates over all 3^k labelings of the backdoor.

    Labelings are enumerated as a base-3 counter over the backdoor's
    arguments in name order, digit order in < out < und.
    """
    members = _members(af, backdoor)
    names = sorted(members)
    collected: set[frozenset[str]] = set()
    for combo in itertools.product((Label.IN, Label.OUT, Label.UND),
                                   repeat=len(names)):
        labeling = PartialLabeling(zip(names, combo))
        collected.update(candidates_for_labeling(af, labeling, sub))
    return canonical_extensions(collected)


def complete_extensions(af: ArgumentationFramework,
                        backdoor: Backdoor | Iterable[str],
                        sub) -> tuple[frozenset[str], ...]:
    """Exactly the complete extensions: every candidate is re-tested
    against the complete-semantics definition, nothing is trusted."""
    return tuple(candidate
                 for candidate in candidates_for_backdoor(af, backdoor, sub)
                 if satisfies(af, candidate, Semantics.COM))


def extensions(af: ArgumentationFramework, backdoor: Backdoor | Iterable[str],
               sub, semantics: Semantics) -> tuple[frozenset[str], ...]:
    """Extension family for com/prf/sem/stb via the backdoor pipeline.

    Preferred keeps the inclusion-maximal complete extensions, semi-stable
    those of inclusion-maximal range, stable those whose range covers
    everything. The admissible family is not enumerable this way; for
    credulous queries it coincides with complete and is handled in
    :func:`credulous`.
    """
    if semantics is Semantics.ADM:
        raise ValueError("admissible sets are not enumerated via backdoors; "
                         "query credulous/skeptical instead")
    complete = complete_extensions(af, backdoor, sub)
    if semantics is Semantics.COM:
        return complete
    if semantics is Semantics.PRF:
        return canonical_extensions(
            ext for ext in complete
            if not any(ext < other for other in complete))
    if semantics is Semantics.SEM:
        ranges = {ext: af.range_of(ext) for ext in complete}
        return canonical_extensions(
            ext for ext in complete
            if not any(ranges[ext] < ranges[other] for other in complete))
    if semantics is Semantics.STB:
        return canonical_extensions(
            ext for ext in complete if af.range_of(ext) == af.argument_set)
    raise ValueError(f"unsupported semantics: {semantics!r}")


def credulous(af: ArgumentationFramework, semantics: Semantics, argument: str,
              fragment: FragmentClass = FragmentClass.ACYC,
              max_backdoor: int | None = None) -> bool:
    """Does some extension contain ``argument``?

    Detection runs up to ``max_backdoor`` (default: no limit); if the true
    distance is larger, :class:`DetectionBudgetExceeded` is raised rather
    than answering from a partial search. Credulous acceptance under the
    admissible semantics coincides with the complete one and is answered
    that way.
    """
    family = _pipeline(af, semantics, argument, fragment, max_backdoor)
    return any(argument in ext for ext in family)


def skeptical(af: ArgumentationFramework, semantics: Semantics, argument: str,
              fragment: FragmentClass = FragmentClass.ACYC,
              max_backdoor: int | None = None) -> bool:
    """Does every extension contain ``argument``?

    Constant false for the admissible semantics (the empty set is always
    admissible). Vacuously true when the family is empty, which can only
    happen for the stable semantics.
    """
    if argument not in af:
        raise ValueError(f"unknown argument: {argument!r}")
    if semantics is Semantics.ADM:
        return False
    family = _pipeline(af, semantics, argument, fragment, max_backdoor)
    return all(argument in ext for ext in family)


def _pipeline(af: ArgumentationFramework, semantics: Semantics, argument: str,
              fragment: FragmentClass,
              max_backdoor: int | None) -> tuple[frozenset[str], ...]:
    if argument not in af:
        raise ValueError(f"unknown argument: {argument!r}")
    if fragment not in _EVALUATION_CLASSES:
        raise ValueError(
            f"evaluation supports acyc/noeven backdoors, not {fragment.value}")
    budget = len(af) if max_backdoor is None else max_backdoor
    found = detect(af, fragment, budget)
    if found is None:
        raise DetectionBudgetExceeded(
            f"distance to {fragment.value} exceeds the budget k={budget}")
    effective = Semantics.COM if semantics is Semantics.ADM else semantics
    return extensions(af, found, NoEvenSubSolver(fragment), effective)


def _members(af: ArgumentationFramework,
             backdoor: Backdoor | Iterable[str]) -> frozenset[str]:
    if isinstance(backdoor, Backdoor):
        return af.check_subset(backdoor.members)
    return af.check_subset(backdoor)
