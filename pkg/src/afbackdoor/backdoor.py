"""Backdoor detection: find a small argument set whose removal lands in a
tractable fragment.

Brute force works for any class by sweeping subsets in increasing size.
The acyclic, symmetric and bipartite classes get exact bounded-depth
branching solvers (directed feedback vertex set, vertex cover of the
asymmetric pairs, odd cycle transversal). The no-even-cycle class falls
back to brute force.

All detectors return the minimum-size backdoor and break ties toward the
lexicographically least set, so repeated runs are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .framework import ArgumentationFramework
from .fragments import FragmentClass, asymmetric_pairs, recognize
from .graphutils import (
    odd_undirected_cycle,
    shortest_directed_cycle,
    strongly_connected_components,
)

__all__ = [
    "Backdoor",
    "detect",
    "detect_bruteforce",
    "detect_acyc",
    "detect_sym",
    "detect_bip",
    "distance",
]

# exists(include, exclude, budget): is there a solution containing all of
# `include`, none of `exclude`, and at most `budget` further vertices?
ExistsFn = Callable[[frozenset, frozenset, int], bool]


@dataclass(frozen=True)
class Backdoor:
    """A set of arguments whose removal puts the framework in `fragment`."""

    members: frozenset[str]
    fragment: FragmentClass
    certified_minimum: bool = True

    @property
    def size(self) -> int:
        return len(self.members)

    def sorted_members(self) -> tuple[str, ...]:
        return tuple(sorted(self.members))


def detect_bruteforce(af: ArgumentationFramework, fragment: FragmentClass,
                      k: int) -> Backdoor | None:
    """Sweep subsets by size, then lexicographically; None if none fits k."""
    if k < 0:
        raise ValueError("budget k must be nonnegative")
    names = sorted(af.arguments)
    for size in range(min(k, len(names)) + 1):
        for combo in itertools.combinations(names, size):
            if recognize(af.without(combo), fragment):
                return Backdoor(frozenset(combo), fragment)
    return None


def detect_acyc(af: ArgumentationFramework, k: int) -> Backdoor | None:
    """Minimum directed feedback vertex set of size <= k.

    Branches on the vertices of a shortest directed cycle of the remaining
    framework, one budget unit per chosen vertex.
    """
    targets = {x: tuple(sorted(af.targets(x))) for x in af.arguments}
    nodes = sorted(af.arguments)

    def exists(include: frozenset, exclude: frozenset, budget: int) -> bool:
        kept = [x for x in nodes if x not in include]
        local = {x: tuple(y for y in targets[x] if y not in include)
                 for x in kept}
        cycle = shortest_directed_cycle(kept, local)
        if cycle is None:
            return True
        if budget <= 0:
            return False
        return any(exists(include | {v}, exclude, budget - 1)
                   for v in cycle if v not in exclude)

    universe = _cycle_vertices(af)
    return _detect_minimum(af, FragmentClass.ACYC, k, exists, universe)


def detect_sym(af: ArgumentationFramework, k: int) -> Backdoor | None:
    """Minimum vertex cover of the asymmetric-pair graph, size <= k.

    Branches on the two endpoints of an uncovered pair.
    """
    pairs = sorted(asymmetric_pairs(af))

    def exists(include: frozenset, exclude: frozenset, budget: int) -> bool:
        for a, b in pairs:
            if a in include or b in include:
                continue
            if budget <= 0:
                return False
            return any(exists(include | {v}, exclude, budget - 1)
                       for v in (a, b) if v not in exclude)
        return True

    universe = sorted({v for pair in pairs for v in pair})
    return _detect_minimum(af, FragmentClass.SYM, k, exists, universe)


def detect_bip(af: ArgumentationFramework, k: int) -> Backdoor | None:
    """Minimum odd cycle transversal of the undirected attack graph.

    Self-attackers can never sit in a conflict-free part, so they are
    forced into the backdoor before any branching happens.
    """
    self_loops = frozenset(x for x in af.arguments
                           if (x, x) in af.attack_set)
    neighbors: dict[str, set[str]] = {x: set() for x in af.arguments}
    for a, b in af.attack_set:
        if a != b:
            neighbors[a].add(b)
            neighbors[b].add(a)
    adjacency = {x: tuple(sorted(v)) for x, v in neighbors.items()}
    nodes = sorted(af.arguments)

    def exists(include: frozenset, exclude: frozenset, budget: int) -> bool:
        forced = self_loops - include
        if forced & exclude:
            return False
        if len(forced) > budget:
            return False
        include = include | forced
        budget -= len(forced)
        kept = [x for x in nodes if x not in include]
        local = {x: tuple(y for y in adjacency[x] if y not in include)
                 for x in kept}
        cycle = odd_undirected_cycle(kept, local)
        if cycle is None:
            return True
        if budget <= 0:
            return False
        return any(exists(include | {v}, exclude, budget - 1)
                   for v in cycle if v not in exclude)

    universe = sorted(set(self_loops) | _odd_cycle_region(nodes, adjacency))
    return _detect_minimum(af, FragmentClass.BIP, k, exists, universe)


def detect(af: ArgumentationFramework, fragment: FragmentClass,
           k: int) -> Backdoor | None:
    """Route to the specialized solver; no-even-cycle has none and goes
    through brute force."""
    if fragment is FragmentClass.ACYC:
        return detect_acyc(af, k)
    if fragment is FragmentClass.SYM:
        return detect_sym(af, k)
    if fragment is FragmentClass.BIP:
        return detect_bip(af, k)
    return detect_bruteforce(af, fragment, k)


def distance(af: ArgumentationFramework, fragment: FragmentClass) -> int:
    """Size of a smallest backdoor into ``fragment``.

    Always defined: removing every argument leaves the empty framework,
    which belongs to all four classes.
    """
    found = detect(af, fragment, len(af.arguments))
    assert found is not None
    return found.size


def _detect_minimum(af: ArgumentationFramework, fragment: FragmentClass,
                    k: int, exists: ExistsFn,
                    universe: list[str]) -> Backdoor | None:
    if k < 0:
        raise ValueError("budget k must be nonnegative")
    nothing = frozenset()
    minimum: int | None = None
    for size in range(min(k, len(af)) + 1):
        if exists(nothing, nothing, size):
            minimum = size
            break
    if minimum is None:
        return None
    if minimum == 0:
        return Backdoor(nothing, fragment)
    return Backdoor(_lex_min(universe, exists, minimum), fragment)


def _lex_min(universe: list[str], exists: ExistsFn,
             size: int) -> frozenset[str]:
    """Lexicographically least solution of exactly the minimum size.

    Fixes members one position at a time in ascending name order; a
    candidate is kept iff a full-size solution through the current prefix
    still exists with all previously skipped names banned.
    """
    chosen: list[str] = []
    banned: set[str] = set()
    while len(chosen) < size:
        floor = chosen[-1] if chosen else ""
        progressed = False
        for name in universe:
            if name <= floor or name in banned:
                continue
            if exists(frozenset(chosen) | {name}, frozenset(banned),
                      size - len(chosen) - 1):
                chosen.append(name)
                progressed = True
                break
            banned.add(name)
        if not progressed:
            raise AssertionError("minimum solution vanished during tie-break")
    return frozenset(chosen)


def _cycle_vertices(af: ArgumentationFramework) -> list[str]:
    # Only vertices on a directed cycle can appear in a minimum feedback set.
    targets = {x: tuple(sorted(af.targets(x))) for x in af.arguments}
    on_cycle = {x for x in af.arguments if (x, x) in af.attack_set}
    components = strongly_connected_components(sorted(af.arguments), targets)
    for component in components:
        if len(component) > 1:
            on_cycle.update(component)
    return sorted(on_cycle)


def _odd_cycle_region(nodes: list[str],
                      adjacency: dict[str, tuple[str, ...]]) -> set[str]:
    # Vertices of non-bipartite connected components; minimum transversal
    # members always lie on an odd cycle and hence inside one of these.
    region: set[str] = set()
    seen: set[str] = set()
    for root in nodes:
        if root in seen:
            continue
        component = [root]
        seen.add(root)
        queue = [root]
        while queue:
            x = queue.pop()
            for y in adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    component.append(y)
                    queue.append(y)
        local = {x: adjacency[x] for x in component}
        if odd_undirected_cycle(sorted(component), local) is not None:
            region.update(component)
    return region
