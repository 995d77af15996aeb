"""Recognition of the four tractable fragment classes.

Acyclicity, symmetry and bipartiteness have straightforward polynomial
tests. Absence of even directed cycles does not (the known polynomial
algorithm is far outside this project's scope), so recognition of that
class runs an exhaustive simple-cycle search under a step budget; when
the budget runs out a :class:`SearchBudgetExceeded` is raised instead of
guessing.
"""

from __future__ import annotations

from enum import Enum

from .framework import ArgumentationFramework
from .graphutils import (
    is_acyclic,
    odd_undirected_cycle,
    strongly_connected_components,
)

__all__ = [
    "FragmentClass",
    "SearchBudgetExceeded",
    "DEFAULT_CYCLE_BUDGET",
    "recognize",
    "asymmetric_pairs",
]

DEFAULT_CYCLE_BUDGET = 100_000


class FragmentClass(str, Enum):
    """Classes of frameworks whose acceptance problems are polynomial."""

    ACYC = "acyc"
    NOEVEN = "noeven"
    SYM = "sym"
    BIP = "bip"


class SearchBudgetExceeded(RuntimeError):
    """Even-cycle search ran out of budget; the answer is unknown, not 'no'."""


def recognize(af: ArgumentationFramework, fragment: FragmentClass, *,
              cycle_budget: int = DEFAULT_CYCLE_BUDGET) -> bool:
    """Decide membership of ``af`` in ``fragment``.

    ``cycle_budget`` only matters for the no-even-cycle class; exceeding it
    raises :class:`SearchBudgetExceeded` rather than returning a wrong
    answer.
    """
    if fragment is FragmentClass.ACYC:
        return is_acyclic(af.arguments, _sorted_targets(af))
    if fragment is FragmentClass.SYM:
        return all((b, a) in af.attack_set for a, b in af.attack_set)
    if fragment is FragmentClass.BIP:
        return _is_bipartite(af)
    if fragment is FragmentClass.NOEVEN:
        return not _has_even_directed_cycle(af, cycle_budget)
    raise ValueError(f"unsupported fragment class: {fragment!r}")


def asymmetric_pairs(af: ArgumentationFramework) -> frozenset[tuple[str, str]]:
    """Unordered pairs {x, y}, x != y, attacked in exactly one direction.

    Each pair is encoded as a name-sorted tuple.
    """
    pairs = set()
    for a, b in af.attack_set:
        if a != b and (b, a) not in af.attack_set:
            pairs.add((a, b) if a < b else (b, a))
    return frozenset(pairs)


def _sorted_targets(af: ArgumentationFramework) -> dict[str, tuple[str, ...]]:
    return {x: tuple(sorted(af.targets(x))) for x in af.arguments}


def _is_bipartite(af: ArgumentationFramework) -> bool:
    # A self-attacker fits in no conflict-free part.
    if any((x, x) in af.attack_set for x in af.arguments):
        return False
    neighbors: dict[str, set[str]] = {x: set() for x in af.arguments}
    for a, b in af.attack_set:
        neighbors[a].add(b)
        neighbors[b].add(a)
    undirected = {x: tuple(sorted(v)) for x, v in neighbors.items()}
    return odd_undirected_cycle(sorted(af.arguments), undirected) is None


def _has_even_directed_cycle(af: ArgumentationFramework, budget: int) -> bool:
    """Exhaustive simple-cycle search for a cycle of even length.

    A mutual attack is an even cycle and short-circuits the search; an
    acyclic framework trivially has none. Otherwise simple cycles are
    enumerated per strongly connected component, each counted once at its
    smallest vertex, pruned to vertices that can still reach the start.
    Worst case exponential; every expansion step decrements ``budget``.
    """
    for a, b in af.attack_set:
        if a != b and (b, a) in af.attack_set:
            return True
    targets = _sorted_targets(af)
    nodes = sorted(af.arguments)
    if is_acyclic(nodes, targets):
        return False

    steps = budget

    def charge() -> None:
        nonlocal steps
        steps -= 1
        if steps < 0:
            raise SearchBudgetExceeded(
                f"even-cycle search exceeded budget of {budget} steps")

    for component in strongly_connected_components(nodes, targets):
        if len(component) < 2:
            continue  # a lone vertex carries at most a self-loop (odd)
        members = sorted(component)
        for pos, start in enumerate(members):
            allowed = set(members[pos:])
            reach_start = _reaching(start, allowed, targets)
            if _even_cycle_from(start, allowed, reach_start, targets, charge):
                return True
    return False


def _reaching(goal: str, allowed: set[str],
              targets: dict[str, tuple[str, ...]]) -> set[str]:
    """Vertices inside ``allowed`` with a directed path to ``goal``."""
    reverse: dict[str, list[str]] = {x: [] for x in allowed}
    for x in allowed:
        for y in targets[x]:
            if y in allowed:
                reverse[y].append(x)
    seen = {goal}
    frontier = [goal]
    while frontier:
        nxt = frontier.pop()
        for prev in reverse[nxt]:
            if prev not in seen:
                seen.add(prev)
                frontier.append(prev)
    return seen


def _even_cycle_from(start: str, allowed: set[str], reach_start: set[str],
                     targets: dict[str, tuple[str, ...]], charge) -> bool:
    on_path = {start}

    def walk(node: str, edges: int) -> bool:
        for nxt in targets[node]:
            if nxt not in allowed:
                continue
            charge()
            if nxt == start:
                if (edges + 1) % 2 == 0:
                    return True
            elif nxt not in on_path and nxt in reach_start:
                on_path.add(nxt)
                if walk(nxt, edges + 1):
                    return True
                on_path.discard(nxt)
        return False

    return walk(start, 0)
