"""Small graph routines shared by fragment recognition and backdoor search.

All functions take an explicit node list plus adjacency mapping so callers
can cheaply mask out deleted vertices. Node order determines tie-breaking,
so callers pass nodes in canonical (sorted) order for deterministic output.
"""

from __future__ import annotations

from collections import deque
from typing import Mapping, Sequence

__all__ = [
    "is_acyclic",
    "strongly_connected_components",
    "shortest_directed_cycle",
    "odd_undirected_cycle",
]

Adjacency = Mapping[str, Sequence[str]]


def is_acyclic(nodes: Sequence[str], targets: Adjacency) -> bool:
    """Kahn's algorithm; a self-loop counts as a cycle."""
    indegree = {x: 0 for x in nodes}
    for x in nodes:
        for y in targets[x]:
            indegree[y] += 1
    ready = deque(x for x in nodes if indegree[x] == 0)
    processed = 0
    while ready:
        x = ready.popleft()
        processed += 1
        for y in targets[x]:
            indegree[y] -= 1
            if indegree[y] == 0:
                ready.append(y)
    return processed == len(nodes)


def strongly_connected_components(nodes: Sequence[str],
                                  targets: Adjacency) -> list[list[str]]:
    """Tarjan's algorithm, iterative to dodge recursion limits."""
    index: dict[str, int] = {}
    lowlink: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    components: list[list[str]] = []
    counter = 0

    for root in nodes:
        if root in index:
            continue
        work: list[tuple[str, int]] = [(root, 0)]
        while work:
            node, child_pos = work[-1]
            if child_pos == 0:
                index[node] = lowlink[node] = counter
                counter += 1
                stack.append(node)
                on_stack.add(node)
            advanced = False
            children = targets[node]
            for pos in range(child_pos, len(children)):
                child = children[pos]
                if child not in index:
                    work[-1] = (node, pos + 1)
                    work.append((child, 0))
                    advanced = True
                    break
                if child in on_stack:
                    lowlink[node] = min(lowlink[node], index[child])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
            if lowlink[node] == index[node]:
                component: list[str] = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == node:
                        break
                components.append(component)
    return components


def shortest_directed_cycle(nodes: Sequence[str],
                            targets: Adjacency) -> list[str] | None:
    """A shortest directed cycle as a vertex list, or None if acyclic.

    Self-loops are cycles of length 1. Among equally short cycles the one
    discovered first in node order wins, which keeps results deterministic.
    """
    for x in nodes:
        if x in targets[x]:
            return [x]

    best: list[str] | None = None
    for component in strongly_connected_components(nodes, targets):
        if len(component) < 2:
            continue
        members = set(component)
        for start in sorted(component):
            if best is not None and len(best) == 2:
                return best
            limit = len(best) if best is not None else None
            # BFS for the shortest path from any successor back to start.
            parent: dict[str, str] = {}
            dist = {start: 0}
            queue = deque([start])
            found: str | None = None
            while queue and found is None:
                x = queue.popleft()
                if limit is not None and dist[x] + 1 >= limit:
                    continue
                for y in targets[x]:
                    if y not in members:
                        continue
                    if y == start:
                        found = x
                        break
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        queue.append(y)
            if found is not None:
                cycle = [found]
                while cycle[-1] != start:
                    cycle.append(parent[cycle[-1]])
                cycle.reverse()
                if best is None or len(cycle) < len(best):
                    best = cycle
    return best


def odd_undirected_cycle(nodes: Sequence[str],
                         neighbors: Adjacency) -> list[str] | None:
    """An odd cycle of the undirected graph, or None if it is bipartite.

    Self-loops must be handled by the caller; ``neighbors`` is assumed
    loop-free and symmetric.
    """
    color: dict[str, int] = {}
    parent: dict[str, str | None] = {}
    for root in nodes:
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in neighbors[x]:
                if y not in color:
                    color[y] = color[x] ^ 1
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    return _close_odd_cycle(x, y, parent)
    return None


def _close_odd_cycle(x: str, y: str,
                     parent: Mapping[str, str | None]) -> list[str]:
    # Walk both endpoints up the BFS tree to their first common ancestor;
    # the two tree paths plus edge (x, y) form an odd cycle.
    def path_to_root(node: str) -> list[str]:
        chain = [node]
        while (up := parent[chain[-1]]) is not None:
            chain.append(up)
        return chain

    from_x = path_to_root(x)
    from_y = path_to_root(y)
    seen = {node: pos for pos, node in enumerate(from_x)}
    for pos_y, node in enumerate(from_y):
        if node in seen:
            return from_x[:seen[node]] + from_y[:pos_y + 1]
    raise AssertionError("BFS tree endpoints share no ancestor")
