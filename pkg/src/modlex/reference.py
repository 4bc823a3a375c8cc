"""Naive reference implementations for cross-checking the fast paths.

Everything here is written the slow, obvious way on purpose: plain
adjacency lists, queue-based BFS, full subset enumeration, definitional
predicates. The test suite asserts equivalence between these and the
optimized implementations; the CLI's `verify` command re-runs a sample of
the same comparisons. Nothing in this module shares code with the bitset
engine beyond reading `Graph.edges`.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

from .graph import Graph

__all__ = [
    "naive_distances",
    "naive_is_isometric",
    "brute_force_ndp",
    "brute_force_is_dp",
    "enumerate_modules",
    "maximal_proper_modules",
    "all_modular_partitions",
]

INF = float("inf")


def _adjacency(g: Graph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def naive_distances(g: Graph) -> list[list[float]]:
    """Queue BFS from every source over plain adjacency lists."""
    adj = _adjacency(g)
    out = []
    for s in range(g.n):
        dist = [INF] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        out.append(dist)
    return out


def naive_is_isometric(g: Graph, members) -> bool:
    """Definitional check: induce, BFS inside, compare all pairs."""
    members = sorted(set(members))
    if not members:
        return True
    index = {v: i for i, v in enumerate(members)}
    inner: list[list[int]] = [[] for _ in members]
    for u, v in g.edges:
        if u in index and v in index:
            inner[index[u]].append(index[v])
            inner[index[v]].append(index[u])
    host = naive_distances(g)
    for i, s in enumerate(members):
        dist = [INF] * len(members)
        dist[i] = 0
        queue = deque([i])
        while queue:
            u = queue.popleft()
            for w in inner[u]:
                if dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        for j, t in enumerate(members):
            if dist[j] != host[s][t]:
                return False
    return True


def brute_force_ndp(g: Graph) -> set[int]:
    """Orders with no isometric subgraph, by full subset enumeration."""
    missing: set[int] = set()
    for k in range(1, g.n + 1):
        if not any(
            naive_is_isometric(g, combo) for combo in combinations(range(g.n), k)
        ):
            missing.add(k)
    return missing


def brute_force_is_dp(g: Graph) -> bool:
    return not brute_force_ndp(g)


def _is_module_definition(g: Graph, members: frozenset[int]) -> bool:
    adj = _adjacency(g)
    outside_views = set()
    for u in members:
        outside_views.add(frozenset(w for w in adj[u] if w not in members))
    return len(outside_views) == 1


def enumerate_modules(g: Graph) -> list[frozenset[int]]:
    """Every nonempty module, straight from the definition."""
    out = []
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            members = frozenset(combo)
            if _is_module_definition(g, members):
                out.append(members)
    return out


def maximal_proper_modules(g: Graph) -> list[frozenset[int]]:
    """Proper modules contained in no larger proper module."""
    everything = frozenset(range(g.n))
    proper = [m for m in enumerate_modules(g) if m != everything]
    return [m for m in proper if not any(m < other for other in proper)]


def all_modular_partitions(g: Graph) -> list[tuple[frozenset[int], ...]]:
    """Every partition of the vertices whose every block is a module."""
    modules = set(enumerate_modules(g))
    results: list[tuple[frozenset[int], ...]] = []

    def grow(remaining: frozenset[int], blocks: list[frozenset[int]]) -> None:
        if not remaining:
            results.append(tuple(blocks))
            return
        anchor = min(remaining)
        # Blocks containing the smallest uncovered vertex, to avoid dupes.
        for m in modules:
            if anchor in m and m <= remaining:
                grow(remaining - m, blocks + [m])

    grow(frozenset(range(g.n)), [])
    return results
