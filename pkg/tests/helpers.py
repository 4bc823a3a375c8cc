"""Shared generators and naive helpers for the test suite."""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations

from modlex import Graph, GraphFamily, build_graph

INF = float("inf")


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.3) -> Graph:
    """Random spanning tree plus a sprinkle of extra edges."""
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for u, v in combinations(range(n), 2):
        if rng.random() < extra:
            edges.add((u, v))
    return build_graph(n, sorted(edges))


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return build_graph(n, edges)


def random_family(
    rng: random.Random,
    max_base: int = 6,
    max_component: int = 4,
    connected_base: bool = True,
) -> GraphFamily:
    base_n = rng.randint(2, max_base)
    base = (
        random_connected_graph(rng, base_n)
        if connected_base
        else random_graph(rng, base_n)
    )
    components = {
        v: random_connected_graph(rng, rng.randint(1, max_component))
        if rng.random() < 0.7
        else random_graph(rng, rng.randint(1, max_component))
        for v in range(base.n)
    }
    return GraphFamily(base=base, components=components)


def subset_distances(g: Graph, members: tuple[int, ...]) -> dict:
    """BFS distance table of the subgraph induced by `members`."""
    members = tuple(sorted(members))
    inside = set(members)
    adj = {v: [w for w in g.neighbors(v) if w in inside] for v in members}
    table = {}
    for s in members:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        for t in members:
            table[(s, t)] = dist.get(t, INF)
    return table
