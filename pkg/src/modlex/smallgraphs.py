"""Exhaustive enumeration of small graphs up to isomorphism.

Graphs on n vertices are edge bitmasks over the C(n,2) vertex pairs.
For n <= 6, canonical forms are computed for *all* masks at once: each
vertex permutation induces a permutation of edge slots, applied to the
whole mask range with vectorized shifts; the running minimum over
permutations is the canonical form. n = 7 is reached inductively: every
connected 7-vertex graph is some 6-vertex graph plus a new vertex with a
nonempty neighbor set, so canonicalizing those ~10k candidates suffices.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .errors import PreconditionError
from .graph import Graph

__all__ = ["connected_graphs", "all_graphs", "pair_slots"]

_MAX_DIRECT = 6


def pair_slots(n: int) -> list[tuple[int, int]]:
    """Fixed ordering of vertex pairs backing the edge-mask encoding."""
    return list(combinations(range(n), 2))


def _mask_to_graph(n: int, mask: int, slots: list[tuple[int, int]]) -> Graph:
    edges = [slots[i] for i in range(len(slots)) if (mask >> i) & 1]
    return Graph(n, edges)


def _slot_permutation_targets(n: int) -> list[list[int]]:
    """For each vertex permutation, where every edge slot lands."""
    slots = pair_slots(n)
    slot_index = {pair: i for i, pair in enumerate(slots)}
    targets = []
    for perm in permutations(range(n)):
        targets.append(
            [slot_index[tuple(sorted((perm[u], perm[v])))] for u, v in slots]
        )
    return targets


def _canonicalize(masks: np.ndarray, n: int) -> np.ndarray:
    nbits = n * (n - 1) // 2
    canon = masks.copy()
    for target in _slot_permutation_targets(n):
        permuted = np.zeros_like(masks)
        for i in range(nbits):
            permuted |= ((masks >> i) & 1) << target[i]
        np.minimum(canon, permuted, out=canon)
    return canon


def _connected_flags(masks: np.ndarray, n: int) -> np.ndarray:
    """Vectorized BFS-by-bitset connectivity for every mask at once."""
    rows = np.zeros((masks.shape[0], n), dtype=np.int64)
    for i, (u, v) in enumerate(pair_slots(n)):
        bit = (masks >> i) & 1
        rows[:, u] |= bit << v
        rows[:, v] |= bit << u
    reach = rows[:, 0] | 1
    for _ in range(n - 1):
        grown = reach.copy()
        for u in range(n):
            grown |= rows[:, u] * ((reach >> u) & 1)
        if np.array_equal(grown, reach):
            break
        reach = grown
    return reach == (1 << n) - 1


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(canonical connected masks, canonical all masks) for n vertices."""
    if n < 1 or n > _MAX_DIRECT:
        raise PreconditionError(f"direct enumeration supports 1..{_MAX_DIRECT}")
    if n == 1:
        return (0,), (0,)
    masks = np.arange(1 << (n * (n - 1) // 2), dtype=np.int64)
    connected = _connected_flags(masks, n)
    canon = _canonicalize(masks, n)
    return (
        tuple(int(m) for m in np.unique(canon[connected])),
        tuple(int(m) for m in np.unique(canon)),
    )


@lru_cache(maxsize=None)
def _enumerate_7_connected() -> tuple[int, ...]:
    """Connected 7-vertex classes: every 6-vertex class plus one vertex
    attached by every nonempty neighbor set, canonicalized and deduped."""
    slots6 = pair_slots(6)
    slots7 = pair_slots(7)
    slot_index7 = {pair: i for i, pair in enumerate(slots7)}
    embed = [slot_index7[pair] for pair in slots6]
    attach = [slot_index7[(u, 6)] for u in range(6)]

    candidates = []
    for m6 in _enumerate(6)[1]:
        base = 0
        for i in range(len(slots6)):
            if (m6 >> i) & 1:
                base |= 1 << embed[i]
        for nb in range(1, 64):
            mask = base
            for u in range(6):
                if (nb >> u) & 1:
                    mask |= 1 << attach[u]
            candidates.append(mask)
    masks = np.array(candidates, dtype=np.int64)
    connected = _connected_flags(masks, 7)
    canon = _canonicalize(masks[connected], 7)
    return tuple(int(m) for m in np.unique(canon))


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on n vertices, one per isomorphism class."""
    if n == 7:
        slots = pair_slots(7)
        return [_mask_to_graph(7, m, slots) for m in _enumerate_7_connected()]
    slots = pair_slots(n)
    return [_mask_to_graph(n, m, slots) for m in _enumerate(n)[0]]


def all_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices (connected or not), one per class."""
    slots = pair_slots(n)
    return [_mask_to_graph(n, m, slots) for m in _enumerate(n)[1]]
