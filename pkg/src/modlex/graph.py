"""Immutable simple undirected graphs with dense integer vertex ids.

The Graph type is the universal carrier for the whole package: vertices
are exactly 0..n-1, adjacency is stored both as an edge list and as one
integer bitset per vertex (bit x of `adjacency_bits(v)` set iff vx is an
edge). Bitsets make the hot predicates of module detection and isometry
testing a couple of machine-word operations per vertex.

All values are immutable after construction; every function here is pure
and may be called freely from multiple threads. Distance data is cached
lazily on the instance (idempotent, so still thread-safe).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError

__all__ = [
    "Graph",
    "VertexSubset",
    "build_graph",
    "distances",
    "is_connected",
    "induced",
    "neighborhood",
    "neighborhood_of_set",
    "complement",
    "diameter",
    "are_isomorphic",
    "cycle_graph",
    "path_graph",
    "complete_graph",
]

DEFAULT_ISO_CAP = 10


def _iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A finite simple undirected graph on vertices 0..n-1.

    Do not mutate instances; construct new ones via `build_graph` or the
    derived operations (`induced`, `complement`, products, ...).
    """

    __slots__ = (
        "n",
        "edges",
        "labels",
        "host_map",
        "_adj",
        "_hash",
        "_dist",
        "_idist",
        "_dist_sets",
        "_connected",
    )

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: tuple[str, ...] | None = None,
        host_map: tuple[int, ...] | None = None,
    ):
        if n < 0:
            raise PreconditionError("vertex count must be nonnegative")
        adj = [0] * n
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                continue
            seen.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise PreconditionError("labels must cover every vertex")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self.labels = labels
        self.host_map = host_map
        self._adj = tuple(adj)
        self._hash = hash((n, self.edges, labels))
        self._dist = None
        self._idist = None
        self._dist_sets = None
        self._connected = None

    # -- basic accessors --------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency_bits(self, v: int) -> int:
        return self._adj[v]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_iter_bits(self._adj[v]))

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(a.bit_count() for a in self._adj))

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={len(self.edges)})"

    # -- cached metric data ------------------------------------------------

    def _bfs_mask(self, source: int, inside: int) -> list[int]:
        """Per-level reachability bitsets of a BFS from `source`,
        restricted to the vertex set `inside`."""
        seen = 1 << source
        levels = [seen]
        frontier = seen
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= self._adj[v]
            nxt &= inside & ~seen
            if not nxt:
                break
            levels.append(nxt)
            seen |= nxt
            frontier = nxt
        return levels

    def _int_distances(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs hop counts as nested tuples, -1 for unreachable."""
        if self._idist is None:
            full = self.full_mask()
            rows = []
            for s in range(self.n):
                row = [-1] * self.n
                for d, level in enumerate(self._bfs_mask(s, full)):
                    for v in _iter_bits(level):
                        row[v] = d
                rows.append(tuple(row))
            self._idist = tuple(rows)
        return self._idist

    def _distance_sets(self) -> tuple[tuple[int, ...], ...]:
        """dist_sets[v][d] = bitset of vertices at distance exactly d from v."""
        if self._dist_sets is None:
            full = self.full_mask()
            self._dist_sets = tuple(
                tuple(self._bfs_mask(s, full)) for s in range(self.n)
            )
        return self._dist_sets


@dataclass(frozen=True)
class VertexSubset:
    """A set of vertex ids of a fixed host graph.

    Used for induced-subgraph supports, modules, deletion sets, and
    certificate witnesses. Iteration is in ascending id order.
    """

    host: Graph
    members: frozenset[int]

    def __post_init__(self):
        for v in self.members:
            if not (0 <= v < self.host.n):
                raise PreconditionError(f"vertex {v} not in host (n={self.host.n})")

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def bits(self) -> int:
        mask = 0
        for v in self.members:
            mask |= 1 << v
        return mask

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


def as_subset(g: Graph, s: VertexSubset | Iterable[int]) -> VertexSubset:
    """Normalize an id iterable (or pass through a VertexSubset) for host g."""
    if isinstance(s, VertexSubset):
        if s.host is not g and s.host != g:
            raise PreconditionError("subset belongs to a different host graph")
        return s
    return VertexSubset(g, frozenset(s))


# -- constructors ----------------------------------------------------------


def build_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Iterable[str] | None = None,
) -> Graph:
    """Build a graph on vertices 0..n-1 with the given edges.

    Duplicate edges are collapsed; self-loops and out-of-range ids are
    rejected.
    """
    return Graph(n, edges, tuple(labels) if labels is not None else None)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# -- metric primitives -----------------------------------------------------


def distances(g: Graph) -> np.ndarray:
    """All-pairs shortest hop counts by BFS; np.inf across components.

    The returned array is cached on the graph and marked read-only.
    """
    if g._dist is None:
        mat = np.full((g.n, g.n), np.inf)
        for u, row in enumerate(g._int_distances()):
            for v, d in enumerate(row):
                if d >= 0:
                    mat[u, v] = d
        mat.setflags(write=False)
        g._dist = mat
    return g._dist


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (true for n <= 1)."""
    if g._connected is None:
        if g.n <= 1:
            g._connected = True
        else:
            seen = 0
            for level in g._bfs_mask(0, g.full_mask()):
                seen |= level
            g._connected = seen == g.full_mask()
    return g._connected


def induced(g: Graph, s: VertexSubset | Iterable[int]) -> Graph:
    """Induced subgraph on `s`, relabeled to dense ids.

    The relabel map is retained on the result: `result.host_map[i]` is
    the id in `g` of the result's vertex i, so subset answers can be
    re-expressed in host coordinates.
    """
    sub = as_subset(g, s)
    order = sub.sorted()
    index = {v: i for i, v in enumerate(order)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in sub.members and v in sub.members
    ]
    labels = tuple(g.label_of(v) for v in order) if g.labels is not None else None
    return Graph(len(order), edges, labels=labels, host_map=order)


def neighborhood(g: Graph, v: int) -> VertexSubset:
    """Open neighborhood of a single vertex."""
    if not (0 <= v < g.n):
        raise PreconditionError(f"vertex {v} not in graph (n={g.n})")
    return VertexSubset(g, frozenset(g.neighbors(v)))


def neighborhood_of_set(g: Graph, a: VertexSubset | Iterable[int]) -> VertexSubset:
    """Union of member neighborhoods minus the set itself."""
    sub = as_subset(g, a)
    mask = 0
    for v in sub.members:
        mask |= g.adjacency_bits(v)
    mask &= ~sub.bits()
    return VertexSubset(g, frozenset(_iter_bits(mask)))


def complement(g: Graph) -> Graph:
    """Edge iff non-edge in g; labels carried over."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.adjacent(u, v)
    ]
    return Graph(g.n, edges, labels=g.labels)


def diameter(g: Graph) -> int | float:
    """Maximum finite distance; inf if disconnected; 0 for n <= 1."""
    if g.n <= 1:
        return 0
    if not is_connected(g):
        return float("inf")
    return max(max(row) for row in g._int_distances())


# -- isomorphism -----------------------------------------------------------


def _refine_colors(g: Graph, rounds: int = 3) -> tuple[int, ...]:
    """Iterated neighbor-color refinement; stable vertex invariants used
    to prune the isomorphism search (partition-guided matching)."""
    colors: list = [g.degree(v) for v in range(g.n)]
    for _ in range(rounds):
        signature = [
            (colors[v], tuple(sorted(colors[w] for w in g.neighbors(v))))
            for v in range(g.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signature)))}
        new = [palette[sig] for sig in signature]
        if new == colors:
            break
        colors = new
    return tuple(colors)


def are_isomorphic(g: Graph, h: Graph, max_n: int | None = None) -> bool:
    """Exact isomorphism test by backtracking over color-consistent maps.

    Exhaustive (never a false answer), with degree and refinement-color
    pruning. The size cap guards against accidental huge inputs; raise it
    explicitly for larger instances.
    """
    cap = DEFAULT_ISO_CAP if max_n is None else max_n
    if max(g.n, h.n) > cap:
        raise PreconditionError(
            f"isomorphism cap exceeded ({max(g.n, h.n)} > {cap}); pass max_n"
        )
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    gc = _refine_colors(g)
    hc = _refine_colors(h)
    if sorted(gc) != sorted(hc):
        return False

    n = g.n
    # Map g-vertices in an order that keeps the mapped set connected-ish:
    # most-constrained (rarest color, highest degree) first.
    color_count = {c: gc.count(c) for c in set(gc)}
    order = sorted(range(n), key=lambda v: (color_count[gc[v]], -g.degree(v), v))
    h_by_color: dict[int, list[int]] = {}
    for w in range(n):
        h_by_color.setdefault(hc[w], []).append(w)

    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in h_by_color.get(gc[v], ()):
            if used[w] or g.degree(v) != h.degree(w):
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g.adjacent(u, v) != h.adjacent(mapping[u], w):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return extend(0)
