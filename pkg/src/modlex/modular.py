"""Modules, modular partitions, quotient graphs, and the minimal quotient.

A module is a vertex set whose members are indistinguishable from the
outside: every other vertex sees all of it or none of it. Modular
partitions compress a graph to its quotient; the inverse operation is the
generalised lexicographic product (see `products`).

The partition algorithm here is deliberately naive-polynomial: closures
of two-vertex seeds assemble the maximal proper modules. Soundness of a
result is always certified with `is_module`, and the test suite checks it
against exhaustive module enumeration on small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections.abc import Iterable

from .errors import PreconditionError
from .graph import Graph, VertexSubset, as_subset, complement, is_connected, _iter_bits

__all__ = [
    "is_module",
    "smallest_module_containing",
    "ModularPartition",
    "maximal_modular_partition",
    "QuotientGraph",
    "quotient",
    "minimal_quotient",
    "has_k2_quotient",
    "is_prime",
]


def _is_module_bits(g: Graph, members: int) -> bool:
    outside = g.full_mask() & ~members
    for v in _iter_bits(outside):
        hit = g.adjacency_bits(v) & members
        if hit != 0 and hit != members:
            return False
    return True


def is_module(g: Graph, s: VertexSubset | Iterable[int]) -> bool:
    """True iff every vertex outside s is adjacent to all of s or none of s."""
    sub = as_subset(g, s)
    if not sub.members:
        raise PreconditionError("the empty set is not a module")
    return _is_module_bits(g, sub.bits())


def _closure_bits(g: Graph, seed: int) -> int:
    """Least fixed point of adding outside distinguishers to `seed`."""
    members = seed
    changed = True
    while changed:
        changed = False
        outside = g.full_mask() & ~members
        for v in _iter_bits(outside):
            hit = g.adjacency_bits(v) & members
            if hit != 0 and hit != members:
                members |= 1 << v
                changed = True
    return members


def smallest_module_containing(
    g: Graph, seed: VertexSubset | Iterable[int]
) -> VertexSubset:
    """The unique smallest module containing `seed`.

    Any vertex adjacent to some but not all current members distinguishes
    them, so every module containing the seed must absorb it; iterating
    to a fixed point is therefore both sound and minimal.
    """
    sub = as_subset(g, seed)
    if not sub.members:
        raise PreconditionError("seed must be nonempty")
    members = _closure_bits(g, sub.bits())
    return VertexSubset(g, frozenset(_iter_bits(members)))


@dataclass(frozen=True)
class ModularPartition:
    """Disjoint modules covering all vertices of the host.

    Parts are kept in increasing order of their least vertex id.
    `k2_case` marks hosts with a disconnected complement, where the
    two-part decomposition is a canonical pick among several maximal ones.
    """

    host: Graph
    parts: tuple[VertexSubset, ...]
    k2_case: bool = False

    def __post_init__(self):
        covered: set[int] = set()
        for part in self.parts:
            if not part.members:
                raise PreconditionError("partition parts must be nonempty")
            if covered & part.members:
                raise PreconditionError("partition parts must be disjoint")
            if not is_module(self.host, part):
                raise PreconditionError(f"part {part.sorted()} is not a module")
            covered |= part.members
        if covered != set(range(self.host.n)):
            raise PreconditionError("partition must cover every vertex")
        ordered = tuple(sorted(self.parts, key=lambda p: min(p.members)))
        object.__setattr__(self, "parts", ordered)

    def part_index_of(self) -> tuple[int, ...]:
        owner = [0] * self.host.n
        for i, part in enumerate(self.parts):
            for v in part.members:
                owner[v] = i
        return tuple(owner)


def modular_partition(g: Graph, parts: Iterable[Iterable[int]]) -> ModularPartition:
    """Validate an explicit partition of g into modules."""
    return ModularPartition(
        host=g, parts=tuple(as_subset(g, p) for p in parts)
    )


def _co_components(g: Graph) -> list[frozenset[int]]:
    comp = complement(g)
    seen: set[int] = set()
    out = []
    for v in range(g.n):
        if v in seen:
            continue
        mask = 0
        for level in comp._bfs_mask(v, comp.full_mask()):
            mask |= level
        members = frozenset(_iter_bits(mask))
        seen |= members
        out.append(members)
    return sorted(out, key=min)


def has_k2_quotient(g: Graph) -> bool:
    """True iff the complement of g is disconnected.

    Exactly then g splits into two modules whose quotient is a single
    edge.
    """
    if g.n < 2:
        return False
    return not is_connected(complement(g))


def maximal_modular_partition(g: Graph) -> ModularPartition:
    """Partition a connected graph into maximal proper modules.

    When the complement is connected this partition is unique: the part
    containing v is the union of all proper closures of pairs {v, u},
    which is itself a proper module because overlapping proper modules
    can only union to the whole graph in the disconnected-complement
    case. In that remaining case (flagged `k2_case`) the canonical pick
    is (first co-component, rest), ordered by least vertex id.
    """
    if g.n < 2:
        raise PreconditionError("partition needs at least two vertices")
    if not is_connected(g):
        raise PreconditionError("partition requires a connected graph")
    if has_k2_quotient(g):
        cos = _co_components(g)
        first = cos[0]
        rest = frozenset(range(g.n)) - first
        return ModularPartition(
            host=g,
            parts=(VertexSubset(g, first), VertexSubset(g, rest)),
            k2_case=True,
        )

    full = g.full_mask()
    assigned = 0
    parts: list[VertexSubset] = []
    for v in range(g.n):
        if assigned >> v & 1:
            continue
        members = 1 << v
        for u in range(g.n):
            if u == v:
                continue
            closed = _closure_bits(g, (1 << v) | (1 << u))
            if closed != full:
                members |= closed
        parts.append(VertexSubset(g, frozenset(_iter_bits(members))))
        assigned |= members
    return ModularPartition(host=g, parts=tuple(parts))


@dataclass(frozen=True)
class QuotientGraph:
    """One vertex per part; parts adjacent iff fully joined in the host."""

    graph: Graph
    partition: ModularPartition
    part_of: tuple[int, ...] = field(default=())

    def verify(self) -> None:
        """Exhaustively re-check the all-or-nothing edge rule."""
        host = self.partition.host
        for i, p in enumerate(self.partition.parts):
            for j, q in enumerate(self.partition.parts):
                if i >= j:
                    continue
                links = {
                    host.adjacent(u, v) for u in p.members for v in q.members
                }
                if len(links) != 1:
                    raise PreconditionError(
                        f"parts {i} and {j} are neither joined nor separated"
                    )
                if links.pop() != self.graph.adjacent(i, j):
                    raise PreconditionError(f"edge rule violated between {i} and {j}")


def quotient(g: Graph, p: ModularPartition | Iterable[Iterable[int]]) -> QuotientGraph:
    """Quotient of g by a modular partition.

    Part order is by least contained vertex id; quotient vertex i carries
    the label of part i's least vertex.
    """
    if not isinstance(p, ModularPartition):
        p = modular_partition(g, p)
    elif p.host is not g and p.host != g:
        raise PreconditionError("partition belongs to a different graph")
    for part in p.parts:
        if not is_module(g, part):
            raise PreconditionError(f"part {part.sorted()} is not a module")
    reps = [min(part.members) for part in p.parts]
    edges = []
    for i in range(len(p.parts)):
        for j in range(i + 1, len(p.parts)):
            # Modules see each other all-or-nothing, so one probe decides.
            if g.adjacent(reps[i], reps[j]):
                edges.append((i, j))
    labels = (
        tuple(g.label_of(r) for r in reps) if g.labels is not None else None
    )
    qg = Graph(len(p.parts), edges, labels=labels)
    return QuotientGraph(graph=qg, partition=p, part_of=p.part_index_of())


def minimal_quotient(g: Graph) -> QuotientGraph:
    """The unique quotient of g containing no non-trivial module.

    A disconnected complement forces the single-edge quotient; otherwise
    the quotient by the maximal modular partition is already prime.
    """
    if g.n < 2:
        raise PreconditionError("minimal quotient needs at least two vertices")
    if not is_connected(g):
        raise PreconditionError("minimal quotient requires a connected graph")
    return quotient(g, maximal_modular_partition(g))


def is_prime(g: Graph) -> bool:
    """True iff g has no non-trivial module.

    Any non-trivial module contains a pair of vertices, and contains the
    closure of that pair; so primality is equivalent to every pair
    closure being the whole vertex set.
    """
    full = g.full_mask()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if _closure_bits(g, (1 << u) | (1 << v)) != full:
                return False
    return True
