"""Generalised lexicographic products, Cartesian products, and projections.

The generalised lexicographic product replaces each vertex v of a base
graph with its own component graph H_v, joining two components completely
exactly when their base vertices are adjacent. Quotienting by the image
partition recovers the base, which is what makes the product the inverse
of modular decomposition.

Product vertex ids are assigned in (base id, inner id) lexicographic
order; everything downstream (witnesses, golden files) relies on that.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable, Mapping

from .errors import PreconditionError
from .graph import Graph, VertexSubset, as_subset, is_connected

__all__ = [
    "GraphFamily",
    "ProductGraph",
    "generalized_lex_product",
    "lex_product",
    "cartesian_product",
    "project_pi",
    "lex_distance",
]


@dataclass(frozen=True)
class GraphFamily:
    """A base graph plus one nonempty component graph per base vertex."""

    base: Graph
    components: dict[int, Graph]

    def __post_init__(self):
        if set(self.components) != set(range(self.base.n)):
            raise PreconditionError("family must assign exactly one graph per base vertex")
        for v, h in self.components.items():
            if h.n == 0:
                raise PreconditionError(f"component for base vertex {v} is empty")

    @classmethod
    def constant(cls, base: Graph, h: Graph) -> GraphFamily:
        return cls(base=base, components={v: h for v in range(base.n)})

    def size_map(self) -> dict[int, int]:
        return {v: h.n for v, h in self.components.items()}

    def total_size(self) -> int:
        return sum(h.n for h in self.components.values())


@dataclass(frozen=True)
class ProductGraph:
    """A product graph together with its id <-> (factor, inner) bijection.

    kind is "lexicographic" (built from a GraphFamily) or "cartesian"
    (built from two factors, `right` holding the second).
    """

    graph: Graph
    kind: str
    base: Graph
    pairs: tuple[tuple[int, int], ...]
    family: GraphFamily | None = None
    right: Graph | None = None

    def id_of(self, u: int, x: int) -> int:
        try:
            return self.pairs.index((u, x))
        except ValueError:
            raise PreconditionError(f"({u},{x}) is not a product vertex") from None

    def pair_of(self, i: int) -> tuple[int, int]:
        return self.pairs[i]


def generalized_lex_product(
    fam: GraphFamily, allow_disconnected_base: bool = False
) -> ProductGraph:
    """Replace each base vertex with its component graph.

    Edges: (u,x)(v,y) iff uv is a base edge, or u = v and xy is an edge of
    the component at u. The base must be connected (the relaxed flag
    exists only so connectivity transfer itself can be exercised).
    """
    base = fam.base
    if base.n == 0:
        raise PreconditionError("base graph must be nonempty")
    if not allow_disconnected_base and not is_connected(base):
        raise PreconditionError("base graph must be connected")
    pairs: list[tuple[int, int]] = []
    offset: dict[int, int] = {}
    for u in range(base.n):
        offset[u] = len(pairs)
        pairs.extend((u, x) for x in range(fam.components[u].n))
    edges: list[tuple[int, int]] = []
    for u, h in fam.components.items():
        edges.extend((offset[u] + x, offset[u] + y) for x, y in h.edges)
    for u, v in base.edges:
        for x in range(fam.components[u].n):
            for y in range(fam.components[v].n):
                edges.append((offset[u] + x, offset[v] + y))
    labels = tuple(
        f"({base.label_of(u)},{fam.components[u].label_of(x)})" for u, x in pairs
    )
    return ProductGraph(
        graph=Graph(len(pairs), edges, labels=labels),
        kind="lexicographic",
        base=base,
        pairs=tuple(pairs),
        family=fam,
    )


def lex_product(g: Graph, h: Graph) -> ProductGraph:
    """Classic lexicographic product: the constant-family special case."""
    return generalized_lex_product(GraphFamily.constant(g, h))


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    """Vertices V(G) x V(H); moves change one coordinate along that factor."""
    pairs = [(u, x) for u in range(g.n) for x in range(h.n)]
    index = {p: i for i, p in enumerate(pairs)}
    edges = []
    for u, x in pairs:
        for v in g.neighbors(u):
            if v > u:
                edges.append((index[(u, x)], index[(v, x)]))
        for y in h.neighbors(x):
            if y > x:
                edges.append((index[(u, x)], index[(u, y)]))
    labels = tuple(f"({g.label_of(u)},{h.label_of(x)})" for u, x in pairs)
    return ProductGraph(
        graph=Graph(len(pairs), edges, labels=labels),
        kind="cartesian",
        base=g,
        pairs=tuple(pairs),
        right=h,
    )


def project_pi(p: ProductGraph, m: VertexSubset | Iterable[int]) -> VertexSubset:
    """Base vertices hit by a set of lexicographic-product vertices."""
    if p.kind != "lexicographic":
        raise PreconditionError("projection is defined on lexicographic products")
    sub = as_subset(p.graph, m)
    return VertexSubset(p.base, frozenset(p.pairs[i][0] for i in sub.members))


def lex_distance(
    fam: GraphFamily, a: tuple[int, int], b: tuple[int, int]
) -> int:
    """Closed-form product distance, no BFS.

    Distinct base vertices inherit the base distance; inside one
    component the distance is 1 across an edge and otherwise 2, hopping
    through any neighboring component.
    """
    base = fam.base
    if base.n < 2:
        raise PreconditionError("closed form needs a base with at least two vertices")
    if not is_connected(base):
        raise PreconditionError("closed form needs a connected base")
    (u, x), (v, y) = a, b
    for (w, z) in (a, b):
        if not (0 <= w < base.n) or not (0 <= z < fam.components[w].n):
            raise PreconditionError(f"({w},{z}) is not a product vertex")
    if u != v:
        return base._int_distances()[u][v]
    if x == y:
        return 0
    return 1 if fam.components[u].adjacent(x, y) else 2
