"""Bundled example graphs used across the demos, CLI, and tests.

Four datasets ship with the package:

- ``fig1``: the 2-path with a 5-cycle, a triangle, and an edge substituted
  for its three vertices (10 vertices, 30 edges).
- ``fig2``: the 5-cycle with one vertex doubled into an adjacent pair
  (6 vertices). The 5-cycle itself misses an order-4 isometric subgraph;
  this one-vertex substitution repairs that.
- ``fig3``: a 44-member friendship network. Its maximal modular
  partition has 6 non-trivial parts and 15 singletons.
- ``fig3-quotient``: the 21-vertex minimal quotient of ``fig3``.

The two network datasets are committed as edge-list data files and
checked against pinned SHA-256 digests on load; vertex labels carry the
1-based numbering of the source drawings.
"""

from __future__ import annotations

import hashlib
from importlib import resources

from .errors import PreconditionError
from .graph import Graph, build_graph, complete_graph, cycle_graph, path_graph
from .io import parse_edge_list
from .products import GraphFamily, generalized_lex_product

__all__ = ["dataset_names", "load_dataset", "fig1_family", "fig2_family"]

_CHECKSUMS = {
    "fig3": "e27c8aa508c67a312d2c050f0b46946680b3b1132672eedbaf754dcfbce0903a",
    "fig3-quotient": "5cfb45e943d5e4213dab7bf1cdf6f40840b9dd745bf4e92cdce023514eb46659",
}

FIG3_NONTRIVIAL_PARTS = (
    frozenset({0, 2, 3, 4, 5, 6}),
    frozenset({7, 29}),
    frozenset({9, 10, 11, 12, 13, 14, 15}),
    frozenset({16, 17, 19}),
    frozenset({24, 32, 33, 35, 36}),
    frozenset({37, 39, 40, 41, 42, 43}),
)


def dataset_names() -> tuple[str, ...]:
    return ("fig1", "fig2", "fig3", "fig3-quotient")


def fig1_family() -> GraphFamily:
    """2-path base with a 5-cycle, a triangle, and an edge substituted."""
    return GraphFamily(
        base=path_graph(3),
        components={0: cycle_graph(5), 1: complete_graph(3), 2: complete_graph(2)},
    )


def fig2_family() -> GraphFamily:
    """5-cycle base with vertex 0 doubled into an adjacent pair."""
    return GraphFamily(
        base=cycle_graph(5),
        components={0: complete_graph(2), **{v: complete_graph(1) for v in range(1, 5)}},
    )


def _load_data_file(name: str) -> Graph:
    data = resources.files("modlex.data").joinpath(f"{name}.edges").read_bytes()
    digest = hashlib.sha256(data).hexdigest()
    if digest != _CHECKSUMS[name]:
        raise PreconditionError(
            f"bundled dataset {name} is corrupted (sha256 {digest})"
        )
    g = parse_edge_list(data.decode("ascii"))
    return build_graph(g.n, g.edges, labels=[str(v + 1) for v in range(g.n)])


def load_dataset(name: str) -> Graph:
    """Load a bundled dataset by name."""
    if name == "fig1":
        return generalized_lex_product(fig1_family()).graph
    if name == "fig2":
        return generalized_lex_product(fig2_family()).graph
    if name in ("fig3", "fig3-quotient"):
        return _load_data_file(name)
    raise PreconditionError(
        f"unknown dataset {name!r}; available: {', '.join(dataset_names())}"
    )
