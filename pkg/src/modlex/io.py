"""Edge-list parsing/emission and DOT export.

Edge-list format: optional header line `n <count>`, then one `u v` pair
per line (0-based ids), `#` comments and blank lines ignored. Without a
header the vertex count is inferred as max id + 1. Duplicate edges are
collapsed with a warning; self-loops and out-of-range ids are errors.
"""

from __future__ import annotations

import warnings

from .errors import EdgeListParseError
from .graph import Graph, build_graph
from .modular import ModularPartition
from .products import ProductGraph

__all__ = ["parse_edge_list", "emit_edge_list", "emit_dot", "DuplicateEdgeWarning"]


class DuplicateEdgeWarning(UserWarning):
    pass


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a Graph."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "n":
            if n is not None:
                raise EdgeListParseError("repeated header", lineno)
            if edges:
                raise EdgeListParseError("header must precede edges", lineno)
            try:
                n = int(fields[1])
            except (IndexError, ValueError):
                raise EdgeListParseError("malformed header", lineno) from None
            if n < 0:
                raise EdgeListParseError("negative vertex count", lineno)
            continue
        if len(fields) != 2:
            raise EdgeListParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer ids in {line!r}", lineno) from None
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}", lineno)
        if u < 0 or v < 0:
            raise EdgeListParseError("negative vertex id", lineno)
        if n is not None and (u >= n or v >= n):
            raise EdgeListParseError(
                f"edge ({u},{v}) out of range for declared n={n}", lineno
            )
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(
                f"duplicate edge ({u},{v}) on line {lineno} collapsed",
                DuplicateEdgeWarning,
                stacklevel=2,
            )
            continue
        seen.add(key)
        edges.append(key)
        max_id = max(max_id, u, v)
    if n is None:
        n = max_id + 1
    return build_graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    """Canonical text form; emit(parse(t)) normalizes t."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


_PALETTE = [
    "lightblue", "lightsalmon", "palegreen", "plum", "khaki", "lightpink",
    "powderblue", "navajowhite", "darkseagreen", "thistle", "wheat", "azure",
]


def emit_dot(
    g: Graph | ProductGraph,
    partition: ModularPartition | None = None,
    name: str = "G",
) -> str:
    """Render a graph (or a product, labeled "(u,x)") as DOT text.

    With a partition, multi-vertex parts become colored clusters, so the
    decomposition structure is visible at a glance.
    """
    graph = g.graph if isinstance(g, ProductGraph) else g
    out = [f"graph {name} {{", "  node [shape=circle];"]
    clustered: set[int] = set()
    if partition is not None:
        for i, part in enumerate(partition.parts):
            if len(part) < 2:
                continue
            color = _PALETTE[i % len(_PALETTE)]
            out.append(f"  subgraph cluster_{i} {{")
            out.append(f'    style=filled; color={color};')
            for v in part:
                out.append(f'    v{v} [label="{graph.label_of(v)}"];')
                clustered.add(v)
            out.append("  }")
    for v in range(graph.n):
        if v not in clustered:
            out.append(f'  v{v} [label="{graph.label_of(v)}"];')
    for u, v in graph.edges:
        out.append(f"  v{u} -- v{v};")
    out.append("}")
    return "\n".join(out) + "\n"
