"""Distance-preservation criteria and certificate constructors for products.

`product_dp_criterion` decides whether a generalised lexicographic
product is dp straight from the base graph's ndp report and the component
sizes: every missing base order k must be covered by an isometric base
subgraph L with |L| < k and total component capacity at least k.
`construct_product_dp_certificate` turns that criterion into explicit
witnesses for every product order.

For Cartesian products, `cartesian_deletion_rule` checks the rectangular
deletion rule, and `cartesian_dp_certificate` assembles a dp certificate
for G box H from a sequential deletion order of G and a dp certificate
of H.

Every constructor re-verifies its own output and raises CertificateError
rather than returning a bad witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from collections.abc import Iterable, Mapping

from .budget import Budget, ensure_budget
from .errors import CertificateError, PreconditionError
from .graph import (
    Graph,
    VertexSubset,
    as_subset,
    diameter,
    induced,
    is_connected,
    _iter_bits,
)
from .isometry import (
    DpCertificate,
    NdpReport,
    SdpOrder,
    _iso_bits,
    is_isometric,
    ndp_set,
)
from .products import GraphFamily, ProductGraph, cartesian_product, generalized_lex_product, project_pi

__all__ = [
    "NonDpInterval",
    "non_dp_intervals",
    "product_dp_criterion",
    "constant_size_dp_criterion",
    "isometry_transfer_check",
    "construct_product_dp_certificate",
    "lift_sdp_order",
    "no_long_induced_cycle",
    "cartesian_deletion_rule",
    "cartesian_dp_certificate",
]


@dataclass(frozen=True)
class NonDpInterval:
    """Achievable orders a < b whose whole interior admits no witness."""

    lower: int
    upper: int


def non_dp_intervals(report: NdpReport) -> tuple[NonDpInterval, ...]:
    """Maximal runs of missing orders, bounded by achievable neighbors."""
    achievable = sorted(k for k in range(1, report.host.n + 1) if k not in report.ndp)
    out = []
    for a, b in zip(achievable, achievable[1:]):
        if b > a + 1:
            out.append(NonDpInterval(lower=a, upper=b))
    return tuple(out)


def _validated_sizes(base: Graph, sizes: Mapping[int, int]) -> dict[int, int]:
    if set(sizes) != set(range(base.n)):
        raise PreconditionError("size map must cover exactly the base vertices")
    clean = {v: int(s) for v, s in sizes.items()}
    if any(s < 1 for s in clean.values()):
        raise PreconditionError("component sizes must be at least 1")
    return clean


def _isometric_with_capacity(
    base: Graph, size_of: dict[int, int], ell: int, cap_needed: int
) -> int | None:
    """Lexicographically least isometric ell-subset of the base with total
    component capacity >= cap_needed, as a bitmask; None when absent."""
    n = base.n
    sizes = [size_of[v] for v in range(n)]
    # best[i][t]: largest capacity any t ids from i.. can contribute.
    best = [[0] * (ell + 1) for _ in range(n + 1)]
    for i in range(n, -1, -1):
        tail = sorted(sizes[i:], reverse=True)
        for t in range(1, ell + 1):
            best[i][t] = sum(tail[:t])

    def dfs(start: int, bits: int, count: int, cap: int) -> int | None:
        if count == ell:
            return bits if cap >= cap_needed and _iso_bits(base, bits) else None
        need = ell - count
        for v in range(start, n - need + 1):
            if cap + sizes[v] + best[v + 1][need - 1] < cap_needed:
                continue
            hit = dfs(v + 1, bits | (1 << v), count + 1, cap + sizes[v])
            if hit is not None:
                return hit
        return None

    return dfs(0, 0, 0, 0)


def product_dp_criterion(base_report: NdpReport, sizes: Mapping[int, int]) -> bool:
    """Necessary and sufficient test for a substituted product to be dp.

    True iff for every order k missing from the base, some isometric base
    subgraph L has fewer than k vertices but component capacity at least
    k. Stock witnesses from the report are tried before searching.
    """
    base = base_report.host
    if base.n < 2:
        raise PreconditionError("criterion needs a base with at least two vertices")
    size_of = _validated_sizes(base, sizes)
    for k in sorted(base_report.ndp):
        if any(
            j < k and sum(size_of[u] for u in w.members) >= k
            for j, w in base_report.witness.items()
        ):
            continue
        if not any(
            _isometric_with_capacity(base, size_of, ell, k) is not None
            for ell in range(k - 1, 0, -1)
        ):
            return False
    return True


def constant_size_dp_criterion(base_report: NdpReport, n: int) -> bool:
    """Constant-component special case: every missing-order run bounded by
    achievable a < b must satisfy b <= a*n + 1."""
    if base_report.host.n < 2:
        raise PreconditionError("criterion needs a base with at least two vertices")
    if n < 1:
        raise PreconditionError("component size must be at least 1")
    return all(iv.upper <= iv.lower * n + 1 for iv in non_dp_intervals(base_report))


def isometry_transfer_check(p: ProductGraph, m: VertexSubset | Iterable[int]) -> bool:
    """Isometry of a product subset decided through its base projection.

    A subset touching at least two base vertices is isometric exactly when
    its projection is; a subset inside one component is isometric exactly
    when it induces diameter at most 2.
    """
    if p.kind != "lexicographic":
        raise PreconditionError("transfer check applies to lexicographic products")
    if p.base.n < 2 or not is_connected(p.base):
        raise PreconditionError("transfer check needs a connected base with >= 2 vertices")
    sub = as_subset(p.graph, m)
    if not sub.members:
        return True
    pi = project_pi(p, sub)
    if len(pi) == 1:
        return diameter(induced(p.graph, sub)) <= 2
    return is_isometric(p.base, pi)


# -- certificate construction for lexicographic products ---------------------


def _diam2_inner_subset(h: Graph, m: int) -> tuple[int, ...] | None:
    """A size-m vertex set of h inducing diameter <= 2, or None.

    Exhaustive in lexicographic order for small components, greedy closed
    neighborhoods beyond that.
    """
    if m > h.n:
        return None
    if m == 1:
        return (0,)
    if h.n <= 14:
        for combo in combinations(range(h.n), m):
            bits = 0
            for x in combo:
                bits |= 1 << x
            ok = True
            for i, x in enumerate(combo):
                for y in combo[i + 1 :]:
                    if not h.adjacent(x, y) and not (
                        h.adjacency_bits(x) & h.adjacency_bits(y) & bits
                    ):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return combo
        return None
    for c in range(h.n):
        if h.degree(c) >= m - 1:
            return tuple(sorted([c] + list(h.neighbors(c))[: m - 1]))
    return None


def construct_product_dp_certificate(
    fam: GraphFamily,
    base_report: NdpReport | None = None,
    product: ProductGraph | None = None,
    budget: Budget | None = None,
) -> DpCertificate:
    """Explicit isometric witnesses of every order for a substituted product.

    For each target order m the smallest usable base subgraph L is chosen
    (by size, then lexicographically); components over L are then filled
    greedily by lowest inner id, at least one vertex per base vertex of L.
    Orders that fit inside a single component use a diameter-<=2 subset
    there instead. Every witness is re-verified on the product.
    """
    base = fam.base
    if base_report is None:
        base_report = ndp_set(base, budget=ensure_budget(budget))
    if base_report.host != base:
        raise PreconditionError("report describes a different base graph")
    size_of = _validated_sizes(base, fam.size_map())
    if not product_dp_criterion(base_report, size_of):
        raise PreconditionError("product is not dp: criterion fails for this family")
    if product is None:
        product = generalized_lex_product(fam)
    offset: dict[int, int] = {}
    pos = 0
    for u in range(base.n):
        offset[u] = pos
        pos += fam.components[u].n
    total = pos

    witnesses: dict[int, VertexSubset] = {}
    for m in range(1, total + 1):
        members = _select_product_witness(fam, base_report, size_of, offset, m)
        witnesses[m] = VertexSubset(product.graph, frozenset(members))
    cert = DpCertificate(host=product.graph, witnesses=witnesses)
    cert.verify()
    return cert


def _select_product_witness(
    fam: GraphFamily,
    base_report: NdpReport,
    size_of: dict[int, int],
    offset: dict[int, int],
    m: int,
) -> list[int]:
    base = fam.base
    # Single-component attempt first (smallest possible L).
    for v in range(base.n):
        if size_of[v] >= m:
            inner = _diam2_inner_subset(fam.components[v], m)
            if inner is not None:
                return [offset[v] + x for x in inner]
    for ell in range(2, min(m, base.n) + 1):
        chosen: list[int] | None = None
        stock = base_report.witness.get(ell)
        if stock is not None and sum(size_of[u] for u in stock.members) >= m:
            chosen = sorted(stock.members)
        else:
            bits = _isometric_with_capacity(base, size_of, ell, m)
            if bits is not None:
                chosen = list(_iter_bits(bits))
        if chosen is None:
            continue
        members = [offset[u] for u in chosen]  # one lowest inner vertex each
        slots = m - ell
        for u in chosen:
            if slots == 0:
                break
            extra = min(slots, size_of[u] - 1)
            members.extend(offset[u] + x for x in range(1, extra + 1))
            slots -= extra
        return members
    raise CertificateError(f"no witness selectable for order {m}")


def lift_sdp_order(fam: GraphFamily, base_order: SdpOrder) -> SdpOrder:
    """Lift a sequential deletion order of the base to the whole product.

    Modules are emptied in base-order; the last two surviving modules are
    both shrunk to single vertices before either is removed entirely, so
    no intermediate stage is ever a single component of diameter above 2.
    The lifted order is re-verified before being returned.
    """
    base = fam.base
    if base.n < 2:
        raise PreconditionError("lifting needs a base with at least two vertices")
    if base_order.host != base:
        raise PreconditionError("order belongs to a different base graph")
    try:
        base_order.verify()
    except CertificateError as exc:
        raise PreconditionError(f"invalid base deletion order: {exc}") from exc

    product = generalized_lex_product(fam)
    offset: dict[int, int] = {}
    pos = 0
    for u in range(base.n):
        offset[u] = pos
        pos += fam.components[u].n

    seq = base_order.order
    deletions: list[int] = []
    for u in seq[:-2]:
        deletions.extend(offset[u] + x for x in range(fam.components[u].n))
    for u in seq[-2:]:  # shrink both survivors to singletons
        deletions.extend(offset[u] + x for x in range(fam.components[u].n - 1))
    last_of = lambda u: offset[u] + fam.components[u].n - 1
    deletions.append(last_of(seq[-2]))
    deletions.append(last_of(seq[-1]))

    lifted = SdpOrder(host=product.graph, order=tuple(deletions))
    lifted.verify()
    return lifted


# -- induced long cycles ------------------------------------------------------


def no_long_induced_cycle(g: Graph, budget: Budget | None = None) -> bool:
    """True iff g contains no chordless cycle on five or more vertices.

    This is a sufficient condition for the distance-preserving property,
    not a characterization: False says nothing about dp-ness by itself.
    Exhaustive path extension with the cycle's minimum vertex anchored
    first; the budget turns oversized searches into BudgetExceededError.
    """
    budget = ensure_budget(budget)

    def extend(u: int, path: list[int], path_bits: int) -> bool:
        """Chordless paths anchored at minimum vertex u; True on a long cycle."""
        budget.spend()
        last = path[-1]
        for w in g.neighbors(last):
            if w <= u or (path_bits >> w) & 1:
                continue
            if any(g.adjacent(w, p) for p in path[1:-1]):
                continue  # chord into the middle, neither extender nor closer
            if g.adjacent(w, u):
                # Candidate closer: cycle path + w, length len(path) + 1.
                if len(path) + 1 >= 5 and w > path[1]:
                    return True
                continue
            if extend(u, path + [w], path_bits | (1 << w)):
                return True
        return False

    for u in range(g.n):
        for a in g.neighbors(u):
            if a <= u:
                continue
            if extend(u, [u, a], (1 << u) | (1 << a)):
                return False
    return True


# -- Cartesian products --------------------------------------------------------


def cartesian_deletion_rule(
    g: Graph,
    h: Graph,
    a: VertexSubset | Iterable[int],
    b: VertexSubset | Iterable[int],
) -> bool:
    """Whether removing the rectangle A x B from G box H is isometric.

    Evaluates both sides of the rectangle rule independently — the direct
    product-side check and the two factor-side checks — and returns the
    product side. A disagreement would falsify the rule and is treated as
    an internal error.
    """
    sub_a = as_subset(g, a)
    sub_b = as_subset(h, b)
    if not sub_a.members or not sub_b.members:
        raise PreconditionError("both factor subsets must be nonempty")
    if not is_connected(g) or not is_connected(h):
        raise PreconditionError("factors must be connected")
    prod = cartesian_product(g, h)
    index = {pair: i for i, pair in enumerate(prod.pairs)}
    removed = {index[(u, x)] for u in sub_a.members for x in sub_b.members}
    left = is_isometric(prod.graph, set(range(prod.graph.n)) - removed)
    right = is_isometric(g, set(range(g.n)) - sub_a.members) and is_isometric(
        h, set(range(h.n)) - sub_b.members
    )
    if left != right:
        raise CertificateError(
            "rectangle deletion rule violated; isometry engine is inconsistent"
        )
    return left


def cartesian_dp_certificate(
    g_order: SdpOrder, h_cert: DpCertificate
) -> DpCertificate:
    """dp certificate for G box H from a deletion order of G and a dp
    certificate of H.

    The order-k witness keeps the last surviving copies whole: with
    r = |G||H| - k = (s-1)|H| + j, the first s-1 columns of the deletion
    order are dropped entirely, and inside column s the retained vertices
    are a size-(|H|-j) isometric witness of H. Certificates store the
    retained side; every witness is re-verified on the product.
    """
    g = g_order.host
    h = h_cert.host
    g_order.verify()
    h_cert.verify()
    prod = cartesian_product(g, h)
    index = {pair: i for i, pair in enumerate(prod.pairs)}
    total = g.n * h.n

    witnesses: dict[int, VertexSubset] = {}
    for k in range(1, total + 1):
        r = total - k
        s = r // h.n + 1
        j = r % h.n
        kept_cols = g_order.order[s:]
        partial_col = g_order.order[s - 1]
        kept_inner = h_cert.witnesses[h.n - j].members if j else frozenset(range(h.n))
        members = {index[(u, x)] for u in kept_cols for x in range(h.n)}
        members |= {index[(partial_col, x)] for x in kept_inner}
        witnesses[k] = VertexSubset(prod.graph, frozenset(members))
    cert = DpCertificate(host=prod.graph, witnesses=witnesses)
    cert.verify()
    return cert
