"""Isometric subgraphs, geodesics, and the dp / sdp deciders.

An induced subgraph is isometric when it preserves every pairwise host
distance. The deciders here are certificate-producing searches: a "yes"
always comes with a machine-checkable witness, and running out of budget
raises BudgetExceededError instead of returning a guess.

The workhorse predicate uses a geodesic-neighbor characterization: a set
S is isometric in a connected host iff for every ordered pair u,v in S
with d(u,v) = d >= 2 some member of S is adjacent to u and at distance
d-1 from v. That member is the second vertex of a u-v geodesic living
inside S; inducting down the distance scale rebuilds the whole geodesic.
The test is monotone in S, so extending a known-isometric set needs only
the pairs that involve the new vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from collections.abc import Iterable

from .budget import Budget, ensure_budget
from .errors import CertificateError, PreconditionError
from .graph import Graph, VertexSubset, as_subset, _iter_bits, is_connected

__all__ = [
    "is_isometric",
    "geodesic",
    "NdpReport",
    "ndp_set",
    "DpCertificate",
    "is_dp",
    "SdpOrder",
    "sdp_order",
    "DeletionSets",
    "deletion_sets",
]


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise PreconditionError("operation requires a connected host graph")


def _pair_ok(g: Graph, members: int, u: int, v: int) -> bool:
    d = g._int_distances()[u][v]
    if d <= 1:
        return True
    return bool(g.adjacency_bits(u) & members & g._distance_sets()[v][d - 1])


def _iso_bits(g: Graph, members: int) -> bool:
    verts = list(_iter_bits(members))
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if not _pair_ok(g, members, u, v) or not _pair_ok(g, members, v, u):
                return False
    return True


def _extension_ok(g: Graph, members: int, w: int) -> bool:
    """Given `members` already isometric, is members|{w} isometric?"""
    new = members | (1 << w)
    for v in _iter_bits(members):
        if not _pair_ok(g, new, w, v) or not _pair_ok(g, new, v, w):
            return False
    return True


def is_isometric(g: Graph, s: VertexSubset | Iterable[int]) -> bool:
    """True iff the subgraph induced by s preserves all host distances.

    The empty set counts as isometric by convention (it supports whole-graph
    deletion sets). Host must be connected.
    """
    _require_connected(g)
    sub = as_subset(g, s)
    if not sub.members:
        return True
    return _iso_bits(g, sub.bits())


def geodesic(g: Graph, u: int, v: int) -> list[int]:
    """One shortest u-v path, parents tie-broken to the lowest vertex id."""
    _require_connected(g)
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise PreconditionError("geodesic endpoints out of range")
    dist = g._int_distances()[u]
    path = [v]
    cur = v
    while cur != u:
        d = dist[cur]
        cur = min(w for w in g.neighbors(cur) if dist[w] == d - 1)
        path.append(cur)
    path.reverse()
    return path


# -- ndp sets and dp certificates -------------------------------------------


@dataclass(frozen=True)
class NdpReport:
    """Exact ndp set of a graph with one isometric witness per other order.

    `ndp` holds the orders k for which no isometric subgraph of order k
    exists; `witness[k]` is a verified isometric subset for every k not
    in ndp. Orders 1, 2 and n are always witnessed on a connected host.
    """

    host: Graph
    ndp: frozenset[int]
    witness: dict[int, VertexSubset]

    @property
    def is_dp(self) -> bool:
        return not self.ndp


@dataclass(frozen=True)
class DpCertificate:
    """An isometric witness of every order 1..n: proof that host is dp."""

    host: Graph
    witnesses: dict[int, VertexSubset]

    def verify(self) -> None:
        """Re-check sizes and isometry of every witness; raise on failure."""
        n = self.host.n
        if sorted(self.witnesses) != list(range(1, n + 1)):
            raise CertificateError("certificate must cover orders 1..n")
        for k, sub in self.witnesses.items():
            if len(sub) != k:
                raise CertificateError(f"witness for order {k} has {len(sub)} vertices")
            if not is_isometric(self.host, sub):
                raise CertificateError(f"witness for order {k} is not isometric")


def _witness_chain_search(
    g: Graph, found: dict[int, int], budget: Budget, max_states: int
) -> None:
    """Depth-first extension of isometric sets, recording the first set
    reached of each size. Incomplete on purpose (not every isometric set
    is reachable by one-vertex isometric extensions); the caller falls
    back to exhaustive enumeration for the missing orders."""
    n = g.n
    visited: set[int] = set()
    states = 0

    def dfs(members: int, size: int) -> bool:
        nonlocal states
        if len(found) == n:
            return True
        states += 1
        if states > max_states:
            return True  # fast path gives up; fallback takes over
        budget.spend()
        for w in range(n):
            bit = 1 << w
            if members & bit:
                continue
            new = members | bit
            if new in visited:
                continue
            visited.add(new)
            if _extension_ok(g, members, w):
                found.setdefault(size + 1, new)
                if dfs(new, size + 1):
                    return True
        return False

    for v in range(n):
        found.setdefault(1, 1 << v)
        if dfs(1 << v, 1):
            return


def ndp_set(
    g: Graph,
    budget: Budget | None = None,
    max_enum_size: int | None = None,
) -> NdpReport:
    """Exact set of orders admitting no isometric subgraph, with witnesses.

    Strategy: a depth-first chain search finds witnesses cheaply for most
    orders; any order it misses is settled by exhaustive enumeration of
    that order's subsets (capped by `max_enum_size` / the budget, in which
    case BudgetExceededError signals an indeterminate result).
    """
    _require_connected(g)
    budget = ensure_budget(budget)
    n = g.n
    found: dict[int, int] = {n: g.full_mask()} if n else {}
    if n:
        # Chain search effort scales with the fallback cost it can save.
        _witness_chain_search(g, found, budget, max_states=max(4096, 64 * n * n))
    ndp: set[int] = set()
    for k in range(1, n + 1):
        if k in found:
            continue
        if max_enum_size is not None and k > max_enum_size:
            from .errors import BudgetExceededError

            raise BudgetExceededError(
                f"order {k} unresolved and exceeds enumeration cap {max_enum_size}"
            )
        hit = None
        for combo in combinations(range(n), k):
            budget.spend()
            members = 0
            for v in combo:
                members |= 1 << v
            if _iso_bits(g, members):
                hit = members
                break
        if hit is None:
            ndp.add(k)
        else:
            found[k] = hit
    witness = {
        k: VertexSubset(g, frozenset(_iter_bits(members)))
        for k, members in sorted(found.items())
    }
    return NdpReport(host=g, ndp=frozenset(ndp), witness=witness)


def is_dp(
    g: Graph,
    budget: Budget | None = None,
    max_enum_size: int | None = None,
) -> tuple[bool, DpCertificate | None]:
    """Decide the distance-preserving property; certificate on success."""
    report = ndp_set(g, budget=budget, max_enum_size=max_enum_size)
    if report.ndp:
        return False, None
    cert = DpCertificate(host=g, witnesses=dict(report.witness))
    cert.verify()
    return True, cert


# -- sequential deletion orders ---------------------------------------------


@dataclass(frozen=True)
class SdpOrder:
    """A vertex deletion order whose every prefix deletion is isometric."""

    host: Graph
    order: tuple[int, ...]

    def verify(self) -> None:
        if sorted(self.order) != list(range(self.host.n)):
            raise CertificateError("order must enumerate every vertex exactly once")
        remaining = self.host.full_mask()
        for v in self.order:
            remaining &= ~(1 << v)
            if remaining and not _iso_bits(self.host, remaining):
                raise CertificateError(
                    f"deleting up to {v} leaves a non-isometric remainder"
                )


def sdp_order(g: Graph, budget: Budget | None = None) -> SdpOrder | None:
    """Find a sequential deletion order, or None when none exists.

    At every step a candidate is any vertex whose removal leaves a set
    still isometric in the *original* graph (equivalent, by transitivity
    of the isometric relation, to checking the current stage). Lowest id
    first; dead remaining-sets are memoized.
    """
    _require_connected(g)
    budget = ensure_budget(budget)
    n = g.n
    failed: set[int] = set()
    order: list[int] = []

    def search(remaining: int) -> bool:
        if remaining == 0:
            return True
        if remaining in failed:
            return False
        budget.spend()
        for v in _iter_bits(remaining):
            rest = remaining & ~(1 << v)
            if rest == 0 or _iso_bits(g, rest):
                order.append(v)
                if search(rest):
                    return True
                order.pop()
        failed.add(remaining)
        return False

    if not search(g.full_mask()):
        return None
    result = SdpOrder(host=g, order=tuple(order))
    result.verify()
    return result


# -- deletion sets (isometric complements) ----------------------------------


@dataclass(frozen=True)
class DeletionSets:
    """All vertex sets A (up to a size cap) whose removal is isometric.

    `sizes` is the sorted multiset of |A| over the stored sets; with the
    full cap it is the complete deletion-size spectrum of the host.
    """

    host: Graph
    max_size: int
    sets: tuple[VertexSubset, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.sets)

    def __contains__(self, a) -> bool:
        target = frozenset(a)
        return any(target == s.members for s in self.sets)


def deletion_sets(
    g: Graph, max_size: int | None = None, budget: Budget | None = None
) -> DeletionSets:
    """Enumerate every A with |A| <= max_size and g-A isometric in g.

    A = V(G) qualifies vacuously (empty remainder). Exhaustive, so meant
    for hosts of at most ~15 vertices.
    """
    _require_connected(g)
    budget = ensure_budget(budget)
    cap = g.n if max_size is None else min(max_size, g.n)
    full = g.full_mask()
    hits: list[VertexSubset] = []
    for k in range(cap + 1):
        for combo in combinations(range(g.n), k):
            budget.spend()
            members = 0
            for v in combo:
                members |= 1 << v
            rest = full & ~members
            if rest == 0 or _iso_bits(g, rest):
                hits.append(VertexSubset(g, frozenset(combo)))
    return DeletionSets(host=g, max_size=cap, sets=tuple(hits))
