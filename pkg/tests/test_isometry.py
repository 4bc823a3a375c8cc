from itertools import combinations, permutations

import pytest

from modlex import (
    Budget,
    BudgetExceededError,
    PreconditionError,
    build_graph,
    complete_graph,
    cycle_graph,
    deletion_sets,
    geodesic,
    is_dp,
    is_isometric,
    load_dataset,
    ndp_set,
    path_graph,
    sdp_order,
)
from modlex.reference import brute_force_is_dp, brute_force_ndp, naive_is_isometric

from helpers import random_connected_graph, subset_distances

INF = float("inf")


def test_is_isometric_examples():
    c5 = cycle_graph(5)
    assert is_isometric(c5, {0, 1, 2})
    assert not is_isometric(c5, {0, 1, 2, 3})  # induced path stretches 0..3
    assert is_isometric(c5, range(5))
    assert is_isometric(c5, ())  # empty by convention


def test_is_isometric_requires_connected_host():
    with pytest.raises(PreconditionError):
        is_isometric(build_graph(4, [(0, 1), (2, 3)]), {0, 1})


def test_is_isometric_matches_naive(rng):
    for _ in range(150):
        g = random_connected_graph(rng, rng.randint(2, 9))
        members = [v for v in range(g.n) if rng.random() < 0.6]
        assert is_isometric(g, members) == naive_is_isometric(g, members)


def test_geodesic():
    c5 = cycle_graph(5)
    assert geodesic(c5, 0, 2) == [0, 1, 2]
    assert geodesic(c5, 3, 3) == [3]
    assert geodesic(path_graph(4), 0, 3) == [0, 1, 2, 3]


def test_geodesic_is_shortest(rng):
    for _ in range(50):
        g = random_connected_graph(rng, rng.randint(2, 9))
        u, v = rng.randrange(g.n), rng.randrange(g.n)
        path = geodesic(g, u, v)
        assert path[0] == u and path[-1] == v
        assert len(path) - 1 == g._int_distances()[u][v]
        for a, b in zip(path, path[1:]):
            assert g.adjacent(a, b)


def test_ndp_examples():
    assert sorted(ndp_set(cycle_graph(5)).ndp) == [4]
    assert ndp_set(path_graph(6)).ndp == frozenset()
    assert ndp_set(load_dataset("fig2")).ndp == frozenset()


def test_ndp_boundary_orders_always_witnessed(connected_classes):
    for n, graphs in connected_classes.items():
        for g in graphs:
            report = ndp_set(g)
            for k in (1, 2, g.n):
                if k >= 1 and k <= g.n:
                    assert k not in report.ndp


def test_ndp_witnesses_verify(rng):
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(2, 9))
        report = ndp_set(g)
        for k, w in report.witness.items():
            assert len(w) == k
            assert naive_is_isometric(g, w.members)
        for k in report.ndp:
            assert not any(
                naive_is_isometric(g, combo)
                for combo in combinations(range(g.n), k)
            )


def test_ndp_oracle_equivalence_exhaustive(connected_classes):
    for n in range(2, 7):
        for g in connected_classes[n]:
            assert ndp_set(g).ndp == frozenset(brute_force_ndp(g))


def test_is_dp_matches_brute_force_n7():
    from modlex.smallgraphs import connected_graphs

    for g in connected_graphs(7):
        dp, cert = is_dp(g)
        assert dp == brute_force_is_dp(g)
        if dp:
            cert.verify()


def test_is_dp_examples():
    dp, cert = is_dp(cycle_graph(5))
    assert not dp and cert is None
    dp, cert = is_dp(complete_graph(6))
    assert dp
    cert.verify()
    dp, cert = is_dp(load_dataset("fig1"))
    assert dp


def test_sdp_examples():
    k4 = sdp_order(complete_graph(4))
    assert k4 is not None and k4.order == (0, 1, 2, 3)
    assert sdp_order(cycle_graph(5)) is None
    p4 = sdp_order(path_graph(4))
    assert p4 is not None
    p4.verify()
    assert p4.order == (0, 1, 2, 3)


def test_sdp_implies_dp(connected_classes):
    for n in range(2, 7):
        for g in connected_classes[n]:
            if sdp_order(g) is not None:
                assert is_dp(g)[0]


def test_sdp_implies_dp_n7():
    from modlex.smallgraphs import connected_graphs

    for g in connected_graphs(7):
        if sdp_order(g) is not None:
            assert is_dp(g)[0]


def test_sdp_order_prefixes_isometric(rng):
    for _ in range(30):
        g = random_connected_graph(rng, rng.randint(2, 8))
        order = sdp_order(g)
        if order is None:
            continue
        remaining = set(range(g.n))
        for v in order.order:
            remaining.discard(v)
            assert naive_is_isometric(g, remaining)


def test_sdp_chain_reading_coincides(connected_classes):
    # Checking stages against the original graph is equivalent to
    # checking each stage against the previous stage.
    for n in range(2, 7):
        for g in connected_classes[n]:
            verts = tuple(range(g.n))
            host = subset_distances(g, verts)
            dist_of = {}
            for r in range(1, g.n + 1):
                for sub in combinations(verts, r):
                    dist_of[sub] = subset_distances(g, sub)
            iso_in_host = {
                sub: all(d == host[pair] for pair, d in table.items())
                for sub, table in dist_of.items()
            }
            for order in permutations(verts):
                remaining = list(verts)
                ok_original = ok_chain = True
                prev = tuple(verts)
                for v in order[:-1]:
                    remaining.remove(v)
                    cur = tuple(remaining)
                    ok_original &= iso_in_host[cur]
                    cur_table = dist_of[cur]
                    prev_table = dist_of[prev]
                    ok_chain &= all(
                        cur_table[pair] == prev_table[pair] for pair in cur_table
                    )
                    prev = cur
                assert ok_original == ok_chain


def test_deletion_sets_examples():
    k3 = deletion_sets(complete_graph(3))
    assert len(k3.sets) == 8  # every subset works on a complete graph

    p3 = deletion_sets(path_graph(3))
    found = {tuple(sorted(s.members)) for s in p3.sets}
    assert found == {(), (0,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)}

    c5 = deletion_sets(cycle_graph(5))
    sizes = set(c5.sizes)
    assert {0, 5} <= sizes and 1 not in sizes


def test_deletion_sets_cross_check(rng):
    for _ in range(25):
        g = random_connected_graph(rng, rng.randint(2, 7))
        result = deletion_sets(g)
        stored = {s.members for s in result.sets}
        for k in range(g.n + 1):
            for combo in combinations(range(g.n), k):
                members = frozenset(combo)
                expected = naive_is_isometric(g, set(range(g.n)) - members)
                assert (members in stored) == expected


def test_deletion_sets_respects_max_size():
    result = deletion_sets(path_graph(4), max_size=1)
    assert all(len(s) <= 1 for s in result.sets)


def test_budget_exhaustion_is_an_error_not_an_answer():
    with pytest.raises(BudgetExceededError):
        ndp_set(cycle_graph(6), budget=Budget(max_states=3))
    with pytest.raises(BudgetExceededError):
        sdp_order(path_graph(6), budget=Budget(max_states=1))
