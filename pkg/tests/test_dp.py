from itertools import combinations

import pytest

from modlex import (
    GraphFamily,
    PreconditionError,
    build_graph,
    cartesian_deletion_rule,
    cartesian_dp_certificate,
    cartesian_product,
    complete_graph,
    constant_size_dp_criterion,
    construct_product_dp_certificate,
    cycle_graph,
    deletion_sets,
    fig1_family,
    fig2_family,
    generalized_lex_product,
    is_dp,
    is_isometric,
    isometry_transfer_check,
    lift_sdp_order,
    load_dataset,
    ndp_set,
    no_long_induced_cycle,
    non_dp_intervals,
    path_graph,
    product_dp_criterion,
    sdp_order,
)
from modlex.isometry import SdpOrder
from modlex.reference import naive_is_isometric

from helpers import random_family


def test_non_dp_intervals():
    report = ndp_set(cycle_graph(5))
    intervals = non_dp_intervals(report)
    assert [(iv.lower, iv.upper) for iv in intervals] == [(3, 5)]
    assert non_dp_intervals(ndp_set(path_graph(5))) == ()


def test_product_dp_criterion_examples():
    c5_report = ndp_set(cycle_graph(5))
    assert product_dp_criterion(c5_report, {0: 2, 1: 1, 2: 1, 3: 1, 4: 1})
    assert not product_dp_criterion(c5_report, {v: 1 for v in range(5)})
    tree_report = ndp_set(path_graph(3))
    assert product_dp_criterion(tree_report, {0: 5, 1: 3, 2: 2})


def test_product_dp_criterion_validates_size_map():
    report = ndp_set(path_graph(3))
    with pytest.raises(PreconditionError):
        product_dp_criterion(report, {0: 1, 1: 1})
    with pytest.raises(PreconditionError):
        product_dp_criterion(report, {0: 1, 1: 0, 2: 1})


def test_constant_size_criterion_examples():
    report = ndp_set(cycle_graph(5))
    assert constant_size_dp_criterion(report, 2)  # 5 <= 3*2 + 1
    assert not constant_size_dp_criterion(report, 1)
    assert constant_size_dp_criterion(ndp_set(path_graph(4)), 1)


def test_constant_size_criterion_matches_general(connected_classes):
    for n in range(2, 6):
        for base in connected_classes[n]:
            report = ndp_set(base)
            for size in range(1, 4):
                assert constant_size_dp_criterion(report, size) == (
                    product_dp_criterion(report, {v: size for v in range(n)})
                )


def test_isometry_transfer_examples():
    prod = generalized_lex_product(fig1_family())
    assert isometry_transfer_check(prod, range(5))  # whole 5-cycle block
    assert isometry_transfer_check(prod, {0, 8})  # endpoints of the base path
    assert not isometry_transfer_check(prod, {0, 1, 2, 3})  # stretched path


def test_isometry_transfer_matches_direct(rng):
    for _ in range(500):
        fam = random_family(rng, max_base=5, max_component=3)
        prod = generalized_lex_product(fam)
        members = [v for v in range(prod.graph.n) if rng.random() < 0.5]
        assert isometry_transfer_check(prod, members) == is_isometric(
            prod.graph, members
        )


def test_construct_certificate_fig1():
    cert = construct_product_dp_certificate(fig1_family())
    assert sorted(cert.witnesses) == list(range(1, 11))
    cert.verify()


def test_construct_certificate_fig2():
    cert = construct_product_dp_certificate(fig2_family())
    assert sorted(cert.witnesses) == list(range(1, 7))
    host = cert.host
    for k, w in cert.witnesses.items():
        assert naive_is_isometric(host, w.members)


def test_construct_certificate_trivial_components(connected_classes):
    for base in connected_classes[4]:
        if not is_dp(base)[0]:
            continue
        fam = GraphFamily.constant(base, complete_graph(1))
        cert = construct_product_dp_certificate(fam)
        base_witnesses = ndp_set(base).witness
        assert {k: w.members for k, w in cert.witnesses.items()} == {
            k: w.members for k, w in base_witnesses.items()
        }


def test_construct_certificate_rejects_non_dp_family():
    fam = GraphFamily.constant(cycle_graph(5), complete_graph(1))
    with pytest.raises(PreconditionError):
        construct_product_dp_certificate(fam)


def test_lift_sdp_order_cases():
    fam = fig1_family()
    base_order = sdp_order(path_graph(3))
    lifted = lift_sdp_order(fam, base_order)
    assert len(lifted.order) == 10
    lifted.verify()

    k2 = complete_graph(2)
    fam2 = GraphFamily.constant(k2, complete_graph(1))
    lifted2 = lift_sdp_order(fam2, sdp_order(k2))
    assert len(lifted2.order) == 2

    fam3 = GraphFamily.constant(k2, complete_graph(2))
    lifted3 = lift_sdp_order(fam3, sdp_order(k2))
    assert len(lifted3.order) == 4
    lifted3.verify()


def test_lift_sdp_order_deep_component():
    # A component of diameter 3 in the *last* deleted position: the naive
    # "finish one module, then move on" order would strand it alone.
    fam = GraphFamily(
        base=complete_graph(2),
        components={0: complete_graph(1), 1: path_graph(4)},
    )
    base_order = SdpOrder(host=complete_graph(2), order=(0, 1))
    lifted = lift_sdp_order(fam, base_order)
    lifted.verify()


def test_lift_sdp_order_random(rng):
    for _ in range(30):
        fam = random_family(rng, max_base=5, max_component=3)
        order = sdp_order(fam.base)
        if order is None:
            continue
        lift_sdp_order(fam, order).verify()


def test_lift_sdp_order_rejects_bad_order():
    fam = GraphFamily.constant(cycle_graph(5), complete_graph(1))
    fake = SdpOrder(host=cycle_graph(5), order=(0, 1, 2, 3, 4))
    with pytest.raises(PreconditionError):
        lift_sdp_order(fam, fake)


def test_no_long_induced_cycle():
    assert not no_long_induced_cycle(cycle_graph(5))
    assert not no_long_induced_cycle(cycle_graph(6))
    assert no_long_induced_cycle(cycle_graph(4))
    assert no_long_induced_cycle(path_graph(6))
    assert no_long_induced_cycle(complete_graph(5))
    assert no_long_induced_cycle(load_dataset("fig3-quotient"))
    # a 5-cycle with one chord leaves only a 4-cycle and a triangle
    assert no_long_induced_cycle(
        build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    )


def test_no_long_induced_cycle_brute_force(connected_classes):
    def has_long_chordless_cycle(g):
        from itertools import permutations

        for k in range(5, g.n + 1):
            for combo in combinations(range(g.n), k):
                for perm in permutations(combo[1:]):
                    cyc = (combo[0],) + perm
                    ok = all(
                        g.adjacent(cyc[i], cyc[(i + 1) % k]) for i in range(k)
                    )
                    if not ok:
                        continue
                    chord = any(
                        g.adjacent(cyc[i], cyc[j])
                        for i in range(k)
                        for j in range(i + 2, k)
                        if (i, j) != (0, k - 1)
                    )
                    if not chord:
                        return True
        return False

    for n in range(2, 7):
        for g in connected_classes[n]:
            assert no_long_induced_cycle(g) == (not has_long_chordless_cycle(g))


def test_cartesian_deletion_rule_examples():
    k2 = complete_graph(2)
    assert cartesian_deletion_rule(k2, k2, {0}, {0})
    assert not cartesian_deletion_rule(cycle_graph(5), k2, {0}, {0})
    assert cartesian_deletion_rule(path_graph(3), path_graph(3), {0}, {2})


def test_cartesian_deletion_rule_exhaustive(connected_classes):
    small = [g for n in range(1, 5) for g in connected_classes[n]]
    for g in small:
        for h in small:
            prod = cartesian_product(g, h)
            index = {p: i for i, p in enumerate(prod.pairs)}
            dg = deletion_sets(g)
            dh = deletion_sets(h)
            in_g = {s.members for s in dg.sets}
            in_h = {s.members for s in dh.sets}
            for ka in range(1, g.n + 1):
                for a in combinations(range(g.n), ka):
                    for kb in range(1, h.n + 1):
                        for b in combinations(range(h.n), kb):
                            removed = {
                                index[(u, x)] for u in a for x in b
                            }
                            left = is_isometric(
                                prod.graph,
                                set(range(prod.graph.n)) - removed,
                            )
                            right = (
                                frozenset(a) in in_g and frozenset(b) in in_h
                            )
                            assert left == right


def test_cartesian_dp_certificate_examples():
    cert = cartesian_dp_certificate(
        sdp_order(path_graph(3)), is_dp(complete_graph(3))[1]
    )
    assert sorted(cert.witnesses) == list(range(1, 10))

    cert2 = cartesian_dp_certificate(
        sdp_order(complete_graph(2)), is_dp(complete_graph(2))[1]
    )
    assert sorted(cert2.witnesses) == list(range(1, 5))

    fig2 = load_dataset("fig2")
    cert3 = cartesian_dp_certificate(sdp_order(path_graph(4)), is_dp(fig2)[1])
    assert sorted(cert3.witnesses) == list(range(1, 25))


def test_sdp_of_cartesian_product_factorizes(connected_classes):
    small = [g for n in range(2, 5) for g in connected_classes[n]]
    for g in small:
        for h in small:
            prod = cartesian_product(g, h)
            both = (sdp_order(g) is not None) and (sdp_order(h) is not None)
            assert (sdp_order(prod.graph) is not None) == both
