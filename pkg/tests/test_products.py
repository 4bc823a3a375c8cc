import math

import pytest

from modlex import (
    GraphFamily,
    PreconditionError,
    are_isomorphic,
    build_graph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    distances,
    generalized_lex_product,
    geodesic,
    is_connected,
    lex_distance,
    lex_product,
    path_graph,
    project_pi,
)

from helpers import random_family, random_graph


def fig1_family():
    return GraphFamily(
        base=path_graph(3),
        components={0: cycle_graph(5), 1: complete_graph(3), 2: complete_graph(2)},
    )


def test_generalized_lex_product_fig1():
    prod = generalized_lex_product(fig1_family())
    assert prod.graph.n == 10
    assert prod.graph.edge_count == 30  # 9 internal + 15 + 6 across
    assert prod.pairs[:5] == ((0, 0), (0, 1), (0, 2), (0, 3), (0, 4))


def test_generalized_lex_product_identity():
    g = cycle_graph(5)
    fam = GraphFamily.constant(g, complete_graph(1))
    prod = generalized_lex_product(fam)
    assert prod.graph.edges == g.edges


def test_generalized_lex_product_fig2():
    fam = GraphFamily(
        base=cycle_graph(5),
        components={0: complete_graph(2), **{v: complete_graph(1) for v in range(1, 5)}},
    )
    prod = generalized_lex_product(fam)
    assert prod.graph.n == 6
    assert prod.graph.edge_count == 8


def test_empty_component_rejected():
    with pytest.raises(PreconditionError):
        GraphFamily(base=path_graph(2), components={0: build_graph(0, []), 1: complete_graph(1)})


def test_lex_product_examples():
    k2 = complete_graph(2)
    assert are_isomorphic(lex_product(k2, k2).graph, complete_graph(4))
    g = cycle_graph(5)
    assert lex_product(g, complete_graph(1)).graph.edges == g.edges
    c5k2 = lex_product(g, k2)
    assert c5k2.graph.n == 10 and c5k2.graph.edge_count == 25


def test_lex_product_equals_constant_family(rng):
    for _ in range(10):
        g = random_graph(rng, rng.randint(2, 5), p=0.6)
        if not is_connected(g):
            continue
        h = random_graph(rng, rng.randint(1, 4), p=0.5)
        a = lex_product(g, h)
        b = generalized_lex_product(GraphFamily.constant(g, h))
        assert a.graph.edges == b.graph.edges and a.pairs == b.pairs


def test_cartesian_product_examples():
    k2 = complete_graph(2)
    assert are_isomorphic(cartesian_product(k2, k2).graph, cycle_graph(4))
    grid = cartesian_product(path_graph(2), path_graph(3))
    assert grid.graph.n == 6 and grid.graph.edge_count == 7


def test_cartesian_distance_additivity(rng):
    for _ in range(20):
        from helpers import random_connected_graph

        g = random_connected_graph(rng, rng.randint(2, 5))
        h = random_connected_graph(rng, rng.randint(2, 5))
        prod = cartesian_product(g, h)
        dg, dh, dp = distances(g), distances(h), distances(prod.graph)
        for i, (u, x) in enumerate(prod.pairs):
            for j, (v, y) in enumerate(prod.pairs):
                assert dp[i, j] == dg[u, v] + dh[x, y]


def test_project_pi():
    prod = generalized_lex_product(fig1_family())
    assert project_pi(prod, {0, 1}).members == {0}
    assert project_pi(prod, {0, 5, 8}).members == {0, 1, 2}
    assert project_pi(prod, ()).members == set()
    with pytest.raises(PreconditionError):
        project_pi(cartesian_product(complete_graph(2), complete_graph(2)), {0})


def test_lex_distance_examples():
    fam = fig1_family()
    assert lex_distance(fam, (0, 0), (0, 2)) == 2  # non-adjacent in the 5-cycle block
    assert lex_distance(fam, (0, 0), (2, 1)) == 2  # base distance dominates
    assert lex_distance(fam, (1, 0), (1, 1)) == 1  # adjacent inside a block
    with pytest.raises(PreconditionError):
        lex_distance(
            GraphFamily(base=complete_graph(1), components={0: complete_graph(2)}),
            (0, 0),
            (0, 1),
        )


def test_lex_distance_matches_bfs(rng):
    for _ in range(100):
        fam = random_family(rng, max_base=6, max_component=4)
        prod = generalized_lex_product(fam)
        d = distances(prod.graph)
        for i, a in enumerate(prod.pairs):
            for j, b in enumerate(prod.pairs):
                assert lex_distance(fam, a, b) == d[i, j]


def _random_simple_path(rng, g):
    v = rng.randrange(g.n)
    path, seen = [v], {v}
    while True:
        options = [w for w in g.neighbors(path[-1]) if w not in seen]
        if not options or (len(path) > 1 and rng.random() < 0.3):
            break
        w = rng.choice(options)
        path.append(w)
        seen.add(w)
    return path


def test_geodesic_lifting(rng):
    # A lifted base path is geodesic in the product iff the base path is
    # geodesic in the base, whatever inner vertices are chosen.
    seen_non_geodesic = 0
    for _ in range(100):
        fam = random_family(rng, max_base=6, max_component=3)
        prod = generalized_lex_product(fam)
        base = fam.base
        path = _random_simple_path(rng, base)
        if len(path) < 2:
            continue
        d_base = distances(base)
        d_prod = distances(prod.graph)
        index = {p: i for i, p in enumerate(prod.pairs)}
        lifted = [
            index[(v, rng.randrange(fam.components[v].n))] for v in path
        ]
        for a, b in zip(lifted, lifted[1:]):
            assert prod.graph.adjacent(a, b)
        base_is_geodesic = len(path) - 1 == d_base[path[0], path[-1]]
        prod_is_geodesic = len(lifted) - 1 == d_prod[lifted[0], lifted[-1]]
        assert base_is_geodesic == prod_is_geodesic
        seen_non_geodesic += not base_is_geodesic
    assert seen_non_geodesic > 0  # the sample exercised both directions


def test_connectivity_transfer(rng):
    for _ in range(40):
        fam = random_family(rng, max_base=5, max_component=3, connected_base=False)
        prod = generalized_lex_product(fam, allow_disconnected_base=True)
        assert is_connected(prod.graph) == is_connected(fam.base)


def test_disconnected_base_rejected_by_default():
    fam = GraphFamily(
        base=build_graph(2, []),
        components={0: complete_graph(1), 1: complete_graph(1)},
    )
    with pytest.raises(PreconditionError):
        generalized_lex_product(fam)
