import math
import random
from itertools import combinations

import pytest

from oracles import brute_independent_sets, brute_maximal_independent_sets
from tfgor import (
    Graph,
    complete_graph,
    components,
    cycle_graph,
    delete_edge,
    delete_vertex,
    disjoint_union,
    edge_localize,
    edge_localized_vertices,
    from_edge_list,
    generate,
    girth,
    girth4_planar,
    has_isolated_vertices,
    independence_number,
    induced_subgraph,
    is_alpha_critical,
    is_in_w2,
    is_independent_set,
    is_triangle_free,
    is_well_covered,
    localize,
    localized_vertices,
    maximal_independent_sets,
    path_graph,
)


def random_graph(rng, n, p=0.4):
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def test_from_edge_list_k2():
    g = from_edge_list(2, [(0, 1)])
    assert g.n == 2 and g.edges() == [(0, 1)]


def test_from_edge_list_c5():
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert g == cycle_graph(5)


def test_from_edge_list_duplicates_collapse():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count() == 1


def test_from_edge_list_rejects_loop():
    with pytest.raises(ValueError, match="loop"):
        from_edge_list(3, [(0, 0)])


def test_from_edge_list_rejects_out_of_range():
    with pytest.raises(ValueError, match="range"):
        from_edge_list(2, [(0, 2)])


def test_generate_girth4_planar_3():
    g = generate("girth4-planar", 3)
    # 1-based labels: 12, 23, 34, 45, 51, 56, 67, 78, 84, 36
    expected = {(1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
                (5, 6), (6, 7), (7, 8), (8, 4), (3, 6)}
    got = {(u + 1, v + 1) for u, v in g.edges()}
    assert g.n == 8
    assert {frozenset(e) for e in got} == {frozenset(e) for e in expected}


def test_generate_girth4_planar_4():
    # expanded by hand: 1 + 4(n-1) + (n-2) edges on 3n-1 vertices
    g = generate("girth4-planar", 4)
    assert g.n == 11 and g.edge_count() == 15
    expected = {(1, 2)}
    for k in range(1, 4):
        expected |= {(3 * k - 1, 3 * k), (3 * k, 3 * k + 1),
                     (3 * k + 1, 3 * k + 2), (3 * k + 2, 3 * k - 2)}
    for l in range(2, 4):
        expected.add((3 * l - 3, 3 * l))
    got = {frozenset((u + 1, v + 1)) for u, v in g.edges()}
    assert got == {frozenset(e) for e in expected}


def test_generate_cycle():
    assert generate("cycle", 5) == cycle_graph(5)


def test_generate_too_small():
    for family, bad_n in [("girth4-planar", 2), ("cycle", 2), ("path", 0)]:
        with pytest.raises(ValueError):
            generate(family, bad_n)


def test_girth4_planar_edge_count_formula():
    for n in range(3, 8):
        g = girth4_planar(n)
        assert g.n == 3 * n - 1
        assert g.edge_count() == 1 + 4 * (n - 1) + (n - 2)


def test_disjoint_union():
    two_k2 = disjoint_union(complete_graph(2), complete_graph(2))
    assert two_k2.n == 4 and two_k2.edges() == [(0, 1), (2, 3)]
    g = disjoint_union(complete_graph(1), complete_graph(2))
    assert g.n == 3 and g.edges() == [(1, 2)]
    c = disjoint_union(cycle_graph(5), cycle_graph(5))
    assert c.n == 10 and c.edge_count() == 10


def test_girth():
    assert girth(cycle_graph(5)) == 5
    assert girth(girth4_planar(3)) == 4
    assert girth(path_graph(4)) == math.inf
    assert girth(complete_graph(4)) == 3
    assert girth(Graph(3)) == math.inf


def test_is_triangle_free():
    assert not is_triangle_free(complete_graph(3))
    assert is_triangle_free(cycle_graph(5))
    assert is_triangle_free(girth4_planar(4))


def test_triangle_free_matches_triple_enumeration():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 8))
        brute = any(
            g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
            for a, b, c in combinations(range(g.n), 3)
        )
        assert is_triangle_free(g) == (not brute)
        assert is_triangle_free(g) == (girth(g) >= 4)


def test_components():
    two_k2 = disjoint_union(complete_graph(2), complete_graph(2))
    assert components(two_k2) == [(0, 1), (2, 3)]
    assert components(cycle_graph(5)) == [(0, 1, 2, 3, 4)]
    assert components(Graph(3)) == [(0,), (1,), (2,)]
    assert has_isolated_vertices(Graph(3))
    assert not has_isolated_vertices(complete_graph(2))


def test_has_isolated_matches_singleton_components():
    rng = random.Random(11)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 8), 0.3)
        assert has_isolated_vertices(g) == any(
            len(c) == 1 for c in components(g)
        )


def test_induced_subgraph():
    c5 = cycle_graph(5)
    assert induced_subgraph(c5, [0, 1, 2]) == path_graph(3)
    assert induced_subgraph(c5, [0, 2]) == Graph(2)
    k3 = complete_graph(3)
    assert induced_subgraph(k3, [0, 1, 2]) == k3
    with pytest.raises(ValueError):
        induced_subgraph(c5, [0, 7])


def test_delete_edge():
    assert delete_edge(complete_graph(2), (0, 1)) == Graph(2)
    assert delete_edge(cycle_graph(5), (0, 1)).edge_count() == 4
    assert sorted(delete_edge(complete_graph(3), (0, 1)).edges()) == [(0, 2), (1, 2)]
    with pytest.raises(ValueError):
        delete_edge(cycle_graph(5), (0, 2))


def test_localize():
    c5 = cycle_graph(5)
    assert localized_vertices(c5, [0]) == (2, 3)
    assert localize(c5, [0]) == complete_graph(2)
    assert localize(c5, []) == c5
    assert localize(complete_graph(2), [0]) == Graph(0)
    with pytest.raises(ValueError, match="independent"):
        localize(c5, [0, 1])


def test_edge_localize():
    c5 = cycle_graph(5)
    assert edge_localized_vertices(c5, 0, 1) == (3,)
    assert edge_localize(c5, 0, 1) == Graph(1)
    assert edge_localize(complete_graph(2), 0, 1) == Graph(0)
    with pytest.raises(ValueError):
        edge_localize(c5, 0, 2)


def test_edge_localize_girth4_planar_3():
    # localizing at x1x2 keeps {x4, x6, x7, x8} with edges x4x8, x6x7, x7x8
    g = girth4_planar(3)
    assert edge_localized_vertices(g, 0, 1) == (3, 5, 6, 7)
    h = edge_localize(g, 0, 1)
    assert {frozenset(e) for e in h.edges()} == {
        frozenset((0, 3)), frozenset((1, 2)), frozenset((2, 3))
    }
    assert independence_number(h) == 2


def test_edge_localize_is_localization_of_deletion():
    rng = random.Random(23)
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 8))
        for a, b in g.edges():
            gd = delete_edge(g, (a, b))
            assert edge_localized_vertices(g, a, b) == localized_vertices(gd, [a, b])
            assert edge_localize(g, a, b) == localize(gd, [a, b])


def test_maximal_independent_sets_examples():
    assert maximal_independent_sets(cycle_graph(4)) == [(0, 2), (1, 3)]
    assert maximal_independent_sets(complete_graph(3)) == [(0,), (1,), (2,)]
    assert maximal_independent_sets(path_graph(3)) == [(0, 2), (1,)]
    assert maximal_independent_sets(Graph(0)) == [()]


def test_maximal_independent_sets_brute_force():
    rng = random.Random(5)
    for _ in range(80):
        n = rng.randint(0, 8)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.7]))
        assert maximal_independent_sets(g) == brute_maximal_independent_sets(
            n, g.edges()
        )


def test_every_independent_set_extends_to_a_listed_one():
    rng = random.Random(13)
    for _ in range(40):
        n = rng.randint(1, 8)
        g = random_graph(rng, n)
        mis = [set(s) for s in maximal_independent_sets(g)]
        for s in brute_independent_sets(n, g.edges()):
            assert any(set(s) <= m for m in mis)


def test_independence_number():
    assert independence_number(cycle_graph(5)) == 2
    assert independence_number(girth4_planar(3)) == 3
    assert all(independence_number(complete_graph(n)) == 1 for n in (1, 2, 5))
    assert independence_number(Graph(0)) == 0


def test_is_well_covered():
    assert is_well_covered(cycle_graph(4))
    assert not is_well_covered(path_graph(3))
    assert is_well_covered(cycle_graph(5))
    assert is_well_covered(Graph(0))


def test_is_in_w2():
    assert is_in_w2(complete_graph(3))
    assert not is_in_w2(cycle_graph(4))
    assert is_in_w2(cycle_graph(5))
    assert is_in_w2(complete_graph(2))
    assert is_in_w2(Graph(0))
    # isolated-vertex conventions, K1 included
    assert not is_in_w2(complete_graph(1))
    assert not is_in_w2(disjoint_union(complete_graph(1), complete_graph(2)))


def test_is_alpha_critical():
    assert is_alpha_critical(cycle_graph(5))
    assert not is_alpha_critical(cycle_graph(4))
    assert is_alpha_critical(complete_graph(2))
    assert is_alpha_critical(Graph(3))  # edgeless, vacuous


def test_localization_alpha_inequality():
    rng = random.Random(31)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 8))
        alpha = independence_number(g)
        wc = is_well_covered(g)
        for s in brute_independent_sets(g.n, g.edges()):
            loc = localize(g, s)
            assert independence_number(loc) <= alpha - len(s)
            if wc:
                assert independence_number(loc) == alpha - len(s)
                assert is_well_covered(loc)


def test_w2_localization_closure():
    for g in (cycle_graph(5), complete_graph(3), girth4_planar(3),
              complete_graph(4), cycle_graph(7)):
        if not is_in_w2(g):
            continue
        alpha = independence_number(g)
        for s in brute_independent_sets(g.n, g.edges()):
            if 0 < len(s) < alpha:
                assert is_in_w2(localize(g, s))


def test_is_independent_set():
    c5 = cycle_graph(5)
    assert is_independent_set(c5, [0, 2])
    assert not is_independent_set(c5, [0, 1])
    assert is_independent_set(c5, [])


def test_delete_vertex_keeps_other_adjacency():
    c5 = cycle_graph(5)
    assert delete_vertex(c5, 0) == path_graph(4)
    with pytest.raises(ValueError):
        delete_vertex(c5, 5)
