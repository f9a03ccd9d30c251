"""Structural facts tying the graph layer to the complex layer, checked on
corpus samples and the named families.  The exhaustive corpus sweeps live
in test_acceptance."""

import random

from oracles import brute_independent_sets
from tfgor import (
    RATIONALS,
    complete_graph,
    cycle_graph,
    delete_set,
    disjoint_union,
    edge_localize,
    girth4_planar,
    has_isolated_vertices,
    independence_complex,
    independence_number,
    is_alpha_critical,
    is_cohen_macaulay,
    is_cone,
    is_eulerian,
    is_gorenstein,
    is_gorenstein_graph,
    is_in_w2,
    is_k_acyclic,
    is_triangle_free,
    is_well_covered,
    localize,
    parse_graph6,
    reduced_euler_characteristic,
    restrict,
)

GORENSTEIN_NAMES = [
    complete_graph(2),
    cycle_graph(5),
    disjoint_union(complete_graph(2), complete_graph(2)),
    girth4_planar(3),
    girth4_planar(4),
]


def sample(lines, k, seed):
    return [parse_graph6(ln) for ln in random.Random(seed).sample(lines, k)]


def test_gorenstein_without_isolated_implies_w2(corpus_tf_lines):
    for g in GORENSTEIN_NAMES:
        assert is_in_w2(g)
    for g in sample(corpus_tf_lines, 150, seed=2):
        if is_gorenstein_graph(g, RATIONALS):
            assert is_in_w2(g)


def test_triangle_free_w2_has_eulerian_complex(corpus_tf_lines):
    seen_w2 = 0
    for g in sample(corpus_tf_lines, 300, seed=3) + GORENSTEIN_NAMES:
        if not (is_in_w2(g) and is_triangle_free(g)):
            continue
        seen_w2 += 1
        c = independence_complex(g)
        assert is_eulerian(c)
        alpha = independence_number(g)
        assert reduced_euler_characteristic(c) == (-1) ** (alpha - 1)
    assert seen_w2 >= len(GORENSTEIN_NAMES)


def test_localization_preserves_gorenstein_with_dim_drop():
    for g in GORENSTEIN_NAMES:
        alpha = independence_number(g)
        dim = independence_complex(g).dim
        for s in brute_independent_sets(g.n, g.edges()):
            if not s:
                continue
            loc = localize(g, s)
            c = independence_complex(loc)
            assert is_gorenstein(c, RATIONALS)
            if len(s) < alpha:
                assert c.dim == dim - len(s)


def test_cone_deletion_vanishing():
    # Gorenstein complexes equal to their core: deleting any vertex subset
    # whose restriction is a cone leaves a fully acyclic complex
    for g in GORENSTEIN_NAMES[:4]:
        c = independence_complex(g)
        verts = list(c.vertices)
        for mask in range(1, 1 << min(len(verts), 8)):
            s = [verts[i] for i in range(len(verts)) if mask >> i & 1]
            if not is_cone(restrict(c, s)):
                continue
            deleted = delete_set(c, s)
            if deleted.is_void:
                continue
            assert is_k_acyclic(deleted, RATIONALS)


def test_face_deletion_cm_for_corpus_gorenstein(corpus_tf_lines):
    checked = 0
    for g in sample(corpus_tf_lines, 120, seed=5):
        if g.n > 8 or not is_gorenstein_graph(g, RATIONALS):
            continue
        c = independence_complex(g)
        for f in c.faces():
            assert is_cohen_macaulay(delete_set(c, f), RATIONALS)
        checked += 1
    assert checked >= 1


def test_well_covered_propagation_vertex_and_edge(corpus_tf_lines):
    # localization hypotheses imply well-coveredness (both versions)
    for g in sample(corpus_tf_lines, 200, seed=7):
        alpha = independence_number(g)
        vertex_hyp = all(
            is_well_covered(localize(g, [x]))
            and independence_number(localize(g, [x])) == alpha - 1
            for x in range(g.n)
        )
        if vertex_hyp:
            assert is_well_covered(g)
        if g.edge_count():
            edge_hyp = all(
                is_well_covered(edge_localize(g, a, b))
                and independence_number(edge_localize(g, a, b)) == alpha - 1
                for a, b in g.edges()
            )
            if edge_hyp:
                assert is_well_covered(g)


def test_edge_localization_biconditional(corpus_tf_lines):
    # on triangle-free graphs without isolated vertices, W2 membership is
    # equivalent to every edge localization being well-covered with
    # independence number exactly one less
    for g in sample(corpus_tf_lines, 250, seed=11):
        if has_isolated_vertices(g) or not g.edge_count():
            continue
        alpha = independence_number(g)
        crit = all(
            is_well_covered(edge_localize(g, a, b))
            and independence_number(edge_localize(g, a, b)) == alpha - 1
            for a, b in g.edges()
        )
        assert crit == is_in_w2(g)


def test_triangle_free_w2_members_are_alpha_critical(corpus_tf_lines):
    for g in GORENSTEIN_NAMES:
        assert is_alpha_critical(g)
    for g in sample(corpus_tf_lines, 250, seed=13):
        if is_in_w2(g):
            assert is_alpha_critical(g)
