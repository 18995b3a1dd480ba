import math

import pytest

from specconn.connectivity import (
    is_maximally_connected,
    is_super_kappa,
    minimum_cuts,
    vertex_connectivity,
)
from specconn.errors import GraphError
from specconn.extremal import (
    FamilyParams,
    TfExtremalSpec,
    build_join_split,
    build_super_exception,
    build_tf_exception,
    build_tf_sharpness,
    is_spanning_subgraph_of_join_split,
    matches_join_split,
    matches_tf_exception,
    spanning_join_split_side,
)
from specconn.graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    delete_edge,
    disjoint_union,
    empty,
    is_triangle_free,
    join,
    min_degree,
)
from specconn.isomorphism import are_isomorphic

import oracles


def test_join_split_examples():
    g = build_join_split(FamilyParams(9, 3, 3))
    assert (g.m, min_degree(g).delta, vertex_connectivity(g)) == (26, 3, 2)
    assert build_join_split(FamilyParams(9, 3, 2)).m == 21
    bowtie = join(empty(1), disjoint_union(complete(2), complete(2)))
    assert build_join_split(FamilyParams(5, 2, 2)) == bowtie


def test_family_params_validation():
    for bad in [(5, 4, 2), (9, 3, 1), (9, 2, 3)]:
        with pytest.raises(GraphError):
            FamilyParams(*bad)
        assert FamilyParams.maybe(*bad) is None
    p = FamilyParams(9, 3, 2)
    assert (p.a, p.b, p.cut, p.edges) == (3, 5, 1, 21)


def test_super_exception_examples():
    g = build_super_exception(9, 3)
    assert g.m == 27 == math.comb(7, 2) + 6
    assert min_degree(g).delta == 3
    assert is_maximally_connected(g) and not is_super_kappa(g)
    assert not oracles.is_super(g)
    assert build_super_exception(5, 1).m == 5
    with pytest.raises(GraphError):
        build_super_exception(9, 7)


def test_tf_exception_instance():
    g = build_tf_exception(TfExtremalSpec(10, 3, 2))
    assert g.m == 15 == 9 + (10 - 6 + 1) ** 2 // 4
    assert is_triangle_free(g)
    assert matches_tf_exception(g, 10, 3, 2)


def test_tf_spec_validation():
    with pytest.raises(GraphError):
        TfExtremalSpec(6, 3, 3)
    assert TfExtremalSpec.maybe(6, 3, 3) is None


def test_tf_sharpness_delta_two():
    g = build_tf_sharpness(2)
    assert (g.n, g.m) == (9, 15) == (9, 4 + 49 // 4 - 1)
    assert is_triangle_free(g)
    assert vertex_connectivity(g) == 2 and not is_super_kappa(g)
    # one minimum cut leaves K_{1,2} u K_{1,3}
    shapes = []
    for cert in minimum_cuts(g):
        shapes.append(sorted(len(p) for p in cert.parts))
    assert [3, 4] in shapes
    s = (0, 1)
    comps = sorted(oracles.bfs_components(g, s), key=len)
    sub = [sorted(c) for c in comps]
    assert are_isomorphic(_induced(g, sub[0]), complete_bipartite(1, 2))
    assert are_isomorphic(_induced(g, sub[1]), complete_bipartite(1, 3))


def _induced(g: Graph, vs):
    from specconn.graph import induced_subgraph
    return induced_subgraph(g, vs)


def test_tf_sharpness_larger():
    for d in (3, 4):
        g = build_tf_sharpness(d)
        n = 3 * d + 3
        assert g.m == d * (d + 1) + (d + 1) ** 2 == d * d + (n - d) ** 2 // 4 - 1
        assert is_triangle_free(g) and vertex_connectivity(g) == d
        assert not is_super_kappa(g)


def test_join_split_recognizers():
    p = FamilyParams(9, 3, 3)
    h = build_join_split(p)
    assert matches_join_split(h, p)
    he = delete_edge(h, 4, 5)
    assert not matches_join_split(he, p)
    assert is_spanning_subgraph_of_join_split(he, p)
    assert oracles.spanning_join_split(he, 9, 3, 3)


def test_cycle9_is_a_spanning_subgraph():
    # A = {0, 1}, S = {8, 2} separates A from the remaining path 3..7
    p = FamilyParams(9, 3, 3)
    c9 = cycle(9)
    assert not matches_join_split(c9, p)
    assert oracles.spanning_join_split(c9, 9, 3, 3)
    assert is_spanning_subgraph_of_join_split(c9, p)
    assert spanning_join_split_side(c9, p) == (0, 1)


def test_spanning_recognizer_matches_oracle():
    from specconn.harness import enumerate_connected
    for g in enumerate_connected(6, dedup=True):
        assert is_spanning_subgraph_of_join_split(g, FamilyParams(6, 3, 3)) == \
            oracles.spanning_join_split(g, 6, 3, 3)
    for g in enumerate_connected(7, dedup=True):
        for d, k in [(3, 2), (4, 3), (3, 3)]:
            assert is_spanning_subgraph_of_join_split(g, FamilyParams(7, d, k)) == \
                oracles.spanning_join_split(g, 7, d, k)


def test_tf_recognizer_negatives():
    assert not matches_tf_exception(complete_bipartite(3, 3), 6, 3, 3)
    assert not matches_tf_exception(build_tf_sharpness(2), 9, 2, 2)
    with pytest.raises(GraphError):
        matches_tf_exception(complete(4), 4, 2, 2)


def test_tf_recognizer_relabeled():
    g = build_tf_exception(TfExtremalSpec(11, 3, 3))
    perm = [(3 * v + 5) % 11 for v in range(11)]
    h = Graph.from_edges(11, [(perm[u], perm[v]) for u, v in g.edges()])
    assert matches_tf_exception(h, 11, 3, 3)


def test_matches_implies_spanning():
    for n in range(5, 10):
        for d in range(2, n - 2):
            for k in range(2, d + 1):
                p = FamilyParams(n, d, k)
                g = build_join_split(p)
                assert matches_join_split(g, p)
                assert is_spanning_subgraph_of_join_split(g, p)


def test_order_mismatch():
    with pytest.raises(GraphError):
        matches_join_split(cycle(8), FamilyParams(9, 3, 3))
