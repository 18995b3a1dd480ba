import pytest

from specconn.connectivity import (
    MAX_CUT_CANDIDATES,
    connectivity_report,
    is_k_connected,
    is_maximally_connected,
    is_super_kappa,
    local_connectivity,
    minimum_cuts,
    vertex_connectivity,
)
from specconn.errors import CapabilityError, DisconnectedGraphError, GraphError
from specconn.graph import complete, cycle, disjoint_union, join, path
from specconn.harness import enumerate_connected

import oracles

JOIN_SPLIT = join(complete(2), disjoint_union(complete(2), complete(5)))


def test_kappa_examples():
    assert vertex_connectivity(cycle(6)) == 2
    assert vertex_connectivity(JOIN_SPLIT) == 2 == oracles.kappa(JOIN_SPLIT)
    assert vertex_connectivity(complete(5)) == 4


def test_disconnected_is_an_error():
    with pytest.raises(DisconnectedGraphError):
        vertex_connectivity(disjoint_union(complete(2), complete(3)))
    with pytest.raises(DisconnectedGraphError):
        is_super_kappa(disjoint_union(complete(2), complete(3)))


def test_min_cuts_c5():
    cuts = [c.cut for c in minimum_cuts(cycle(5))]
    assert cuts == oracles.min_cuts(cycle(5))
    assert len(cuts) == 5


def test_single_cut_of_join_split():
    cuts = minimum_cuts(JOIN_SPLIT)
    assert [c.cut for c in cuts] == [(0, 1)]
    assert [len(p) for p in cuts[0].parts] == [2, 5]
    assert cuts[0].p == 2


def test_path_cut_is_middle():
    assert [c.cut for c in minimum_cuts(path(3))] == [(1,)]


def test_complete_has_no_cuts():
    with pytest.raises(GraphError):
        minimum_cuts(complete(4))


def test_cut_cap():
    g = join(complete(18), disjoint_union(complete(10), complete(12)))
    assert vertex_connectivity(g) == 18
    with pytest.raises(CapabilityError):
        minimum_cuts(g)
    assert MAX_CUT_CANDIDATES == 10**7


def test_super_examples():
    assert is_super_kappa(cycle(5))
    assert not is_super_kappa(cycle(6))
    assert is_super_kappa(complete(4))
    assert is_maximally_connected(cycle(6))
    assert is_k_connected(cycle(6), 2) and not is_k_connected(cycle(6), 3)


def test_report():
    r = connectivity_report(cycle(6))
    assert (r.kappa, len(r.min_cuts), r.is_maximally_connected, r.is_super_kappa) == (2, 9, True, False)
    r = connectivity_report(complete(3))
    assert (r.kappa, r.min_cuts, r.is_super_kappa) == (2, (), True)


def test_local_connectivity_limit():
    g = complete(6)
    assert local_connectivity(path(4), 0, 3) == 1
    assert local_connectivity(cycle(6), 0, 3) == 2
    assert local_connectivity(join(complete(3), disjoint_union(complete(1), complete(1))), 3, 4, limit=2) == 2


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_flow_matches_brute_force_exhaustively(n):
    for g in enumerate_connected(n, dedup=n == 6):
        assert vertex_connectivity(g) == oracles.kappa(g)
        assert is_super_kappa(g) == oracles.is_super(g)


def test_component_size_bounds_on_all_small_graphs():
    # every component X of G - S for a minimum cut S satisfies
    # delta - kappa + 1 <= |X| <= n - delta - 1
    for n in range(3, 7):
        for g in enumerate_connected(n, dedup=True):
            if g.m == n * (n - 1) // 2:
                continue
            delta = min(g.degrees())
            for cert in minimum_cuts(g):
                for part in cert.parts:
                    assert delta - cert.kappa + 1 <= len(part) <= n - delta - 1
