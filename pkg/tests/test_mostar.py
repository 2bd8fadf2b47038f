import networkx as nx
import pytest
from hypothesis import given

from mostarlab.errors import NotABridge, NotAnEdge, NotConnected
from mostarlab.families import balanced_bridge_path, complete, complete_with_pendants, cycle, path, star
from mostarlab.graph import Edge, Graph, bridges, component_of, graph_from_edges
from mostarlab.mostar import (
    bridge_balance, contribution_profile, distance_matrix, edge_contribution, mostar_index,
)

from oracle import connected_graphs, connected_labeled, edge_counts, mostar, to_nx

K4_MINUS_E = graph_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)])  # missing (1, 2)


def test_pendant_edge_imbalance():
    g = complete_with_pendants(7, 3)
    for leaf in (4, 5, 6):
        c = edge_contribution(g, Edge(0, leaf))
        assert c.imbalance == 7 - 2


def test_complete_graph_edge():
    c = edge_contribution(complete(4), Edge(1, 3))
    assert (c.n_u, c.n_v, c.equidistant, c.imbalance) == (1, 1, 2, 0)


def test_k4_minus_edge_contribution():
    # vertex 1 has degree 2 and vertex 0 degree 3; the far side of 0-1 sees 2 closer to 0
    c = edge_contribution(K4_MINUS_E, Edge(0, 1))
    assert (c.n_u, c.n_v, c.equidistant, c.imbalance) == (2, 1, 1, 1)


def test_edge_contribution_errors():
    with pytest.raises(NotAnEdge):
        edge_contribution(path(3), Edge(0, 2))
    with pytest.raises(NotConnected):
        edge_contribution(graph_from_edges(3, [(0, 1)]), Edge(0, 1))


@pytest.mark.parametrize("n", range(2, 9))
def test_complete_graphs_are_balanced(n):
    assert mostar_index(complete(n)) == 0


def test_mostar_examples():
    assert mostar_index(path(4)) == 4
    assert mostar_index(K4_MINUS_E) == 4
    assert mostar_index(graph_from_edges(1, [])) == 0


def test_mostar_disconnected():
    with pytest.raises(NotConnected):
        mostar_index(graph_from_edges(4, [(0, 1), (2, 3)]))


def test_profile_star():
    profile = contribution_profile(star(4))
    assert [c.imbalance for c in profile] == [2, 2, 2]


def test_profile_cycle():
    profile = contribution_profile(cycle(4))
    assert len(profile) == 4 and all(c.imbalance == 0 for c in profile)


def test_profile_fig1_graph():
    imbalances = sorted((c.imbalance for c in contribution_profile(complete_with_pendants(6, 2))), reverse=True)
    assert imbalances == [4, 4, 2, 2, 2, 0, 0, 0]


def test_profile_order_is_lexicographic():
    g = complete_with_pendants(6, 2)
    assert [c.edge for c in contribution_profile(g)] == g.edges()


def test_bridge_balance_path_middle():
    b = bridge_balance(path(4), Edge(1, 2))
    assert (b.smaller_side, b.contribution) == (2, 0)


def test_bridge_balance_pendant():
    b = bridge_balance(complete_with_pendants(8, 2), Edge(0, 7))
    assert (b.smaller_side, b.contribution) == (1, 6)


def test_bridge_balance_on_bridge_path():
    # u0 - u1 - u2 - u3 - u4 with the clique at u2; cutting u1u2 isolates {u0, u1}
    g = balanced_bridge_path(9, 4)
    assert bridge_balance(g, Edge(1, 2)).smaller_side == 2


def test_bridge_balance_rejects_cycle_edge():
    with pytest.raises(NotABridge):
        bridge_balance(cycle(5), Edge(0, 1))


@given(connected_graphs(min_n=2, max_n=9))
def test_balance_identity(g):
    for c in contribution_profile(g):
        assert c.n_u + c.n_v + c.equidistant == g.n
        assert c.n_u >= 1 and c.n_v >= 1


@given(connected_graphs(min_n=2, max_n=9))
def test_mostar_matches_networkx(g):
    G = to_nx(g)
    assert mostar_index(g) == mostar(G)
    for c in contribution_profile(g):
        assert (c.n_u, c.n_v, c.equidistant) == edge_counts(G, *c.edge)


@given(connected_graphs(min_n=2, max_n=9))
def test_two_routes_agree(g):
    assert mostar_index(g) == sum(c.imbalance for c in contribution_profile(g))
    for e in g.edges():
        assert edge_contribution(g, e) == next(c for c in contribution_profile(g) if c.edge == e)


@given(connected_graphs(min_n=2, max_n=9))
def test_mostar_range(g):
    assert 0 <= mostar_index(g) <= g.m * (g.n - 2)


@given(connected_graphs(min_n=2, max_n=9))
def test_bridge_identity(g):
    for e in bridges(g):
        side = bin(component_of(g, e.u, tuple(e))).count("1")
        b = bridge_balance(g, e)
        assert b.smaller_side == min(side, g.n - side)
        assert b.contribution == edge_contribution(g, e).imbalance
        assert edge_contribution(g, e).equidistant == 0


def test_distance_matrix_matches_networkx():
    g = complete_with_pendants(7, 2)
    expected = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
    d = distance_matrix(g)
    assert all(d[u][v] == expected[u][v] for u in range(7) for v in range(7))


@pytest.mark.parametrize("n", range(1, 6))
def test_mostar_exhaustive_against_networkx(n):
    for G in connected_labeled(n):
        rows = [sum(1 << w for w in G[v]) for v in range(n)]
        assert mostar_index(Graph(n, rows)) == mostar(G)
