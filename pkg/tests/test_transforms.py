import itertools

import pytest
from hypothesis import given, strategies as st

from mostarlab.errors import InvalidEdge, InvalidMove, NotABridge, NotPendant, PendantBridge
from mostarlab.families import balanced_bridge_path, complete, complete_with_pendants, cycle, path, star
from mostarlab.graph import Edge, Graph, bridges, cyclomatic_number, graph_from_edges, is_connected, pendant_vertices
from mostarlab.enumerate import is_isomorphic
from mostarlab.mostar import mostar_index
from mostarlab.transforms import add_edge, contract_bridge_append_leaf, move_pendant, outcome

from oracle import connected_graphs, connected_labeled, mostar, to_nx

K4_MINUS_E = graph_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)])


# --- contraction --------------------------------------------------------------


def test_contract_path_middle():
    after = contract_bridge_append_leaf(path(4), Edge(1, 2))
    assert is_isomorphic(after, star(4))
    o = outcome(path(4), after)
    assert (o.mo_before, o.mo_after, o.delta) == (4, 6, 2)


def test_contract_bridge_path():
    g = balanced_bridge_path(9, 4)
    after = contract_bridge_append_leaf(g, Edge(1, 2))
    assert after.n == 9
    # the freed index 2 becomes a leaf of the merged vertex 1
    assert after.neighbors(2) == [1]
    assert len(bridges(after)) == len(bridges(g)) == 4
    assert mostar_index(after) == mostar(to_nx(after))


def test_contract_pendant_rejected():
    for e in [Edge(0, 1), Edge(1, 2)]:
        with pytest.raises(PendantBridge):
            contract_bridge_append_leaf(path(3), e)


def test_contract_non_bridge_rejected():
    with pytest.raises(NotABridge):
        contract_bridge_append_leaf(cycle(5), Edge(0, 1))


# --- pendant moves ------------------------------------------------------------------


def test_move_pendant_double_star():
    # centres 0 and 1; 0 carries leaves 2, 3, 4 and 1 carries leaf 5
    g = graph_from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5)])
    after = move_pendant(g, 5, 0)
    assert is_isomorphic(after, star(6))
    assert mostar_index(g) == mostar(to_nx(g)) == 18
    assert mostar_index(after) == mostar(to_nx(after)) == 20


def test_move_pendant_to_own_neighbour():
    with pytest.raises(InvalidMove):
        move_pendant(star(4), 1, 0)


def test_move_pendant_errors():
    with pytest.raises(NotPendant):
        move_pendant(cycle(4), 0, 2)
    with pytest.raises(InvalidEdge):
        move_pendant(star(4), 1, 1)


def test_move_leaf_within_k4_is_a_tie():
    g = complete_with_pendants(5, 1)
    after = move_pendant(g, 4, 2)
    assert mostar_index(g) == mostar_index(after) == 6


# --- edge additions ----------------------------------------------------------------------


def test_add_edge_completes_k4():
    after = add_edge(K4_MINUS_E, 1, 2)
    assert after == complete(4)
    o = outcome(K4_MINUS_E, after)
    assert (o.mo_before, o.mo_after) == (4, 0)


def test_add_edge_closes_cycles():
    assert (mostar_index(path(3)), mostar_index(add_edge(path(3), 0, 2))) == (2, 0)
    assert (mostar_index(path(4)), mostar_index(add_edge(path(4), 0, 3))) == (4, 0)


def test_add_edge_errors():
    with pytest.raises(InvalidEdge):
        add_edge(path(3), 0, 1)
    with pytest.raises(InvalidEdge):
        add_edge(path(3), 1, 1)


# --- invariants -----------------------------------------------------------------------------


def _check_contraction(g):
    for e in bridges(g):
        if g.degree(e.u) >= 2 and g.degree(e.v) >= 2:
            after = contract_bridge_append_leaf(g, e)
            assert after.n == g.n and after.m == g.m and is_connected(after)
            keep, drop = e
            assert after.neighbors(drop) == [keep]


def _check_moves(g):
    for p in pendant_vertices(g):
        (y,) = g.neighbors(p)
        for x in range(g.n):
            if x in (p, y):
                continue
            after = move_pendant(g, p, x)
            assert after.n == g.n and after.m == g.m and is_connected(after)
            assert after.neighbors(p) == [x]


def _check_additions(g):
    for u, v in itertools.combinations(range(g.n), 2):
        if not g.has_edge(u, v):
            after = add_edge(g, u, v)
            assert after.n == g.n and after.m == g.m + 1
            assert cyclomatic_number(after) == cyclomatic_number(g) + 1


@pytest.mark.parametrize("n", range(2, 6))
def test_transform_invariants_exhaustive(n):
    for G in connected_labeled(n):
        g = Graph(n, [sum(1 << w for w in G[v]) for v in range(n)])
        _check_contraction(g)
        _check_moves(g)
        _check_additions(g)


@given(connected_graphs(min_n=2, max_n=10))
def test_transform_invariants_random(g):
    _check_contraction(g)
    _check_moves(g)
    _check_additions(g)


@given(connected_graphs(min_n=3, max_n=9), st.data())
def test_outcome_recomputes(g, data):
    missing = [(u, v) for v in range(g.n) for u in range(v) if not g.has_edge(u, v)]
    if not missing:
        return
    after = add_edge(g, *data.draw(st.sampled_from(missing)))
    o = outcome(g, after)
    assert o.mo_before == mostar(to_nx(g)) and o.mo_after == mostar(to_nx(after))
    assert o.cut_edges_after == len(bridges(after))
