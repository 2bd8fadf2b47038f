import itertools
import random

import networkx as nx
import pytest
from hypothesis import given

from mostarlab.bounds import max_bound
from mostarlab.enumerate import (
    GraphClassFilter, canonical_form, check_order, class_table, dedupe, enumerate_class,
    enumerate_connected, enumeration_cap, extremal_search, is_isomorphic, mask_ranges,
)
from mostarlab.errors import EmptyClass, OutOfRange
from mostarlab.families import complete, complete_with_pendants, cycle, path, star
from mostarlab.graph import bridges, cyclomatic_number, decode_graph6, encode_graph6, graph_from_edges, to_mask
from mostarlab.mostar import mostar_index

from oracle import connected_count_recurrence, connected_graphs, connected_labeled, mostar, to_nx

PAW = complete_with_pendants(4, 1)


# --- counting --------------------------------------------------------------------


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)])
def test_connected_counts(n, expected):
    assert enumerate_connected(n, workers=1) == expected


def test_counts_match_recurrence():
    expected = connected_count_recurrence(6)
    for n in range(1, 7):
        assert enumerate_connected(n, workers=1) == expected[n]


@pytest.mark.parametrize("n", range(1, 6))
def test_visit_matches_networkx_brute_force(n):
    seen = []
    enumerate_connected(n, visit=seen.append, workers=1)
    assert len(seen) == len(set(seen))
    expected = {frozenset(map(frozenset, G.edges())) for G in connected_labeled(n)}
    assert {frozenset(frozenset(e) for e in g.edges()) for g in seen} == expected


def test_class_examples():
    assert enumerate_class(GraphClassFilter(4, k=1), workers=1) == 12
    assert enumerate_class(GraphClassFilter(4, k=2), workers=1) == 0
    assert enumerate_class(GraphClassFilter(4, k=3), workers=1) == 16


def test_class_visits_are_paws():
    seen = []
    enumerate_class(GraphClassFilter(4, k=1), visit=seen.append, workers=1)
    assert len(seen) == 12 and all(is_isomorphic(g, PAW) for g in seen)


@pytest.mark.parametrize("n", range(2, 6))
def test_class_table_matches_networkx(n):
    cells = {}
    for G in connected_labeled(n):
        key = (sum(1 for _ in nx.bridges(G)), G.number_of_edges() - n + 1)
        cells.setdefault(key, []).append(mostar(G))
    table = class_table(n, workers=1)
    for (k, mu), values in cells.items():
        assert table.cell(GraphClassFilter(n, k, mu)) == (len(values), max(values), min(values))
    assert sorted(table.nonempty()) == sorted(cells)


def test_filter_validation():
    with pytest.raises(OutOfRange):
        GraphClassFilter(0)
    with pytest.raises(OutOfRange):
        GraphClassFilter(4, k=4)
    with pytest.raises(OutOfRange):
        GraphClassFilter(4, mu=-1)
    assert GraphClassFilter(6, k=1, mu=2).edge_count == 7


def test_cap(monkeypatch):
    monkeypatch.delenv("MOSTAR_MAX_N", raising=False)
    assert enumeration_cap() == 7
    with pytest.raises(OutOfRange):
        check_order(8)
    with pytest.raises(OutOfRange):
        enumerate_connected(9)
    check_order(8, allow_n8=True)
    monkeypatch.setenv("MOSTAR_MAX_N", "8")
    assert enumeration_cap() == 8
    monkeypatch.setenv("MOSTAR_MAX_N", "12")
    with pytest.raises(OutOfRange):
        enumeration_cap()


def test_mask_ranges_cover_space():
    for n in range(1, 8):
        ranges = mask_ranges(n)
        assert ranges[0][0] == 0 and ranges[-1][1] == 1 << (n * (n - 1) // 2)
        assert all(a[1] == b[0] for a, b in zip(ranges, ranges[1:]))


# --- extremal search -----------------------------------------------------------------


def test_extremal_paw():
    res = extremal_search(GraphClassFilter(4, k=1), "max", workers=1)
    assert res.value == 4 == max_bound(4, 1)
    assert res.witnesses == (canonical_form(PAW).decode(),)
    assert res.class_size_labeled == 12


def test_extremal_tree_min_is_path():
    res = extremal_search(GraphClassFilter(4, k=3), "min", workers=1)
    assert res.value == 4
    assert len(res.witnesses) == 1 and is_isomorphic(decode_graph6(res.witnesses[0]), path(4))


def test_extremal_5_1():
    res = extremal_search(GraphClassFilter(5, k=1), "max", workers=1)
    best = max(mostar(G) for G in connected_labeled(5) if sum(1 for _ in nx.bridges(G)) == 1)
    assert res.value == best == 10
    assert res.value > max_bound(5, 1)


def test_extremal_empty_class():
    with pytest.raises(EmptyClass):
        extremal_search(GraphClassFilter(4, k=2), "max", workers=1)


def test_extremal_bad_objective():
    with pytest.raises(ValueError):
        extremal_search(GraphClassFilter(4, k=1), "median", workers=1)


@pytest.mark.parametrize("n, k, mu", [(5, 1, None), (5, 2, None), (6, 1, 2), (6, None, 1), (5, None, None)])
@pytest.mark.parametrize("objective", ["max", "min"])
def test_witnesses_satisfy_filter(n, k, mu, objective):
    flt = GraphClassFilter(n, k, mu)
    res = extremal_search(flt, objective, workers=1)
    assert res.witnesses
    for w in res.witnesses:
        g = decode_graph6(w)
        assert g.n == n
        assert flt.matches(len(bridges(g)), cyclomatic_number(g))
        assert mostar_index(g) == res.value
        assert canonical_form(g).decode() == w


def test_extremal_independent_of_workers():
    flt = GraphClassFilter(6, k=1)
    a = extremal_search(flt, "max", workers=1)
    b = extremal_search(flt, "max", workers=3)
    assert a == b


# --- canonical forms ---------------------------------------------------------------------


def test_path3_labelings():
    forms = {canonical_form(graph_from_edges(3, edges)) for edges in
             ([(0, 1), (1, 2)], [(0, 2), (2, 1)], [(1, 0), (0, 2)])}
    assert len(forms) == 1


def test_distinct_forms():
    assert canonical_form(PAW) != canonical_form(star(4))
    assert canonical_form(complete(4)) == b"C~"


@given(connected_graphs(max_n=8))
def test_canonical_form_invariant(g):
    rng = random.Random(to_mask(g))
    form = canonical_form(g)
    for _ in range(100):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g.permuted(perm)) == form


@given(connected_graphs(max_n=7), connected_graphs(max_n=7))
def test_isomorphism_matches_networkx(g, h):
    assert is_isomorphic(g, h) == (g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h)))


def test_is_isomorphic_examples():
    fig1 = graph_from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5)])
    assert is_isomorphic(complete_with_pendants(6, 2), fig1)
    assert not is_isomorphic(path(4), star(4))
    assert is_isomorphic(cycle(4), cycle(4).permuted([2, 0, 3, 1]))
    assert not is_isomorphic(path(4), path(5))


def test_canonical_form_cap():
    with pytest.raises(OutOfRange):
        canonical_form(path(9))


def test_dedupe_counts_isomorphism_classes():
    # 6 non-isomorphic connected graphs on 4 vertices, 21 on 5
    for n, classes in [(4, 6), (5, 21)]:
        masks = []
        enumerate_connected(n, visit=lambda g: masks.append(to_mask(g)), workers=1)
        forms = dedupe(n, masks)
        assert len(forms) == classes
        assert list(forms) == sorted(forms)
        assert all(canonical_form(decode_graph6(f)).decode() == f for f in forms)


def test_graph6_key_matches_encoder():
    g = complete_with_pendants(6, 2)
    assert canonical_form(g) == min(
        encode_graph6(g.permuted(list(p))).encode() for p in itertools.permutations(range(6))
    )
