"""Independent reference implementations built on networkx.

Nothing here imports mostarlab internals beyond Graph accessors, so these
functions serve as the ground truth the package is checked against.
"""

import itertools
from math import comb

import networkx as nx
from hypothesis import strategies as st

from mostarlab.graph import graph_from_edges


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(tuple(e) for e in g.edges())
    return G


def edge_counts(G, u, v):
    du = nx.single_source_shortest_path_length(G, u)
    dv = nx.single_source_shortest_path_length(G, v)
    nu = sum(1 for w in G if du[w] < dv[w])
    nv = sum(1 for w in G if dv[w] < du[w])
    return nu, nv, G.number_of_nodes() - nu - nv


def mostar(G):
    total = 0
    for u, v in G.edges():
        nu, nv, _ = edge_counts(G, u, v)
        total += abs(nu - nv)
    return total


def all_labeled(n):
    """Every labeled simple graph on n vertices, via plain pair subsets."""
    pairs = list(itertools.combinations(range(n), 2))
    for r in range(len(pairs) + 1):
        for chosen in itertools.combinations(pairs, r):
            G = nx.empty_graph(n)
            G.add_edges_from(chosen)
            yield G


def connected_labeled(n):
    return (G for G in all_labeled(n) if nx.is_connected(G))


def connected_count_recurrence(n_max):
    """Labeled connected graph counts from the standard rooted-component recurrence."""
    c = [0, 1]
    for n in range(2, n_max + 1):
        total = 2 ** comb(n, 2)
        for k in range(1, n):
            total -= comb(n - 1, k - 1) * c[k] * 2 ** comb(n - k, 2)
        c.append(total)
    return c


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    """A random spanning tree plus random extra edges, so always connected."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(0, v - 1)), v))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    for p in pairs:
        if p not in edges and draw(st.booleans()):
            edges.add(p)
    return graph_from_edges(n, sorted(edges))


def permutations(n):
    return st.permutations(list(range(n)))
