"""Per-edge balance counts and the Mostar index."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotABridge, NotAnEdge, NotConnected
from .graph import Edge, Graph, bridges, component_of, distances_from, is_connected


@dataclass(frozen=True)
class EdgeContribution:
    edge: Edge
    n_u: int
    n_v: int
    equidistant: int

    @property
    def imbalance(self) -> int:
        return abs(self.n_u - self.n_v)


@dataclass(frozen=True)
class BridgeBalance:
    edge: Edge
    smaller_side: int
    contribution: int


def _split(e: Edge, du: list, dv: list) -> EdgeContribution:
    n_u = n_v = 0
    for a, b in zip(du, dv):
        if a < b:
            n_u += 1
        elif b < a:
            n_v += 1
    return EdgeContribution(e, n_u, n_v, len(du) - n_u - n_v)


def _as_edge(g: Graph, e) -> Edge:
    e = Edge.of(*e)
    if e.v >= g.n or not g.has_edge(e.u, e.v):
        raise NotAnEdge(f"{tuple(e)} is not an edge")
    return e


def edge_contribution(g: Graph, e) -> EdgeContribution:
    """Count vertices strictly closer to each endpoint of ``e`` (two BFS passes)."""
    e = _as_edge(g, e)
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    return _split(e, distances_from(g, e.u), distances_from(g, e.v))


def mostar_index(g: Graph) -> int:
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    total = 0
    for e in g.edges():
        c = _split(e, distances_from(g, e.u), distances_from(g, e.v))
        total += abs(c.n_u - c.n_v)
    return total


def distance_matrix(g: Graph) -> list[list]:
    return [distances_from(g, s) for s in range(g.n)]


def contribution_profile(g: Graph) -> list[EdgeContribution]:
    """One record per edge in ``(u, v)`` order, computed from the all-pairs matrix.

    The sum of imbalances equals :func:`mostar_index`, which walks a
    different path (fresh BFS per edge), so the two double as cross-checks.
    """
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    dist = distance_matrix(g)
    return [_split(e, dist[e.u], dist[e.v]) for e in g.edges()]


def bridge_balance(g: Graph, e) -> BridgeBalance:
    e = _as_edge(g, e)
    if e not in bridges(g):
        raise NotABridge(f"{tuple(e)} is not a bridge")
    side = component_of(g, e.u, e).bit_count()
    s = min(side, g.n - side)
    return BridgeBalance(e, s, g.n - 2 * s)
