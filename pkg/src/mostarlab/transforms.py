"""Graph transformations whose effect on the Mostar index is under test."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidEdge, InvalidMove, NotABridge, NotPendant, OutOfRange, PendantBridge
from .graph import Edge, Graph, bridges
from .mostar import mostar_index


@dataclass(frozen=True)
class TransformOutcome:
    before: Graph
    after: Graph
    mo_before: int
    mo_after: int
    cut_edges_before: int
    cut_edges_after: int

    @property
    def delta(self) -> int:
        return self.mo_after - self.mo_before


def outcome(before: Graph, after: Graph) -> TransformOutcome:
    return TransformOutcome(
        before,
        after,
        mostar_index(before),
        mostar_index(after),
        len(bridges(before)),
        len(bridges(after)),
    )


def contract_bridge_append_leaf(g: Graph, e) -> Graph:
    """Contract the non-pendant bridge ``e`` and hang a new leaf on the merged vertex.

    The merged vertex keeps the lower endpoint index; the freed higher
    index becomes the new leaf, so the order is unchanged.
    """
    e = Edge.of(*e)
    if e not in bridges(g):
        raise NotABridge(f"{tuple(e)} is not a bridge")
    if g.degree(e.u) < 2 or g.degree(e.v) < 2:
        raise PendantBridge(f"{tuple(e)} is a pendant edge")
    keep, drop = e
    rows = list(g.rows)
    moved = rows[drop] & ~(1 << keep)
    for w in range(g.n):
        if moved >> w & 1:
            rows[w] = rows[w] & ~(1 << drop) | 1 << keep
    rows[keep] |= moved
    rows[drop] = 1 << keep
    return Graph(g.n, rows)


def move_pendant(g: Graph, p: int, x: int) -> Graph:
    """Detach leaf ``p`` from its neighbour and attach it to ``x``."""
    if not (0 <= p < g.n and 0 <= x < g.n):
        raise OutOfRange(f"vertices ({p}, {x}) outside 0..{g.n - 1}")
    if g.degree(p) != 1:
        raise NotPendant(f"vertex {p} has degree {g.degree(p)}")
    (y,) = g.neighbors(p)
    if x == y:
        raise InvalidMove(f"leaf {p} is already attached to {x}")
    if x == p:
        raise InvalidEdge("cannot attach a leaf to itself")
    return g.without_edge(p, y).with_edge(p, x)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise OutOfRange(f"vertices ({u}, {v}) outside 0..{g.n - 1}")
    if u == v:
        raise InvalidEdge(f"self-loop at vertex {u}")
    if g.has_edge(u, v):
        raise InvalidEdge(f"({u}, {v}) is already an edge")
    return g.with_edge(u, v)
