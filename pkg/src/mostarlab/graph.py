"""Immutable small graphs stored as neighbour bit rows.

Vertices are the dense range ``0..n-1`` with ``n <= 64``, so every
neighbourhood fits in one machine word.  All operations are read-only;
anything that "changes" a graph returns a new one.
"""

from __future__ import annotations

import functools
from collections import deque
from typing import Iterable, NamedTuple

from .errors import Graph6Error, InvalidEdge, NotConnected, OutOfRange

MAX_ORDER = 64


@functools.total_ordering
class _Infinite:
    """Distance to an unreachable vertex.  Compares greater than every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash("INFINITE")


INFINITE = _Infinite()


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise InvalidEdge(f"self-loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``rows[v]`` is an int whose bit ``w`` is set iff ``vw`` is an edge.
    """

    __slots__ = ("n", "rows", "m")

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(int(r) for r in rows)
        if not 1 <= n <= MAX_ORDER:
            raise OutOfRange(f"order {n} outside 1..{MAX_ORDER}")
        if len(rows) != n:
            raise InvalidEdge(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full:
                raise OutOfRange(f"row {v} references a vertex >= {n}")
            if r >> v & 1:
                raise InvalidEdge(f"self-loop at vertex {v}")
            w = r
            while w:
                low = w & -w
                if not rows[low.bit_length() - 1] >> v & 1:
                    raise InvalidEdge("adjacency is not symmetric")
                w ^= low
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "m", sum(r.bit_count() for r in rows) // 2)

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        """Build from rows already known to be symmetric and loop-free."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "m", sum(r.bit_count() for r in rows) // 2)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={[tuple(e) for e in self.edges()]})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def edges(self) -> list[Edge]:
        """All edges as ``Edge(u, v)`` with ``u < v``, in lexicographic order."""
        out = []
        for u, r in enumerate(self.rows):
            for v in _bits(r >> (u + 1)):
                out.append(Edge(u, u + 1 + v))
        return out

    def with_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def permuted(self, perm: list[int]) -> "Graph":
        """Relabel vertex ``v`` as ``perm[v]``."""
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, rows)


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise OutOfRange(f"order {n} outside 1..{MAX_ORDER}")
    rows = [0] * n
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n):
            raise OutOfRange(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
        if a == b:
            raise InvalidEdge(f"self-loop at vertex {a}")
        if rows[a] >> b & 1:
            raise InvalidEdge(f"duplicate edge ({a}, {b})")
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(n, rows)


def _check_vertex(g: Graph, s: int) -> None:
    if not 0 <= s < g.n:
        raise OutOfRange(f"vertex {s} outside 0..{g.n - 1}")


def distances_from(g: Graph, s: int) -> list:
    """BFS hop counts from ``s``; unreachable vertices get ``INFINITE``."""
    _check_vertex(g, s)
    dist: list = [INFINITE] * g.n
    dist[s] = 0
    seen = 1 << s
    frontier = 1 << s
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        nxt &= ~seen
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def _reach(g: Graph, s: int, skip: tuple[int, int] | None = None) -> int:
    """Bit set of vertices reachable from ``s``, optionally ignoring one edge."""
    seen = frontier = 1 << s
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            row = g.rows[v]
            if skip is not None:
                if v == skip[0]:
                    row &= ~(1 << skip[1])
                elif v == skip[1]:
                    row &= ~(1 << skip[0])
            nxt |= row
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return _reach(g, 0) == (1 << g.n) - 1


def component_of(g: Graph, s: int, removed: tuple[int, int] | None = None) -> int:
    """Vertex bit set of the component containing ``s`` after deleting ``removed``."""
    _check_vertex(g, s)
    return _reach(g, s, removed)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise NotConnected("graph is not connected")


def bridges(g: Graph) -> set[Edge]:
    """Cut edges, found with a single lowpoint depth-first traversal."""
    _require_connected(g)
    order = [-1] * g.n
    low = [0] * g.n
    found: set[Edge] = set()
    counter = 0
    # iterative DFS: stack of (vertex, parent, remaining neighbours)
    order[0] = low[0] = counter
    stack = [(0, -1, iter(g.neighbors(0)))]
    while stack:
        v, parent, it = stack[-1]
        for w in it:
            if order[w] == -1:
                counter += 1
                order[w] = low[w] = counter
                stack.append((w, v, iter(g.neighbors(w))))
                break
            if w != parent:
                low[v] = min(low[v], order[w])
        else:
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > order[parent]:
                    found.add(Edge.of(parent, v))
    return found


def cyclomatic_number(g: Graph) -> int:
    _require_connected(g)
    return g.m - g.n + 1


def pendant_vertices(g: Graph) -> set[int]:
    return {v for v, r in enumerate(g.rows) if r.bit_count() == 1}


# --- graph6 -----------------------------------------------------------------

_HEADER = ">>graph6<<"


def pair_index(i: int, j: int) -> int:
    """Position of pair ``(i, j)``, ``i < j``, in graph6 column order."""
    return j * (j - 1) // 2 + i


@functools.lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(1, n) for i in range(j))


def to_mask(g: Graph) -> int:
    """Upper-triangle adjacency bits; bit ``pair_index(i, j)`` set iff ``ij`` is an edge."""
    rows = g.rows
    mask = 0
    for b, (i, j) in enumerate(_pairs(g.n)):
        if rows[i] >> j & 1:
            mask |= 1 << b
    return mask


def from_mask(n: int, mask: int) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise OutOfRange(f"order {n} outside 1..{MAX_ORDER}")
    if mask >> (n * (n - 1) // 2):
        raise OutOfRange(f"mask has bits beyond the {n * (n - 1) // 2} pairs of order {n}")
    rows = [0] * n
    for i, j in _pairs(n):
        if mask & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        mask >>= 1
    return Graph._trusted(n, tuple(rows))


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    n = g.n
    rows = g.rows
    nbits = n * (n - 1) // 2
    # bit stream with pair (0, 1) most significant
    value = 0
    for i, j in _pairs(n):
        value = value << 1 | (rows[i] >> j & 1)
    pad = -nbits % 6
    value <<= pad
    nbytes = (nbits + pad) // 6
    body = "".join(chr(63 + (value >> 6 * (nbytes - 1 - t) & 63)) for t in range(nbytes))
    return _size_prefix(n) + body


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"byte outside graph6 range in {text!r}")
    if codes[0] == 63:
        if len(codes) < 4 or codes[1] == 63:
            raise Graph6Error("orders above 258047 are not supported")
        n = codes[1] << 12 | codes[2] << 6 | codes[3]
        body = codes[4:]
    else:
        n = codes[0]
        body = codes[1:]
    if not 1 <= n <= MAX_ORDER:
        raise Graph6Error(f"order {n} outside 1..{MAX_ORDER}")
    nbits = n * (n - 1) // 2
    pad = -nbits % 6
    if len(body) != (nbits + pad) // 6:
        raise Graph6Error(f"expected {(nbits + pad) // 6} data bytes for n={n}, got {len(body)}")
    value = 0
    for c in body:
        value = value << 6 | c
    if value & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    value >>= pad
    rows = [0] * n
    for i, j in reversed(_pairs(n)):
        if value & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        value >>= 1
    return Graph._trusted(n, tuple(rows))
