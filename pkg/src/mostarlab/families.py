"""Constructors for the named graph families.

Every constructor validates its parameters and returns a connected graph
of exactly the requested order.  Measured invariants of the output (cut
edges, cyclomatic number, Mostar index) are never assumed here; callers
compute them through :mod:`mostarlab.graph` and :mod:`mostarlab.mostar`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DegenerateFamily, OutOfRange
from .graph import Graph, graph_from_edges


def _clique_edges(vertices):
    return list(combinations(vertices, 2))


def complete_with_pendants(n: int, k: int) -> Graph:
    """Clique on ``0..n-k-1`` with leaves ``n-k..n-1`` hung on hub vertex 0."""
    if n < 2 or not 1 <= k <= n - 1:
        raise OutOfRange(f"need n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")
    if n - k == 2:
        raise DegenerateFamily(
            f"n-k = 2: the clique edge becomes a pendant edge and the graph has {n - 1} cut edges, not {k}"
        )
    edges = _clique_edges(range(n - k))
    edges += [(0, leaf) for leaf in range(n - k, n)]
    return graph_from_edges(n, edges)


def balanced_bridge_path(n: int, k: int) -> Graph:
    """Path ``0..k`` with the other ``n-k-1`` vertices forming a clique joined to vertex ``k // 2``.

    The middle path vertex and the extra vertices together induce a
    complete graph on ``n-k`` vertices.
    """
    if n < 2 or not 1 <= k <= n - 1:
        raise OutOfRange(f"need n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")
    if n - k - 1 == 1:
        raise DegenerateFamily(
            f"n-k-1 = 1: the single extra vertex is a leaf, giving {k + 1} cut edges instead of {k}"
        )
    mid = k // 2
    edges = [(i, i + 1) for i in range(k)]
    edges += _clique_edges([mid, *range(k + 1, n)])
    return graph_from_edges(n, edges)


def hub_triangle_graph(n: int, k: int, mu_extra: int) -> Graph:
    """``complete_with_pendants(n - 2*mu_extra, k)`` plus ``mu_extra`` triangles sharing the hub.

    The triangles take their vertices out of the order budget, so the
    result still has exactly ``n`` vertices.
    """
    if n < 2 or k < 1 or mu_extra < 0:
        raise OutOfRange(f"need n >= 2, k >= 1, mu_extra >= 0, got ({n}, {k}, {mu_extra})")
    core = n - 2 * mu_extra
    if not (core - k >= 3 or core - k == 1):
        raise OutOfRange(
            f"n - k - 2*mu_extra = {core - k}; the hub clique needs 1 or at least 3 vertices"
        )
    base = complete_with_pendants(core, k)
    edges = [tuple(e) for e in base.edges()]
    for i in range(mu_extra):
        a, b = core + 2 * i, core + 2 * i + 1
        edges += [(0, a), (0, b), (a, b)]
    return graph_from_edges(n, edges)


def path(n: int) -> Graph:
    if n < 1:
        raise OutOfRange("path needs n >= 1")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise OutOfRange("cycle needs n >= 3")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise OutOfRange("complete graph needs n >= 1")
    return graph_from_edges(n, _clique_edges(range(n)))


def star(n: int) -> Graph:
    """``K_{1,n-1}`` centred on vertex 0."""
    if n < 1:
        raise OutOfRange("star needs n >= 1")
    return graph_from_edges(n, [(0, i) for i in range(1, n)])


FAMILIES = {
    "complete_with_pendants": (complete_with_pendants, ("n", "k")),
    "balanced_bridge_path": (balanced_bridge_path, ("n", "k")),
    "hub_triangle": (hub_triangle_graph, ("n", "k", "mu")),
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
    "complete": (complete, ("n",)),
    "star": (star, ("n",)),
}
_ALIASES = {"hub_triangle_graph": "hub_triangle"}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    k: int | None = None
    mu: int | None = None

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``family=name,n=6,k=2,mu=1``."""
        fields = {}
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            key, sep, value = part.partition("=")
            if not sep:
                raise ValueError(f"expected key=value, got {part!r}")
            fields[key.strip()] = value.strip()
        name = fields.pop("family", None)
        if name is None:
            raise ValueError("missing family=<name>")
        name = _ALIASES.get(name, name)
        if name not in FAMILIES:
            raise ValueError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}")
        unknown = set(fields) - {"n", "k", "mu"}
        if unknown:
            raise ValueError(f"unknown parameters {sorted(unknown)}")
        ints = {key: int(v) for key, v in fields.items()}
        return cls(name, **ints)

    def build(self) -> Graph:
        ctor, params = FAMILIES[self.family]
        args = []
        for p in params:
            value = getattr(self, p)
            if value is None:
                if p == "mu":
                    value = 0
                else:
                    raise ValueError(f"family {self.family} requires {p}=")
            args.append(value)
        return ctor(*args)
