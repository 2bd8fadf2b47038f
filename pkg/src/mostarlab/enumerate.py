"""Exhaustive labeled enumeration, class filtering and extremal search.

Graphs are enumerated as upper-triangle masks (see :mod:`mostarlab._kernels`).
The mask space is split into contiguous ranges by its high-order bits;
ranges are processed independently, possibly in worker processes, and the
partial results are merged in range order, so output never depends on the
worker count.
"""

from __future__ import annotations

import functools
import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import _kernels as K
from .errors import EmptyClass, OutOfRange
from .graph import Graph, encode_graph6, from_mask, to_mask

DEFAULT_MAX_N = 7
HARD_MAX_N = 8
ENV_MAX_N = "MOSTAR_MAX_N"


def enumeration_cap(allow_n8: bool = False) -> int:
    """Largest order exhaustive routines accept (7 unless raised to 8)."""
    if allow_n8:
        return HARD_MAX_N
    raw = os.environ.get(ENV_MAX_N)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise OutOfRange(f"{ENV_MAX_N}={raw!r} is not an integer") from None
        if not 1 <= value <= HARD_MAX_N:
            raise OutOfRange(f"{ENV_MAX_N}={value} outside 1..{HARD_MAX_N}")
        return max(value, DEFAULT_MAX_N)
    return DEFAULT_MAX_N


def check_order(n: int, allow_n8: bool = False) -> None:
    cap = enumeration_cap(allow_n8)
    if not 1 <= n <= cap:
        hint = f" (set {ENV_MAX_N}=8 to allow n=8)" if n == HARD_MAX_N else ""
        raise OutOfRange(f"order {n} outside the enumeration cap 1..{cap}{hint}")


def default_workers() -> int:
    return os.cpu_count() or 1


# --- parallel plumbing ------------------------------------------------------


def mask_ranges(n: int, chunks_log2: int = 4) -> list[tuple[int, int]]:
    """Split ``[0, 2**P)`` into ranges sharing their top ``chunks_log2`` bits."""
    p = n * (n - 1) // 2
    c = min(p, chunks_log2)
    width = 1 << (p - c)
    return [(i * width, (i + 1) * width) for i in range(1 << c)]


def _call(name: str, args: tuple, lo: int, hi: int):
    result = getattr(K, name)(*args, lo, hi)
    if isinstance(result, tuple):
        return tuple(np.asarray(r) for r in result)
    if isinstance(result, (int, np.integer)):
        return int(result)
    return np.asarray(result, dtype=np.int64)


def run_ranges(name: str, args: tuple, n: int, workers: int | None = None) -> list:
    """Run kernel ``name(*args, lo, hi)`` over every mask range, results in range order."""
    workers = default_workers() if workers is None else workers
    ranges = mask_ranges(n)
    if workers <= 1:
        return [_call(name, args, lo, hi) for lo, hi in ranges]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_call, name, args, lo, hi) for lo, hi in ranges]
        return [f.result() for f in futures]


# --- data types ---------------------------------------------------------------


@dataclass(frozen=True)
class GraphClassFilter:
    n: int
    k: int | None = None
    mu: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise OutOfRange(f"order must be >= 1, got {self.n}")
        if self.k is not None and not 0 <= self.k <= max(self.n - 1, 0):
            raise OutOfRange(f"cut-edge count {self.k} outside 0..{self.n - 1}")
        if self.mu is not None and self.mu < 0:
            raise OutOfRange(f"cyclomatic number must be >= 0, got {self.mu}")

    @property
    def edge_count(self) -> int | None:
        """Edge count forced by the cyclomatic number, if set."""
        return None if self.mu is None else self.n - 1 + self.mu

    def matches(self, k: int, mu: int) -> bool:
        return (self.k is None or self.k == k) and (self.mu is None or self.mu == mu)


@dataclass(frozen=True)
class ExtremalResult:
    objective: str
    value: int
    witnesses: tuple[str, ...]
    class_size_labeled: int
    witnesses_labeled: int = 0


@dataclass(frozen=True)
class ClassTable:
    """Labeled counts and Mo extremes per (cut edges, cyclomatic number) cell."""

    n: int
    count: np.ndarray = field(repr=False)
    best: np.ndarray = field(repr=False)
    worst: np.ndarray = field(repr=False)

    def cell(self, flt: GraphClassFilter) -> tuple[int, int, int]:
        """(labeled count, max Mo, min Mo) over all cells matching ``flt``; extremes are -1 when empty."""
        total, hi, lo = 0, -1, -1
        kmax, mumax = self.count.shape
        for k in range(kmax):
            for mu in range(mumax):
                c = int(self.count[k, mu])
                if c == 0 or not flt.matches(k, mu):
                    continue
                total += c
                hi = max(hi, int(self.best[k, mu]))
                lo = int(self.worst[k, mu]) if lo < 0 else min(lo, int(self.worst[k, mu]))
        return total, hi, lo

    def nonempty(self) -> list[tuple[int, int]]:
        return [(int(k), int(mu)) for k, mu in zip(*np.nonzero(self.count))]


# --- enumeration ----------------------------------------------------------------


def enumerate_connected(n: int, visit: Callable[[Graph], None] | None = None,
                        workers: int | None = None, allow_n8: bool = False) -> int:
    """Count (and optionally visit) every labeled connected graph on ``n`` vertices."""
    check_order(n, allow_n8)
    if visit is None:
        return sum(run_ranges("count_connected", (n,), n, workers))
    total = 0
    for masks in run_ranges("connected_masks", (n,), n, workers):
        for mask in masks:
            visit(from_mask(n, int(mask)))
            total += 1
    return total


@functools.lru_cache(maxsize=32)
def _class_table(n: int, workers: int) -> ClassTable:
    parts = run_ranges("scan_classes", (n,), n, workers)
    count = sum(p[0] for p in parts)
    best = np.max(np.stack([p[1] for p in parts]), axis=0)
    worst_stack = np.stack([np.where(p[2] < 0, np.iinfo(np.int64).max, p[2]) for p in parts])
    worst = np.min(worst_stack, axis=0)
    worst[worst == np.iinfo(np.int64).max] = -1
    return ClassTable(n, count, best, worst)


def class_table(n: int, workers: int | None = None, allow_n8: bool = False) -> ClassTable:
    check_order(n, allow_n8)
    return _class_table(n, default_workers() if workers is None else workers)


def enumerate_class(flt: GraphClassFilter, visit: Callable[[Graph], None] | None = None,
                    workers: int | None = None, allow_n8: bool = False) -> int:
    """Count (and optionally visit) labeled connected graphs in the class ``flt``."""
    check_order(flt.n, allow_n8)
    if visit is None:
        return class_table(flt.n, workers, allow_n8).cell(flt)[0]
    total = 0
    for masks in run_ranges("connected_masks", (flt.n,), flt.n, workers):
        for mask in masks:
            _, k, mu, _ = K.classify(flt.n, int(mask))
            if flt.matches(k, mu):
                visit(from_mask(flt.n, int(mask)))
                total += 1
    return total


def collect_optima(n: int, target_max: np.ndarray, target_min: np.ndarray,
                   workers: int | None = None) -> np.ndarray:
    """Rows ``(mask, k, mu, flag)`` of graphs hitting their cell's targets, in mask order."""
    parts = run_ranges("collect_attaining", (n, target_max, target_min), n, workers)
    flat = np.concatenate([np.asarray(p, dtype=np.int64) for p in parts]) if parts else np.empty(0, np.int64)
    return flat.reshape(-1, 4)


def extremal_search(flt: GraphClassFilter, objective: str = "max",
                    workers: int | None = None, allow_n8: bool = False) -> ExtremalResult:
    """Exact optimum of Mo over a class, with witnesses up to isomorphism.

    Raises :class:`EmptyClass` when no labeled graph matches ``flt``.
    """
    objective = objective.lower()
    if objective not in ("max", "min"):
        raise ValueError(f"objective must be max or min, got {objective!r}")
    table = class_table(flt.n, workers, allow_n8)
    size, hi, lo = table.cell(flt)
    if size == 0:
        raise EmptyClass(f"no connected graph with n={flt.n}, k={flt.k}, mu={flt.mu}")
    value = hi if objective == "max" else lo
    target = np.full(table.count.shape, -1, np.int64)
    for k, mu in table.nonempty():
        if flt.matches(k, mu):
            target[k, mu] = value
    none = np.full(table.count.shape, -1, np.int64)
    if objective == "max":
        rows = collect_optima(flt.n, target, none, workers)
    else:
        rows = collect_optima(flt.n, none, target, workers)
    witnesses = dedupe(flt.n, rows[:, 0])
    return ExtremalResult(objective.upper(), value, witnesses, size, len(rows))


# --- canonical forms ---------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)


def _key_to_graph6(n: int, key: int) -> bytes:
    p = n * (n - 1) // 2
    pad = -p % 6
    key <<= pad
    nbytes = (p + pad) // 6
    body = bytes(63 + (key >> (6 * (nbytes - 1 - i)) & 63) for i in range(nbytes))
    return bytes([63 + n]) + body


def canonical_form(g: Graph) -> bytes:
    """Minimum graph6 encoding over all vertex relabelings."""
    if g.n > HARD_MAX_N:
        raise OutOfRange(f"canonical_form supports n <= {HARD_MAX_N}, got {g.n}")
    if g.n == 1:
        return encode_graph6(g).encode()
    _, key = K.orbit(g.n, to_mask(g), _perms(g.n))
    return _key_to_graph6(g.n, int(key))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


def dedupe(n: int, masks) -> tuple[str, ...]:
    """Canonical graph6 strings of the isomorphism classes among ``masks``, sorted."""
    pending = {int(m) for m in masks}
    if n == 1:
        return ("@",) if pending else ()
    perms = _perms(n)
    forms = []
    while pending:
        mask = min(pending)
        orbit_masks, key = K.orbit(n, mask, perms)
        pending.difference_update(int(x) for x in orbit_masks)
        forms.append(_key_to_graph6(n, int(key)).decode())
    return tuple(sorted(forms))
