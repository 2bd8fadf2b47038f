"""Claim-verification harness.

Each lemma and theorem about the Mostar index is checked against
exhaustive ground truth on small connected graphs.  The outcome is a
:class:`ClaimVerdict` carrying exact violation counts and replayable
counterexamples; a refuted claim is a normal result, not an error.

Fast sweeps run through the compiled kernels.  A deterministic sample of
the enumerated graphs (``sample_per_mille``, default 10, i.e. 1%) is
recomputed through the pure-Python graph, mostar and transforms modules;
any disagreement raises :class:`SoundnessError`.
"""

from __future__ import annotations

import functools
import json
import random
from dataclasses import asdict, dataclass, field
from enum import Enum
from itertools import combinations

import numpy as np

from . import __version__
from . import _kernels as K
from .bounds import cyclomatic_bound, max_bound, min_bound
from .enumerate import (canonical_form, check_order, class_table, collect_optima, dedupe, default_workers,
                        run_ranges)
from .errors import MostarLabError
from .families import balanced_bridge_path, complete_with_pendants, hub_triangle_graph, path
from .graph import (Graph, bridges, cyclomatic_number, decode_graph6, encode_graph6, from_mask,
                    is_connected, pendant_vertices)
from .mostar import bridge_balance, contribution_profile, edge_contribution, mostar_index
from .transforms import add_edge, contract_bridge_append_leaf, move_pendant


class ClaimId(str, Enum):
    L1_PENDANT = "L1_PENDANT"
    L2_NONPENDANT = "L2_NONPENDANT"
    L3_CONTRACT = "L3_CONTRACT"
    L4_MOVE = "L4_MOVE"
    L5_CLIQUE = "L5_CLIQUE"
    L6_ADDEDGE = "L6_ADDEDGE"
    T1_MAX = "T1_MAX"
    T2_MIN = "T2_MIN"
    T3_CYCLOMATIC = "T3_CYCLOMATIC"


ALL_CLAIMS = tuple(ClaimId)


class Status(str, Enum):
    HOLDS_IN_SCOPE = "HOLDS_IN_SCOPE"
    REFUTED = "REFUTED"
    PARTIAL = "PARTIAL"


class SoundnessError(MostarLabError):
    """The compiled sweep and the pure-Python recomputation disagree."""


@dataclass
class CounterexampleRecord:
    kind: str
    graphs: list[str]
    n: int
    k: int | None
    mu: int | None
    observed: dict
    claimed: str
    note: str
    subclaim: str = ""


@dataclass
class SubclaimVerdict:
    name: str
    status: Status
    checked: int
    violations: int


@dataclass
class ClaimVerdict:
    claim: ClaimId
    scope: dict
    status: Status
    counterexamples: list[CounterexampleRecord] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    subclaims: list[SubclaimVerdict] = field(default_factory=list)
    cells: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def _g6(g: Graph) -> str:
    return encode_graph6(g)


def _mask_g6(n: int, mask: int) -> str:
    return encode_graph6(from_mask(n, int(mask)))


# --- soundness sampling -------------------------------------------------------------


def _sample_masks(n: int, total: int, per_mille: int, salt: str) -> list[int]:
    """Deterministic pseudo-random sample of connected masks (at least one when total > 0)."""
    if per_mille <= 0 or total == 0:
        return []
    want = max(1, -(-total * per_mille // 1000))
    rng = random.Random(f"{salt}:{n}")
    p = n * (n - 1) // 2
    seen, out = set(), []
    while len(out) < want:
        mask = rng.getrandbits(p) if p else 0
        if mask in seen:
            continue
        seen.add(mask)
        if is_connected(from_mask(n, mask)):
            out.append(mask)
    return sorted(out)


def _edge_law_vector(g: Graph) -> list[int]:
    n = g.n
    out = [0] * K.EL_SIZE
    out[K.EL_GRAPHS] = 1
    deg = g.degrees()
    cut = bridges(g)
    for c in contribution_profile(g):
        u, v = c.edge
        out[K.EL_EDGES] += 1
        if c.n_u < 1 or c.n_v < 1:
            out[K.EL_BALANCE_BAD] += 1
        if (deg[u] == 1) != (deg[v] == 1):
            out[K.EL_PENDANT] += 1
            out[K.EL_L1_BAD] += c.imbalance != n - 2
        if deg[u] >= 2 and deg[v] >= 2:
            out[K.EL_NONPENDANT] += 1
            out[K.EL_L2_BAD] += c.imbalance > n - 3
        if c.edge in cut:
            out[K.EL_BRIDGES] += 1
            out[K.EL_BRIDGE_BAD] += c.imbalance != bridge_balance(g, c.edge).contribution
            out[K.EL_BRIDGE_EQ_BAD] += c.equidistant != 0
    return out


def transform_sites(g: Graph, claim: ClaimId) -> list[tuple[tuple[int, int], Graph]]:
    """Every ``(site, transformed graph)`` pair the lemma's hypotheses allow."""
    out = []
    if claim is ClaimId.L6_ADDEDGE:
        for u, v in combinations(range(g.n), 2):
            if not g.has_edge(u, v):
                out.append(((u, v), add_edge(g, u, v)))
    elif claim is ClaimId.L3_CONTRACT:
        for e in sorted(bridges(g)):
            if g.degree(e.u) >= 2 and g.degree(e.v) >= 2:
                out.append((tuple(e), contract_bridge_append_leaf(g, e)))
    elif claim is ClaimId.L4_MOVE:
        for p in sorted(pendant_vertices(g)):
            (y,) = g.neighbors(p)
            dy = g.degree(y)
            if dy < 2:
                continue
            for x in range(g.n):
                if x not in (p, y) and g.degree(x) >= dy:
                    out.append(((p, x), move_pendant(g, p, x)))
    else:
        raise ValueError(f"{claim} is not a transform lemma")
    return out


def _transform_vector(g: Graph, claim: ClaimId) -> list[int]:
    out = [0] * K.TR_SIZE
    mo = mostar_index(g)
    cut = len(bridges(g))
    for _, after in transform_sites(g, claim):
        delta = mostar_index(after) - mo
        out[K.TR_SITES] += 1
        out[K.TR_UP if delta > 0 else K.TR_TIE if delta == 0 else K.TR_DOWN] += 1
        if claim is not ClaimId.L6_ADDEDGE and len(bridges(after)) != cut:
            out[K.TR_CUT_CHANGE] += 1
        out[K.TR_DISCONNECTED] += not is_connected(after)
    return out


def _class_vector(g: Graph) -> tuple[int, int, int]:
    return len(bridges(g)), cyclomatic_number(g), mostar_index(g)


def _soundness(n: int, total: int, per_mille: int, salt: str, kernel, python) -> int:
    masks = _sample_masks(n, total, per_mille, salt)
    for mask in masks:
        fast = kernel(mask)
        slow = python(from_mask(n, mask))
        if list(fast) != list(slow):
            raise SoundnessError(
                f"{salt}: kernel {list(fast)} != python {list(slow)} for {_mask_g6(n, mask)}"
            )
    return len(masks)


def _connected_total(n: int, workers: int) -> int:
    return int(class_table(n, workers).count.sum())


# --- edge laws (L1, L2 and the bridge identities) ------------------------------------

EDGE_LAWS = ("pendant_law", "nonpendant_bound", "bridge_identity", "bridge_equidistant", "balance_identity")


@dataclass
class EdgeLawAudit:
    """Exhaustive per-order tallies of every per-edge law."""

    n_max: int
    per_n: dict[int, dict[str, int]]
    first: dict[int, dict[str, tuple[int, int]]]
    sampled: int

    def violations(self, law: str) -> int:
        return sum(row[law + "_violations"] for row in self.per_n.values())

    def checked(self, law: str) -> int:
        key = {"pendant_law": "pendant_edges", "nonpendant_bound": "nonpendant_edges",
               "bridge_identity": "bridges", "bridge_equidistant": "bridges",
               "balance_identity": "edges"}[law]
        return sum(row[key] for row in self.per_n.values())


@functools.lru_cache(maxsize=16)
def _edge_law_audit(n_max: int, workers: int, per_mille: int) -> EdgeLawAudit:
    per_n, first, sampled = {}, {}, 0
    for n in range(1, n_max + 1):
        parts = run_ranges("scan_edge_laws", (n,), n, workers)
        out = sum(p[0] for p in parts)
        fm = np.full(5, -1, np.int64)
        fp = np.full(5, -1, np.int64)
        for _, pm, pp in parts:
            for law in range(5):
                if fm[law] < 0 and pm[law] >= 0:
                    fm[law], fp[law] = pm[law], pp[law]
        per_n[n] = {
            "graphs": int(out[K.EL_GRAPHS]),
            "edges": int(out[K.EL_EDGES]),
            "pendant_edges": int(out[K.EL_PENDANT]),
            "nonpendant_edges": int(out[K.EL_NONPENDANT]),
            "bridges": int(out[K.EL_BRIDGES]),
            "pendant_law_violations": int(out[K.EL_L1_BAD]),
            "nonpendant_bound_violations": int(out[K.EL_L2_BAD]),
            "bridge_identity_violations": int(out[K.EL_BRIDGE_BAD]),
            "bridge_equidistant_violations": int(out[K.EL_BRIDGE_EQ_BAD]),
            "balance_identity_violations": int(out[K.EL_BALANCE_BAD]),
        }
        first[n] = {EDGE_LAWS[i]: (int(fm[i]), int(fp[i])) for i in range(5) if fm[i] >= 0}
        sampled += _soundness(n, int(out[K.EL_GRAPHS]), per_mille, "edge_laws",
                              lambda mask, n=n: K.edge_laws_one(n, mask), _edge_law_vector)
    return EdgeLawAudit(n_max, per_n, first, sampled)


def edge_law_audit(n_max: int, workers: int | None = None, sample_per_mille: int = 10,
                   allow_n8: bool = False) -> EdgeLawAudit:
    check_order(n_max, allow_n8)
    return _edge_law_audit(n_max, default_workers() if workers is None else workers, sample_per_mille)


def _edge_record(n: int, mask: int, pair: int, law: str, claimed: str) -> CounterexampleRecord:
    g = from_mask(n, mask)
    u, v = int(K.PAIR_I[pair]), int(K.PAIR_J[pair])
    c = edge_contribution(g, (u, v))
    return CounterexampleRecord(
        kind="edge", graphs=[_g6(g)], n=n, k=len(bridges(g)), mu=cyclomatic_number(g),
        observed={"mo": [mostar_index(g)], "edge": [u, v], "n_u": c.n_u, "n_v": c.n_v,
                  "equidistant": c.equidistant, "imbalance": c.imbalance,
                  "degrees": [g.degree(u), g.degree(v)]},
        claimed=claimed, note=f"{law} fails on edge ({u}, {v})",
    )


def verify_edge_bound_lemmas(n_max: int, workers: int | None = None, sample_per_mille: int = 10,
                             allow_n8: bool = False) -> list[ClaimVerdict]:
    """L1 (pendant edges have imbalance n-2) and L2 (other edges at most n-3)."""
    audit = edge_law_audit(n_max, workers, sample_per_mille, allow_n8)
    verdicts = []
    for claim, law, key, claimed in (
        (ClaimId.L1_PENDANT, "pendant_law", "pendant_edges", "|n_u - n_v| = n - 2 for a pendant edge"),
        (ClaimId.L2_NONPENDANT, "nonpendant_bound", "nonpendant_edges",
         "|n_u - n_v| <= n - 3 when both endpoint degrees are >= 2"),
    ):
        cells, records = [], []
        for n, row in audit.per_n.items():
            if row[key] == 0:
                continue
            cells.append({"n": n, "checked": row[key], "violations": row[law + "_violations"]})
            if law in audit.first[n]:
                mask, pair = audit.first[n][law]
                records.append(_edge_record(n, mask, pair, law, claimed))
        violations = audit.violations(law)
        status = Status.REFUTED if violations else Status.HOLDS_IN_SCOPE
        verdicts.append(ClaimVerdict(
            claim=claim,
            scope={"n_min": 1, "n_max": n_max, "graphs": "all labeled connected graphs"},
            status=status,
            counterexamples=records,
            stats={"cells_checked": len(cells), "edges_checked": audit.checked(law),
                   "violations": violations, "soundness_sampled_graphs": audit.sampled},
            cells=cells,
        ))
    return verdicts


# --- transformation lemmas -----------------------------------------------------------

_TRANSFORM_CODES = {ClaimId.L3_CONTRACT: K.L3, ClaimId.L4_MOVE: K.L4, ClaimId.L6_ADDEDGE: K.L6}
_TRANSFORM_CLAIMS = {
    ClaimId.L3_CONTRACT: "contracting a non-pendant bridge and appending a leaf gives Mo(G') > Mo(G) "
                         "with the same number of cut edges",
    ClaimId.L4_MOVE: "moving a leaf from y to x with d(x) >= d(y) >= 2 gives Mo(G') > Mo(G) "
                     "with the same number of cut edges",
    ClaimId.L6_ADDEDGE: "Mo(G + uv) > Mo(G) for every non-adjacent pair u, v",
}


def _transform_record(claim: ClaimId, n: int, row, what: str) -> CounterexampleRecord:
    before, after = from_mask(n, int(row[0])), from_mask(n, int(row[1]))
    mo = [mostar_index(before), mostar_index(after)]
    cuts = [len(bridges(before)), len(bridges(after))]
    site = [int(row[2]), int(row[3])]
    if what == "decrease":
        note = f"Mo drops {mo[0]} -> {mo[1]}"
    elif what == "tie":
        note = f"Mo unchanged at {mo[0]}; the claimed increase is strict"
    else:
        note = f"cut-edge count changes {cuts[0]} -> {cuts[1]}"
    return CounterexampleRecord(
        kind="transform", graphs=[_g6(before), _g6(after)], n=n, k=cuts[0],
        mu=cyclomatic_number(before),
        observed={"mo": mo, "delta": mo[1] - mo[0], "cut_edges": cuts, "site": site,
                  "transform": claim.value},
        claimed=_TRANSFORM_CLAIMS[claim], note=note,
        subclaim="cut_edges_preserved" if what == "cut_change" else "strict_increase",
    )


def verify_transform_lemma(claim: ClaimId | str, n_max: int, workers: int | None = None,
                           sample_per_mille: int = 10, allow_n8: bool = False) -> ClaimVerdict:
    """Apply the transform at every applicable site of every connected graph up to ``n_max``.

    Cells are (order, cut edges of the input graph).  Any decrease of Mo or
    change in cut-edge count refutes the lemma; ties alone give PARTIAL.
    """
    claim = ClaimId(claim)
    if claim not in _TRANSFORM_CODES:
        raise ValueError(f"{claim.value} is not a transform lemma")
    check_order(n_max, allow_n8)
    workers = default_workers() if workers is None else workers
    code = _TRANSFORM_CODES[claim]
    cells, records = [], []
    totals = np.zeros(K.TR_SIZE, np.int64)
    sampled = 0
    for n in range(2, n_max + 1):
        parts = run_ranges("scan_transform", (n, code), n, workers)
        out = sum(p[0] for p in parts)
        first = np.full((n, 3, 4), -1, np.int64)
        for _, pf in parts:
            for k in range(n):
                for slot in range(3):
                    if first[k, slot, 0] < 0 and pf[k, slot, 0] >= 0:
                        first[k, slot] = pf[k, slot]
        totals += out.sum(axis=0)
        for k in range(n):
            if out[k, K.TR_SITES] == 0:
                continue
            cells.append({
                "n": n, "k": k, "sites": int(out[k, K.TR_SITES]), "increases": int(out[k, K.TR_UP]),
                "ties": int(out[k, K.TR_TIE]), "decreases": int(out[k, K.TR_DOWN]),
                "cut_edge_changes": int(out[k, K.TR_CUT_CHANGE]),
                "disconnected_outputs": int(out[k, K.TR_DISCONNECTED]),
            })
            for slot, what in ((0, "decrease"), (1, "tie"), (2, "cut_change")):
                if first[k, slot, 0] >= 0:
                    records.append(_transform_record(claim, n, first[k, slot], what))
        sampled += _soundness(n, _connected_total(n, workers), sample_per_mille, claim.value,
                              lambda mask, n=n: K.transform_one(n, code, mask),
                              lambda g: _transform_vector(g, claim))
    down, tie, cut = int(totals[K.TR_DOWN]), int(totals[K.TR_TIE]), int(totals[K.TR_CUT_CHANGE])
    strict = Status.REFUTED if down else Status.PARTIAL if tie else Status.HOLDS_IN_SCOPE
    subclaims = [SubclaimVerdict("strict_increase", strict, int(totals[K.TR_SITES]), down + tie)]
    if claim is not ClaimId.L6_ADDEDGE:
        subclaims.append(SubclaimVerdict(
            "cut_edges_preserved", Status.REFUTED if cut else Status.HOLDS_IN_SCOPE,
            int(totals[K.TR_SITES]), cut))
    if down or cut:
        status = Status.REFUTED
    elif tie:
        status = Status.PARTIAL
    else:
        status = Status.HOLDS_IN_SCOPE
    notes = []
    if status is Status.PARTIAL:
        notes.append("Mo never decreases in scope, but some sites leave it unchanged")
    return ClaimVerdict(
        claim=claim,
        scope={"n_min": 2, "n_max": n_max, "graphs": "all labeled connected graphs, every applicable site"},
        status=status,
        counterexamples=records,
        stats={"cells_checked": len(cells), "sites": int(totals[K.TR_SITES]),
               "increases": int(totals[K.TR_UP]), "ties": tie, "decreases": down,
               "cut_edge_changes": cut, "violations": down + cut,
               "disconnected_outputs": int(totals[K.TR_DISCONNECTED]),
               "soundness_sampled_graphs": sampled},
        subclaims=subclaims,
        cells=cells,
        notes=notes,
    )


# --- extremal cells -----------------------------------------------------------------


@dataclass
class ExtremalCell:
    n: int
    k: int
    mu: int | None
    labeled: int
    max_value: int
    min_value: int
    max_witnesses: tuple[str, ...]
    min_witnesses: tuple[str, ...]


@functools.lru_cache(maxsize=64)
def _extremal_cells(n: int, by_mu: bool, workers: int, per_mille: int) -> dict:
    """Optimal Mo and deduplicated witnesses for every non-empty cell of order ``n``."""
    table = class_table(n, workers)
    tmax = np.full(table.count.shape, -1, np.int64)
    tmin = np.full(table.count.shape, -1, np.int64)
    kmax, mumax = table.count.shape
    info = {}
    for k in range(kmax):
        if by_mu:
            for mu in range(mumax):
                if table.count[k, mu]:
                    info[(k, mu)] = (int(table.count[k, mu]), int(table.best[k, mu]), int(table.worst[k, mu]))
                    tmax[k, mu], tmin[k, mu] = table.best[k, mu], table.worst[k, mu]
        else:
            live = table.count[k] > 0
            if live.any():
                hi = int(table.best[k][live].max())
                lo = int(table.worst[k][live].min())
                info[(k, None)] = (int(table.count[k].sum()), hi, lo)
                tmax[k, live], tmin[k, live] = hi, lo
    rows = collect_optima(n, tmax, tmin, workers)
    masks = {key: ([], []) for key in info}
    for mask, k, mu, flag in rows:
        key = (int(k), int(mu) if by_mu else None)
        if flag & 1:
            masks[key][0].append(int(mask))
        if flag & 2:
            masks[key][1].append(int(mask))
    cells = {}
    for key, (labeled, hi, lo) in sorted(info.items(), key=lambda kv: (kv[0][0], kv[0][1] or 0)):
        cells[key] = ExtremalCell(n, key[0], key[1], labeled, hi, lo,
                                  dedupe(n, masks[key][0]), dedupe(n, masks[key][1]))
    _soundness(n, int(table.count.sum()), per_mille, "classes",
               lambda mask: K.classify(n, mask)[1:], _class_vector)
    return cells


def extremal_cells(n: int, by_mu: bool = False, workers: int | None = None,
                   sample_per_mille: int = 10, allow_n8: bool = False) -> dict:
    check_order(n, allow_n8)
    return _extremal_cells(n, by_mu, default_workers() if workers is None else workers, sample_per_mille)


def _safe(ctor, *args) -> Graph | None:
    try:
        return ctor(*args)
    except MostarLabError:
        return None


def _iso_to(witnesses: tuple[str, ...], family: Graph | None) -> bool:
    if family is None:
        return False
    form = canonical_form(family).decode()
    return all(w == form for w in witnesses)


def _nonpendant_clique(g: Graph) -> bool:
    core = [v for v in range(g.n) if g.degree(v) >= 2]
    return all(g.has_edge(u, v) for u, v in combinations(core, 2))


def _pendant_hub(g: Graph) -> bool:
    hubs = {g.neighbors(p)[0] for p in pendant_vertices(g) if g.degree(g.neighbors(p)[0]) >= 2}
    return len(hubs) <= 1


def _witness_record(g6: str, n: int, k: int, mu: int | None, claimed: str, note: str,
                    subclaim: str) -> CounterexampleRecord:
    g = decode_graph6(g6)
    return CounterexampleRecord(
        kind="extremal", graphs=[g6], n=n, k=k, mu=mu,
        observed={"mo": [mostar_index(g)], "cut_edges": len(bridges(g)), "cyclomatic": cyclomatic_number(g)},
        claimed=claimed, note=note, subclaim=subclaim,
    )


def _theorem_status(primary: SubclaimVerdict, others: list[SubclaimVerdict]) -> Status:
    """The inequality decides REFUTED; failing equality or uniqueness alone gives PARTIAL."""
    if primary.violations:
        return Status.REFUTED
    if any(s.violations for s in others):
        return Status.PARTIAL
    return Status.HOLDS_IN_SCOPE


def _sub(name: str, checked: int, violations: int) -> SubclaimVerdict:
    return SubclaimVerdict(name, Status.REFUTED if violations else Status.HOLDS_IN_SCOPE, checked, violations)


def _bridge_sides(g: Graph) -> list[int]:
    return sorted(bridge_balance(g, e).smaller_side for e in bridges(g))


def _verify_t1(ns, ks, workers, per_mille) -> tuple[ClaimVerdict, ClaimVerdict]:
    cells, records, l5_records, l5_cells = [], [], [], []
    tally = dict.fromkeys(("bound", "attained", "unique", "hub", "l5", "checked", "empty"), 0)
    l5_witnesses = 0
    for n in ns:
        data = extremal_cells(n, False, workers, per_mille)
        for k in (ks or range(1, n)):
            if not 1 <= k <= n - 1:
                continue
            bound = max_bound(n, k)
            cell = data.get((k, None))
            if cell is None:
                tally["empty"] += 1
                cells.append({"n": n, "k": k, "status": "EMPTY", "bound": bound})
                continue
            tally["checked"] += 1
            family = _safe(complete_with_pendants, n, k)
            truth = cell.max_value
            unique = _iso_to(cell.max_witnesses, family)
            graphs = [decode_graph6(w) for w in cell.max_witnesses]
            clique_ok = [_nonpendant_clique(g) for g in graphs]
            hub_ok = all(_pendant_hub(g) for g in graphs)
            relation = "=" if truth == bound else "<" if truth < bound else ">"
            cells.append({
                "n": n, "k": k, "status": "CHECKED", "labeled_graphs": cell.labeled,
                "truth": truth, "bound": bound, "relation": relation,
                "witnesses": list(cell.max_witnesses),
                "family": None if family is None else _g6(family),
                "family_mo": None if family is None else mostar_index(family),
                "witnesses_isomorphic_to_family": unique,
                "nonpendant_clique": all(clique_ok), "pendant_edges_share_hub": hub_ok,
            })
            first = cell.max_witnesses[0]
            if truth > bound:
                tally["bound"] += 1
                records.append(_witness_record(first, n, k, None, f"Mo(G) <= {bound}",
                                               f"maximum Mo is {truth}, above the bound {bound}", "upper_bound"))
            if truth != bound:
                tally["attained"] += 1
            if not unique:
                tally["unique"] += 1
                odd = next((w for w in cell.max_witnesses if family is None or not _iso_to((w,), family)), first)
                why = ("the family is degenerate for n-k = 2 (it has n-1 cut edges)" if family is None
                       else "maximizer is not isomorphic to the clique-with-pendants graph")
                records.append(_witness_record(odd, n, k, None, "the maximizer is unique up to isomorphism "
                                               "and equals the clique with k pendant edges at one hub", why,
                                               "unique_extremal"))
            if not hub_ok:
                tally["hub"] += 1
            for w, ok in zip(cell.max_witnesses, clique_ok):
                l5_witnesses += 1
                if not ok:
                    tally["l5"] += 1
                    l5_records.append(_witness_record(w, n, k, None, "non-pendant vertices of a maximizer induce a complete graph",
                        "maximizer whose non-pendant vertices are not pairwise adjacent", "clique"))
            l5_cells.append({"n": n, "k": k, "maximizers": len(clique_ok), "violations": clique_ok.count(False)})
    checked = tally["checked"]
    bound_sub = _sub("upper_bound", checked, tally["bound"])
    others = [_sub("attained", checked, tally["attained"]), _sub("unique_extremal", checked, tally["unique"]),
              _sub("pendant_edges_share_hub", checked, tally["hub"])]
    scope = {"n": [min(ns), max(ns)], "k": "all 1..n-1" if not ks else sorted(ks),
             "graphs": "all labeled connected graphs with exactly k cut edges"}
    t1 = ClaimVerdict(
        claim=ClaimId.T1_MAX, scope=scope, status=_theorem_status(bound_sub, others), counterexamples=records,
        stats={"cells_checked": checked, "cells_empty": tally["empty"],
               "violations": sum(s.violations for s in [bound_sub, *others])},
        subclaims=[bound_sub, *others], cells=cells,
    )
    l5 = ClaimVerdict(
        claim=ClaimId.L5_CLIQUE,
        scope={**scope, "graphs": "Mo-maximizers of each (n, k) cut-edge class, up to isomorphism"},
        status=Status.REFUTED if tally["l5"] else Status.HOLDS_IN_SCOPE,
        counterexamples=l5_records,
        stats={"cells_checked": len(l5_cells), "maximizers_checked": l5_witnesses, "violations": tally["l5"]},
        cells=l5_cells,
        notes=["checked on the maximizers of the cut-edge classes, the classes the maximum theorem ranges over"],
    )
    return t1, l5


def _verify_t2(ns, ks, workers, per_mille) -> ClaimVerdict:
    cells, records, notes = [], [], []
    tally = dict.fromkeys(("bound", "attained", "unique", "checked", "empty"), 0)
    for n in ns:
        data = extremal_cells(n, False, workers, per_mille)
        for k in (ks or range(1, n)):
            if not 1 <= k <= n - 1:
                continue
            bound = min_bound(n, k)
            cell = data.get((k, None))
            if cell is None:
                tally["empty"] += 1
                cells.append({"n": n, "k": k, "status": "EMPTY", "bound": bound})
                continue
            tally["checked"] += 1
            family = path(n) if n - k - 1 == 0 else _safe(balanced_bridge_path, n, k)
            truth = cell.min_value
            unique = _iso_to(cell.min_witnesses, family)
            base = (n - k - 1) // 2
            claimed_sides = [base + i for i in range(1, k + 1)]
            family_mo = None if family is None else mostar_index(family)
            family_sides = None if family is None else _bridge_sides(family)
            hub_edges = None
            if family is not None:
                cut = bridges(family)
                hub_edges = sum(c.imbalance for c in contribution_profile(family) if c.edge not in cut)
            relation = "=" if truth == bound else "<" if truth < bound else ">"
            entry = {
                "n": n, "k": k, "status": "CHECKED", "labeled_graphs": cell.labeled,
                "truth": truth, "bound": bound, "relation": relation,
                "witnesses": list(cell.min_witnesses),
                "family": None if family is None else _g6(family), "family_mo": family_mo,
                "witnesses_isomorphic_to_family": unique,
                "claimed_smaller_sides": claimed_sides, "family_smaller_sides": family_sides,
                "family_non_bridge_contribution": hub_edges,
            }
            if k == n - 1:
                entry["path_mo"] = mostar_index(path(n))
            cells.append(entry)
            first = cell.min_witnesses[0]
            if truth < bound:
                tally["bound"] += 1
                records.append(_witness_record(first, n, k, None, f"Mo(G) >= {bound}",
                                               f"minimum Mo is {truth}, below the bound {bound}", "lower_bound"))
            if truth != bound:
                tally["attained"] += 1
                notes.append(
                    f"cell (n={n}, k={k}): minimum {truth} vs bound {bound}; balanced bridge path has "
                    + ("no valid construction (n-k-1 = 1)" if family is None else
                       f"Mo {family_mo} with bridge smaller sides {family_sides} against the claimed "
                       f"{claimed_sides}, and its non-bridge edges contribute {hub_edges}")
                )
            if not unique:
                tally["unique"] += 1
                odd = next((w for w in cell.min_witnesses if family is None or not _iso_to((w,), family)), first)
                why = ("the balanced bridge path is degenerate for n-k-1 = 1" if family is None
                       else "minimizer is not isomorphic to the balanced bridge path")
                records.append(_witness_record(odd, n, k, None, "the minimizer is the balanced bridge "
                                               "path (or the path when k = n-1)", why, "unique_extremal"))
    checked = tally["checked"]
    bound_sub = _sub("lower_bound", checked, tally["bound"])
    others = [_sub("attained", checked, tally["attained"]), _sub("unique_extremal", checked, tally["unique"])]
    return ClaimVerdict(
        claim=ClaimId.T2_MIN,
        scope={"n": [min(ns), max(ns)], "k": "all 1..n-1" if not ks else sorted(ks),
               "graphs": "all labeled connected graphs with exactly k cut edges"},
        status=_theorem_status(bound_sub, others), counterexamples=records,
        stats={"cells_checked": checked, "cells_empty": tally["empty"],
               "violations": sum(s.violations for s in [bound_sub, *others])},
        subclaims=[bound_sub, *others], cells=cells, notes=notes,
    )


def _hub_triangle_by_cell(n: int, k: int) -> dict[int, tuple[Graph, int]]:
    """Measured cyclomatic number -> (construction, triangle count) for valid hub-triangle graphs."""
    out = {}
    for j in range(n // 2 + 1):
        g = _safe(hub_triangle_graph, n, k, j)
        if g is not None and len(bridges(g)) == k:
            out.setdefault(cyclomatic_number(g), (g, j))
    return out


def _verify_t3(ns, ks, mus, workers, per_mille) -> ClaimVerdict:
    cells, records = [], []
    tally = dict.fromkeys(("bound", "attained", "construction", "constructions", "checked"), 0)
    for n in ns:
        if n < 3:
            continue
        data = extremal_cells(n, True, workers, per_mille)
        for (k, mu), cell in data.items():
            if k < 1 or (ks and k not in ks) or (mus is not None and mu not in mus):
                continue
            tally["checked"] += 1
            bound = cyclomatic_bound(n, k, mu)
            truth = cell.max_value
            built = _hub_triangle_by_cell(n, k).get(mu)
            entry = {
                "n": n, "k": k, "mu": mu, "status": "CHECKED", "labeled_graphs": cell.labeled,
                "truth": truth, "bound": bound,
                "relation": "=" if truth == bound else "<" if truth < bound else ">",
                "witnesses": list(cell.max_witnesses),
                "construction": None, "construction_mo": None, "construction_triangles": None,
            }
            if built is not None:
                g, j = built
                tally["constructions"] += 1
                entry.update(construction=_g6(g), construction_mo=mostar_index(g), construction_triangles=j)
                if entry["construction_mo"] != bound:
                    tally["construction"] += 1
            cells.append(entry)
            first = cell.max_witnesses[0]
            if truth > bound:
                tally["bound"] += 1
                records.append(_witness_record(first, n, k, mu, f"Mo(G) <= {bound}",
                                               f"maximum Mo is {truth}, above the bound {bound}", "upper_bound"))
            if truth != bound:
                tally["attained"] += 1
    checked = tally["checked"]
    bound_sub = _sub("upper_bound", checked, tally["bound"])
    others = [_sub("attained", checked, tally["attained"]),
              _sub("construction_attains_bound", tally["constructions"], tally["construction"])]
    return ClaimVerdict(
        claim=ClaimId.T3_CYCLOMATIC,
        scope={"n": [min(ns), max(ns)], "k": "all >= 1" if not ks else sorted(ks),
               "mu": "every cyclomatic number present" if mus is None else sorted(mus),
               "graphs": "all labeled connected graphs with exactly k cut edges and cyclomatic number mu"},
        status=_theorem_status(bound_sub, others), counterexamples=records,
        stats={"cells_checked": checked, "violations": sum(s.violations for s in [bound_sub, *others])},
        subclaims=[bound_sub, *others], cells=cells,
        notes=["mu is the cyclomatic number of the whole graph; the hub-triangle construction is matched "
               "to a cell by its measured (k, mu)"],
    )


def verify_theorem(claim: ClaimId | str, n_range, k_range=None, mu_range=None, workers: int | None = None,
                   sample_per_mille: int = 10, allow_n8: bool = False) -> ClaimVerdict:
    """Compare exhaustive class optima with a theorem's closed form, cell by cell."""
    claim = ClaimId(claim)
    ns = sorted(set(n_range))
    for n in ns:
        check_order(n, allow_n8)
    ks = sorted(set(k_range)) if k_range else None
    mus = sorted(set(mu_range)) if mu_range is not None else None
    workers = default_workers() if workers is None else workers
    if claim is ClaimId.T1_MAX:
        return _verify_t1(ns, ks, workers, sample_per_mille)[0]
    if claim is ClaimId.T2_MIN:
        return _verify_t2(ns, ks, workers, sample_per_mille)
    if claim is ClaimId.T3_CYCLOMATIC:
        return _verify_t3(ns, ks, mus, workers, sample_per_mille)
    raise ValueError(f"{claim.value} is not a theorem")


def verify_clique_lemma(n_range, workers: int | None = None, sample_per_mille: int = 10,
                        allow_n8: bool = False) -> ClaimVerdict:
    ns = sorted(set(n_range))
    for n in ns:
        check_order(n, allow_n8)
    return _verify_t1(ns, None, default_workers() if workers is None else workers, sample_per_mille)[1]


# --- replay ----------------------------------------------------------------------


def replay(record: CounterexampleRecord) -> bool:
    """Decode the record's graphs and recompute every observed value."""
    graphs = [decode_graph6(s) for s in record.graphs]
    mo = [mostar_index(g) for g in graphs]
    all_pairs = [sum(c.imbalance for c in contribution_profile(g)) for g in graphs]
    if mo != record.observed["mo"] or all_pairs != mo:
        return False
    if record.kind == "edge":
        c = edge_contribution(graphs[0], tuple(record.observed["edge"]))
        return (c.n_u, c.n_v, c.equidistant) == (record.observed["n_u"], record.observed["n_v"],
                                                  record.observed["equidistant"])
    if record.kind == "transform":
        before, after = graphs
        claim = ClaimId(record.observed["transform"])
        site = tuple(record.observed["site"])
        if dict(transform_sites(before, claim)).get(site) != after:
            return False
        return [len(bridges(g)) for g in graphs] == record.observed["cut_edges"]
    if record.kind == "extremal":
        g = graphs[0]
        return (len(bridges(g)), cyclomatic_number(g)) == (record.observed["cut_edges"],
                                                          record.observed["cyclomatic"])
    return False


# --- full runs and reports -----------------------------------------------------------


@dataclass(frozen=True)
class VerifyConfig:
    claims: tuple[ClaimId, ...] = ALL_CLAIMS
    edge_n_max: int = 7
    transform_n_max: int = 7
    theorem_n_min: int = 4
    theorem_n_max: int = 7
    workers: int | None = None
    sample_per_mille: int = 10
    allow_n8: bool = False

    @classmethod
    def with_max_n(cls, max_n: int, **kw) -> "VerifyConfig":
        return cls(edge_n_max=max_n, transform_n_max=max_n, theorem_n_max=max_n,
                   theorem_n_min=min(4, max_n), **kw)

    def fingerprint(self) -> dict:
        # worker count is deliberately absent: reports must not depend on it
        return {
            "tool": "mostarlab", "version": __version__,
            "caps": {"edge_n_max": self.edge_n_max, "transform_n_max": self.transform_n_max,
                     "theorem_n": [self.theorem_n_min, self.theorem_n_max]},
            "sample_per_mille": self.sample_per_mille,
            "claims": [c.value for c in self.claims],
        }


def parse_claims(text: str) -> tuple[ClaimId, ...]:
    if text.strip().lower() == "all":
        return ALL_CLAIMS
    chosen = set()
    by_prefix = {c.value.split("_")[0]: c for c in ClaimId}
    for part in text.split(","):
        part = part.strip().upper()
        if not part:
            continue
        claim = by_prefix.get(part) or ClaimId.__members__.get(part)
        if claim is None:
            raise ValueError(f"unknown claim {part!r}")
        chosen.add(claim)
    return tuple(c for c in ClaimId if c in chosen)


@dataclass
class VerificationReport:
    fingerprint: dict
    verdicts: list[ClaimVerdict]

    def to_dict(self) -> dict:
        return _plain({"fingerprint": self.fingerprint, "verdicts": self.verdicts})

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_table(self) -> str:
        return render_table(self)


def _plain(obj):
    if isinstance(obj, Enum):
        return obj.value
    if hasattr(obj, "__dataclass_fields__"):
        return _plain(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


def run_all(config: VerifyConfig = VerifyConfig()) -> VerificationReport:
    """Run the selected claims and assemble a deterministic report."""
    w, pm, a8 = config.workers, config.sample_per_mille, config.allow_n8
    theorem_ns = range(config.theorem_n_min, config.theorem_n_max + 1)
    verdicts = {}
    wanted = set(config.claims)
    if wanted & {ClaimId.L1_PENDANT, ClaimId.L2_NONPENDANT}:
        for v in verify_edge_bound_lemmas(config.edge_n_max, w, pm, a8):
            verdicts[v.claim] = v
    for claim in (ClaimId.L3_CONTRACT, ClaimId.L4_MOVE, ClaimId.L6_ADDEDGE):
        if claim in wanted:
            verdicts[claim] = verify_transform_lemma(claim, config.transform_n_max, w, pm, a8)
    if wanted & {ClaimId.T1_MAX, ClaimId.L5_CLIQUE}:
        for n in theorem_ns:
            check_order(n, a8)
        t1, l5 = _verify_t1(sorted(theorem_ns), None, default_workers() if w is None else w, pm)
        verdicts[ClaimId.T1_MAX], verdicts[ClaimId.L5_CLIQUE] = t1, l5
    if ClaimId.T2_MIN in wanted:
        verdicts[ClaimId.T2_MIN] = verify_theorem(ClaimId.T2_MIN, theorem_ns, None, None, w, pm, a8)
    if ClaimId.T3_CYCLOMATIC in wanted:
        verdicts[ClaimId.T3_CYCLOMATIC] = verify_theorem(ClaimId.T3_CYCLOMATIC, theorem_ns, None, None, w, pm, a8)
    ordered = [verdicts[c] for c in ClaimId if c in wanted]
    for v in ordered:
        for rec in v.counterexamples:
            if not replay(rec):
                raise SoundnessError(f"{v.claim.value}: counterexample {rec.graphs} does not replay")
    return VerificationReport(config.fingerprint(), ordered)


def render_table(report: VerificationReport) -> str:
    fp = report.fingerprint
    lines = [
        "# Mostar index claim verification",
        "",
        f"version {fp['version']}; caps {json.dumps(fp['caps'], sort_keys=True)}; "
        f"soundness sample {fp['sample_per_mille']} per mille",
        "",
        "| claim | status | cells | violations |",
        "|---|---|---|---|",
    ]
    for v in report.verdicts:
        lines.append(f"| {v.claim.value} | {v.status.value} | {v.stats.get('cells_checked', 0)} "
                     f"| {v.stats.get('violations', 0)} |")
    for v in report.verdicts:
        lines += ["", f"## {v.claim.value}: {v.status.value}", ""]
        lines.append("scope: " + ", ".join(f"{k}={_fmt(val)}" for k, val in sorted(v.scope.items())))
        lines.append("stats: " + ", ".join(f"{k}={val}" for k, val in sorted(v.stats.items())))
        if v.subclaims:
            lines += ["", "| sub-claim | status | checked | violations |", "|---|---|---|---|"]
            for s in v.subclaims:
                lines.append(f"| {s.name} | {s.status.value} | {s.checked} | {s.violations} |")
        if v.claim in (ClaimId.T1_MAX, ClaimId.T2_MIN, ClaimId.T3_CYCLOMATIC):
            lines += ["", "| n | k | mu | truth | bound | rel | witnesses | family match |",
                      "|---|---|---|---|---|---|---|---|"]
            for c in v.cells:
                if c["status"] == "EMPTY":
                    lines.append(f"| {c['n']} | {c['k']} | - | EMPTY | {c['bound']} | | | |")
                    continue
                match = c.get("witnesses_isomorphic_to_family")
                if match is None:
                    match = "-" if c.get("construction") is None else c["construction_mo"] == c["bound"]
                mu = "-" if c.get("mu") is None else c["mu"]
                lines.append(f"| {c['n']} | {c['k']} | {mu} "
                             f"| {c['truth']} | {c['bound']} | {c['relation']} "
                             f"| {' '.join(c['witnesses'])} | {match} |")
        elif v.cells:
            keys = [k for k in v.cells[0] if k not in ("n", "k")]
            head = ["n"] + (["k"] if "k" in v.cells[0] else []) + keys
            lines += ["", "| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
            for c in v.cells:
                lines.append("| " + " | ".join(str(c[h]) for h in head) + " |")
        for note in v.notes:
            lines.append(f"- {note}")
        if v.counterexamples:
            lines += ["", "counterexamples:"]
            for r in v.counterexamples:
                lines.append(f"- [{r.subclaim or r.kind}] n={r.n} k={r.k} mu={r.mu} graphs={' -> '.join(r.graphs)} "
                             f"mo={r.observed['mo']}: {r.note}")
    return "\n".join(lines) + "\n"


def _fmt(value) -> str:
    return json.dumps(value) if isinstance(value, (list, dict)) else str(value)
