"""Compiled per-mask kernels for exhaustive sweeps over small graphs.

A graph on ``n <= 8`` vertices is an int64 mask over the upper triangle in
graph6 column order: bit ``j*(j-1)/2 + i`` is the pair ``(i, j)``, ``i < j``.
Every scan is a fold of a per-mask function over a contiguous mask range,
so ranges can be processed independently and merged.
"""

from __future__ import annotations

import numpy as np
from numba import njit, types
from numba.typed import List

MAX_N = 8

_pi, _pj = [], []
for _j in range(1, MAX_N):
    for _i in range(_j):
        _pi.append(_i)
        _pj.append(_j)
PAIR_I = np.array(_pi, dtype=np.int64)
PAIR_J = np.array(_pj, dtype=np.int64)
del _pi, _pj, _i, _j

# slots of the per-graph edge-law vector
EL_GRAPHS, EL_EDGES, EL_PENDANT, EL_L1_BAD, EL_NONPENDANT, EL_L2_BAD = 0, 1, 2, 3, 4, 5
EL_BRIDGES, EL_BRIDGE_BAD, EL_BRIDGE_EQ_BAD, EL_BALANCE_BAD = 6, 7, 8, 9
EL_SIZE = 10
# laws with a first-violation record, and the slot counting their violations
EL_LAW_SLOTS = np.array([EL_L1_BAD, EL_L2_BAD, EL_BRIDGE_BAD, EL_BRIDGE_EQ_BAD, EL_BALANCE_BAD])

# slots of the per-graph transform vector
TR_SITES, TR_UP, TR_TIE, TR_DOWN, TR_CUT_CHANGE, TR_DISCONNECTED = 0, 1, 2, 3, 4, 5
TR_SIZE = 6
L3, L4, L6 = 3, 4, 6


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def fill_rows(n, mask, rows):
    for v in range(n):
        rows[v] = 0
    for b in range(n * (n - 1) // 2):
        if (mask >> b) & 1:
            i = PAIR_I[b]
            j = PAIR_J[b]
            rows[i] |= 1 << j
            rows[j] |= 1 << i


@njit(cache=True)
def rows_to_mask(n, rows):
    mask = 0
    for b in range(n * (n - 1) // 2):
        if (rows[PAIR_I[b]] >> PAIR_J[b]) & 1:
            mask |= 1 << b
    return mask


@njit(cache=True)
def reach(n, rows, s, skip_u, skip_v):
    """Bit set reachable from ``s``; the edge ``skip_u skip_v`` is ignored (pass -1 for none)."""
    seen = 1 << s
    frontier = seen
    while frontier:
        nxt = 0
        for v in range(n):
            if (frontier >> v) & 1:
                r = rows[v]
                if v == skip_u:
                    r &= ~(1 << skip_v)
                elif v == skip_v:
                    r &= ~(1 << skip_u)
                nxt |= r
        frontier = nxt & ~seen
        seen |= frontier
    return seen


@njit(cache=True)
def connected(n, rows):
    return reach(n, rows, 0, -1, -1) == (1 << n) - 1


@njit(cache=True)
def all_distances(n, rows, dist):
    for s in range(n):
        for v in range(n):
            dist[s, v] = -1
        dist[s, s] = 0
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in range(n):
                if (frontier >> v) & 1:
                    nxt |= rows[v]
            nxt &= ~seen
            for v in range(n):
                if (nxt >> v) & 1:
                    dist[s, v] = d
            seen |= nxt
            frontier = nxt


@njit(cache=True)
def mostar_of_rows(n, rows, dist):
    all_distances(n, rows, dist)
    total = 0
    for u in range(n):
        r = rows[u]
        for v in range(u + 1, n):
            if (r >> v) & 1:
                a = 0
                b = 0
                for w in range(n):
                    if dist[u, w] < dist[v, w]:
                        a += 1
                    elif dist[v, w] < dist[u, w]:
                        b += 1
                total += abs(a - b)
    return total


@njit(cache=True)
def bridge_count(n, rows):
    c = 0
    for u in range(n):
        r = rows[u]
        for v in range(u + 1, n):
            if (r >> v) & 1:
                if not (reach(n, rows, u, u, v) >> v) & 1:
                    c += 1
    return c


@njit(cache=True)
def bridge_pairs(n, mask):
    """Mask of the pairs whose edge is a bridge, by the edge-removal test."""
    rows = np.zeros(n, np.int64)
    fill_rows(n, mask, rows)
    out = 0
    for b in range(n * (n - 1) // 2):
        if (mask >> b) & 1:
            u = PAIR_I[b]
            v = PAIR_J[b]
            if not (reach(n, rows, u, u, v) >> v) & 1:
                out |= 1 << b
    return out


@njit(cache=True)
def classify(n, mask):
    """(connected, cut edges, cyclomatic number, Mostar index) of one mask."""
    rows = np.zeros(n, np.int64)
    dist = np.zeros((n, n), np.int64)
    fill_rows(n, mask, rows)
    if not connected(n, rows):
        return False, -1, -1, -1
    m = popcount(mask)
    return True, bridge_count(n, rows), m - n + 1, mostar_of_rows(n, rows, dist)


# --- edge laws ---------------------------------------------------------------


@njit(cache=True)
def _edge_laws_into(n, mask, rows, dist, out, first_mask, first_pair):
    """Add one connected graph's edge-law tallies to ``out``; record first violations."""
    all_distances(n, rows, dist)
    out[EL_GRAPHS] += 1
    for b in range(n * (n - 1) // 2):
        if not (mask >> b) & 1:
            continue
        u = PAIR_I[b]
        v = PAIR_J[b]
        a = 0
        c = 0
        for w in range(n):
            if dist[u, w] < dist[v, w]:
                a += 1
            elif dist[v, w] < dist[u, w]:
                c += 1
        eq = n - a - c
        imb = abs(a - c)
        du = popcount(rows[u])
        dv = popcount(rows[v])
        out[EL_EDGES] += 1
        bad = 0
        if a < 1 or c < 1:
            bad |= 16
        if du == 1 or dv == 1:
            if not (du == 1 and dv == 1):
                out[EL_PENDANT] += 1
                if imb != n - 2:
                    bad |= 1
        if du >= 2 and dv >= 2:
            out[EL_NONPENDANT] += 1
            if imb > n - 3:
                bad |= 2
        side = reach(n, rows, u, u, v)
        if not (side >> v) & 1:
            out[EL_BRIDGES] += 1
            s = popcount(side)
            if n - s < s:
                s = n - s
            if imb != n - 2 * s:
                bad |= 4
            if eq != 0:
                bad |= 8
        for law in range(5):
            if (bad >> law) & 1:
                out[EL_LAW_SLOTS[law]] += 1
                if first_mask[law] < 0:
                    first_mask[law] = mask
                    first_pair[law] = b


@njit(cache=True)
def edge_laws_one(n, mask):
    rows = np.zeros(n, np.int64)
    dist = np.zeros((n, n), np.int64)
    out = np.zeros(EL_SIZE, np.int64)
    fm = np.full(5, -1, np.int64)
    fp = np.full(5, -1, np.int64)
    fill_rows(n, mask, rows)
    if connected(n, rows):
        _edge_laws_into(n, mask, rows, dist, out, fm, fp)
    return out


@njit(cache=True)
def scan_edge_laws(n, lo, hi):
    rows = np.zeros(n, np.int64)
    dist = np.zeros((n, n), np.int64)
    out = np.zeros(EL_SIZE, np.int64)
    fm = np.full(5, -1, np.int64)
    fp = np.full(5, -1, np.int64)
    for mask in range(lo, hi):
        if popcount(mask) < n - 1:
            continue
        fill_rows(n, mask, rows)
        if connected(n, rows):
            _edge_laws_into(n, mask, rows, dist, out, fm, fp)
    return out, fm, fp


# --- class tables and extremal witnesses ---------------------------------------


@njit(cache=True)
def scan_classes(n, lo, hi):
    """Per (cut edges, cyclomatic number) cell: labeled count, max Mo, min Mo."""
    p = n * (n - 1) // 2
    kmax = n
    mumax = p - n + 2 if p - n + 2 > 1 else 1
    count = np.zeros((kmax, mumax), np.int64)
    best = np.full((kmax, mumax), -1, np.int64)
    worst = np.full((kmax, mumax), -1, np.int64)
    rows = np.zeros(n, np.int64)
    dist = np.zeros((n, n), np.int64)
    for mask in range(lo, hi):
        m = popcount(mask)
        if m < n - 1:
            continue
        fill_rows(n, mask, rows)
        if not connected(n, rows):
            continue
        k = bridge_count(n, rows)
        mu = m - n + 1
        mo = mostar_of_rows(n, rows, dist)
        count[k, mu] += 1
        if best[k, mu] < 0 or mo > best[k, mu]:
            best[k, mu] = mo
        if worst[k, mu] < 0 or mo < worst[k, mu]:
            worst[k, mu] = mo
    return count, best, worst


@njit(cache=True)
def collect_attaining(n, target_max, target_min, lo, hi):
    """Masks whose Mo equals their cell's target (-1 targets are skipped).

    Returns a flat list of (mask, k, mu, flag) quadruples; flag bit 1 means
    the max target was hit, bit 2 the min target.
    """
    out = List.empty_list(types.int64)
    rows = np.zeros(n, np.int64)
    dist = np.zeros((n, n), np.int64)
    for mask in range(lo, hi):
        m = popcount(mask)
        if m < n - 1:
            continue
        fill_rows(n, mask, rows)
        if not connected(n, rows):
            continue
        k = bridge_count(n, rows)
        mu = m - n + 1
        tmax = target_max[k, mu]
        tmin = target_min[k, mu]
        if tmax < 0 and tmin < 0:
            continue
        mo = mostar_of_rows(n, rows, dist)
        flag = 0
        if mo == tmax:
            flag |= 1
        if mo == tmin:
            flag |= 2
        if flag:
            out.append(mask)
            out.append(k)
            out.append(mu)
            out.append(flag)
    return out


@njit(cache=True)
def connected_masks(n, lo, hi):
    out = List.empty_list(types.int64)
    rows = np.zeros(n, np.int64)
    for mask in range(lo, hi):
        if popcount(mask) < n - 1:
            continue
        fill_rows(n, mask, rows)
        if connected(n, rows):
            out.append(mask)
    return out


@njit(cache=True)
def count_connected(n, lo, hi):
    rows = np.zeros(n, np.int64)
    c = 0
    for mask in range(lo, hi):
        if n > 1 and popcount(mask) < n - 1:
            continue
        fill_rows(n, mask, rows)
        if connected(n, rows):
            c += 1
    return c


# --- canonical forms ----------------------------------------------------------


@njit(cache=True)
def graph6_key(n, rows):
    """Adjacency bits as one integer, first graph6 bit most significant."""
    p = n * (n - 1) // 2
    key = 0
    for b in range(p):
        key = (key << 1) | ((rows[PAIR_I[b]] >> PAIR_J[b]) & 1)
    return key


@njit(cache=True)
def orbit(n, mask, perms):
    """Masks of every relabeling of ``mask`` and the minimum graph6 key among them."""
    rows = np.zeros(n, np.int64)
    prow = np.zeros(n, np.int64)
    fill_rows(n, mask, rows)
    masks = np.empty(perms.shape[0], np.int64)
    best = -1
    for t in range(perms.shape[0]):
        for v in range(n):
            prow[v] = 0
        for u in range(n):
            r = rows[u]
            for v in range(n):
                if (r >> v) & 1:
                    prow[perms[t, u]] |= 1 << perms[t, v]
        masks[t] = rows_to_mask(n, prow)
        key = graph6_key(n, prow)
        if best < 0 or key < best:
            best = key
    return masks, best


# --- transformations ----------------------------------------------------------


@njit(cache=True)
def _tally(out, first, mask, after, site_a, site_b, delta, cut_before, cut_after, check_cut, work, n):
    out[TR_SITES] += 1
    if not connected(n, work):
        out[TR_DISCONNECTED] += 1
    if delta > 0:
        out[TR_UP] += 1
    elif delta == 0:
        out[TR_TIE] += 1
        if first[1, 0] < 0:
            first[1, 0] = mask
            first[1, 1] = after
            first[1, 2] = site_a
            first[1, 3] = site_b
    else:
        out[TR_DOWN] += 1
        if first[0, 0] < 0:
            first[0, 0] = mask
            first[0, 1] = after
            first[0, 2] = site_a
            first[0, 3] = site_b
    if check_cut and cut_before != cut_after:
        out[TR_CUT_CHANGE] += 1
        if first[2, 0] < 0:
            first[2, 0] = mask
            first[2, 1] = after
            first[2, 2] = site_a
            first[2, 3] = site_b


@njit(cache=True)
def _transform_into(n, which, mask, rows, work, dist, out, first, cut):
    """Apply every applicable transform site of one connected graph.

    ``first[row]`` keeps (mask, after mask, site a, site b) of the first
    decrease (row 0), tie (row 1) and cut-edge change (row 2).
    """
    mo = mostar_of_rows(n, rows, dist)
    if which == L6:
        for b in range(n * (n - 1) // 2):
            if (mask >> b) & 1:
                continue
            after = mask | (1 << b)
            fill_rows(n, after, work)
            mo2 = mostar_of_rows(n, work, dist)
            _tally(out, first, mask, after, PAIR_I[b], PAIR_J[b], mo2 - mo, cut, cut, False, work, n)
    elif which == L3:
        for b in range(n * (n - 1) // 2):
            if not (mask >> b) & 1:
                continue
            u = PAIR_I[b]
            v = PAIR_J[b]
            if popcount(rows[u]) < 2 or popcount(rows[v]) < 2:
                continue
            if (reach(n, rows, u, u, v) >> v) & 1:
                continue
            for w in range(n):
                work[w] = rows[w]
            moved = rows[v] & ~(1 << u)
            for w in range(n):
                if (moved >> w) & 1:
                    work[w] = (work[w] & ~(1 << v)) | (1 << u)
            work[u] |= moved
            work[v] = 1 << u
            after = rows_to_mask(n, work)
            mo2 = mostar_of_rows(n, work, dist)
            cut2 = bridge_count(n, work)
            _tally(out, first, mask, after, u, v, mo2 - mo, cut, cut2, True, work, n)
    else:
        for p in range(n):
            if popcount(rows[p]) != 1:
                continue
            y = 0
            while not (rows[p] >> y) & 1:
                y += 1
            dy = popcount(rows[y])
            if dy < 2:
                continue
            for x in range(n):
                if x == p or x == y or popcount(rows[x]) < dy:
                    continue
                for w in range(n):
                    work[w] = rows[w]
                work[p] = 1 << x
                work[y] &= ~(1 << p)
                work[x] |= 1 << p
                after = rows_to_mask(n, work)
                mo2 = mostar_of_rows(n, work, dist)
                cut2 = bridge_count(n, work)
                _tally(out, first, mask, after, p, x, mo2 - mo, cut, cut2, True, work, n)


@njit(cache=True)
def transform_one(n, which, mask):
    rows = np.zeros(n, np.int64)
    work = np.zeros(n, np.int64)
    dist = np.zeros((n, n), np.int64)
    out = np.zeros(TR_SIZE, np.int64)
    first = np.full((3, 4), -1, np.int64)
    fill_rows(n, mask, rows)
    if connected(n, rows):
        _transform_into(n, which, mask, rows, work, dist, out, first, bridge_count(n, rows))
    return out


@njit(cache=True)
def scan_transform(n, which, lo, hi):
    """Tallies per cut-edge count of the input graph: shape (n, TR_SIZE) plus first records."""
    rows = np.zeros(n, np.int64)
    work = np.zeros(n, np.int64)
    dist = np.zeros((n, n), np.int64)
    out = np.zeros((n, TR_SIZE), np.int64)
    first = np.full((n, 3, 4), -1, np.int64)
    for mask in range(lo, hi):
        if popcount(mask) < n - 1:
            continue
        fill_rows(n, mask, rows)
        if not connected(n, rows):
            continue
        k = bridge_count(n, rows)
        _transform_into(n, which, mask, rows, work, dist, out[k], first[k], k)
    return out, first
