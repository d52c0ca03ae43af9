"""Numba-jitted twins of the ``_backend_py`` kernels.

Same contracts, same row layouts, same deterministic witnesses; only the
execution strategy differs (explicit loops compiled by ``@njit`` instead
of vectorized numpy). Twin equivalence is enforced by tests.
"""

from __future__ import annotations

import numpy as np
from numba import njit

UNIVERSE_TOURNAMENTS = 0
UNIVERSE_ORIENTED = 1
UNIVERSE_GENERAL = 2


def sig_width(n: int) -> int:
    return 3 + 3 * max(n - 1, 0)


@njit(cache=True)
def link_sig_rows(adj):
    n = adj.shape[0]
    pad = max(n - 1, 0)
    rows = np.full((n, 3 + 3 * pad), -1, dtype=np.int64)
    nbrs = np.empty(n, dtype=np.int64)
    for v in range(n):
        k = 0
        for j in range(n):
            if j != v and (adj[v, j] != 0 or adj[j, v] != 0):
                nbrs[k] = j
                k += 1
        sub = np.zeros((k, k), dtype=np.int64)
        size = 0
        for i in range(k):
            for j in range(k):
                if adj[nbrs[i], nbrs[j]] != 0:
                    sub[i, j] = 1
                    size += 1
        ind = np.zeros(k, dtype=np.int64)
        outd = np.zeros(k, dtype=np.int64)
        tri = np.zeros(k, dtype=np.int64)
        for i in range(k):
            for j in range(k):
                outd[i] += sub[i, j]
                ind[i] += sub[j, i]
        for i in range(k):
            for j in range(k):
                if sub[i, j] != 0:
                    for l in range(k):
                        if sub[j, l] != 0 and sub[l, i] != 0:
                            tri[i] += 1
        rows[v, 0] = k
        rows[v, 1] = size
        rows[v, 2] = tri.sum() // 3
        rows[v, 3:3 + k] = np.sort(ind)
        rows[v, 3 + pad:3 + pad + k] = np.sort(outd)
        rows[v, 3 + 2 * pad:3 + 2 * pad + k] = np.sort(tri)
    return rows


@njit(cache=True)
def tournament_link_sig_rows(adj):
    n = adj.shape[0]
    pad = max(n - 1, 0)
    rows = np.full((n, 3 + 3 * pad), -1, dtype=np.int64)
    if n == 0:
        return rows
    k = n - 1
    a = adj.astype(np.int64)
    a2 = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for l in range(n):
            if a[i, l] != 0:
                for j in range(n):
                    a2[i, j] += a[l, j]
    outd = np.zeros(n, dtype=np.int64)
    ind = np.zeros(n, dtype=np.int64)
    tri = np.zeros(n, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            outd[i] += a[i, j]
            ind[i] += a[j, i]
            tri[i] += a2[i, j] * a[j, i]
    in_seq = np.empty(k, dtype=np.int64)
    out_seq = np.empty(k, dtype=np.int64)
    tri_seq = np.empty(k, dtype=np.int64)
    for v in range(n):
        t = 0
        tri_total = 0
        for w in range(n):
            if w == v:
                continue
            in_seq[t] = ind[w] - a[v, w]
            out_seq[t] = outd[w] - a[w, v]
            tri_seq[t] = tri[w] - (a[v, w] * a2[w, v] + a[w, v] * a2[v, w])
            tri_total += tri_seq[t]
            t += 1
        rows[v, 0] = k
        rows[v, 1] = k * (k - 1) // 2
        rows[v, 2] = tri_total // 3
        rows[v, 3:3 + k] = np.sort(in_seq)
        rows[v, 3 + k:3 + 2 * k] = np.sort(out_seq)
        rows[v, 3 + 2 * k:3 + 3 * k] = np.sort(tri_seq)
    return rows


@njit(cache=True)
def _vertex_invariants(mat):
    n = mat.shape[0]
    inv = np.zeros((n, 5), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if mat[i, j] != 0:
                inv[i, 0] += 1
                inv[j, 1] += 1
                inv[i, 3] += mat[i, j]
                inv[j, 4] += mat[i, j]
    for i in range(n):
        for j in range(n):
            if mat[i, j] != 0:
                for l in range(n):
                    if mat[j, l] != 0 and mat[l, i] != 0:
                        inv[i, 2] += 1
    return inv


@njit(cache=True)
def _inv_eq(inv_x, x, inv_y, y):
    for c in range(5):
        if inv_x[x, c] != inv_y[y, c]:
            return False
    return True


@njit(cache=True)
def adj_iso_map(mat_a, mat_b):
    n = mat_a.shape[0]
    inv_a = _vertex_invariants(mat_a)
    inv_b = _vertex_invariants(mat_b)

    freq = np.zeros(n, dtype=np.int64)
    for v in range(n):
        cnt_a = 0
        cnt_b = 0
        for w in range(n):
            if _inv_eq(inv_a, v, inv_a, w):
                cnt_a += 1
            if _inv_eq(inv_a, v, inv_b, w):
                cnt_b += 1
        if cnt_a != cnt_b:
            return np.empty(0, dtype=np.int64)
        freq[v] = cnt_b
    for w in range(n):
        present = False
        for v in range(n):
            if _inv_eq(inv_a, v, inv_b, w):
                present = True
                break
        if not present:
            return np.empty(0, dtype=np.int64)

    # most-constrained-first order: key (freq, inv..., v), insertion sort
    order = np.arange(n)
    for i in range(1, n):
        cur = order[i]
        j = i - 1
        while j >= 0:
            prev = order[j]
            smaller = False
            if freq[cur] != freq[prev]:
                smaller = freq[cur] < freq[prev]
            else:
                decided = False
                for c in range(5):
                    if inv_a[cur, c] != inv_a[prev, c]:
                        smaller = inv_a[cur, c] < inv_a[prev, c]
                        decided = True
                        break
                if not decided:
                    smaller = cur < prev
            if not smaller:
                break
            order[j + 1] = prev
            j -= 1
        order[j + 1] = cur

    mapping = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=np.bool_)
    ptr = np.zeros(n, dtype=np.int64)
    depth = 0
    while True:
        u = order[depth]
        w = ptr[depth]
        advanced = False
        while w < n:
            if not used[w] and _inv_eq(inv_a, u, inv_b, w):
                ok = True
                for e in range(depth):
                    x = order[e]
                    mx = mapping[x]
                    if mat_a[u, x] != mat_b[w, mx] or mat_a[x, u] != mat_b[mx, w]:
                        ok = False
                        break
                if ok:
                    ptr[depth] = w + 1
                    mapping[u] = w
                    used[w] = True
                    depth += 1
                    if depth == n:
                        return mapping
                    ptr[depth] = 0
                    advanced = True
                    break
            w += 1
        if not advanced:
            depth -= 1
            if depth < 0:
                return np.empty(0, dtype=np.int64)
            prev_u = order[depth]
            used[mapping[prev_u]] = False
            mapping[prev_u] = -1


@njit(cache=True)
def _link_adj(adj, v, tournament):
    n = adj.shape[0]
    idx = np.empty(n, dtype=np.int64)
    k = 0
    for j in range(n):
        if j == v:
            continue
        if tournament or adj[v, j] != 0 or adj[j, v] != 0:
            idx[k] = j
            k += 1
    sub = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            if adj[idx[i], idx[j]] != 0:
                sub[i, j] = 1
    return sub


@njit(cache=True)
def _links_isomorphic(adj, u, v, tournament):
    sub_u = _link_adj(adj, u, tournament)
    sub_v = _link_adj(adj, v, tournament)
    if sub_u.shape[0] == 0:
        return True
    return adj_iso_map(sub_u, sub_v).size > 0


@njit(cache=True)
def _rows_equal(rows, u, v):
    for c in range(rows.shape[1]):
        if rows[u, c] != rows[v, c]:
            return False
    return True


@njit(cache=True, nogil=True)
def conflict_count(adj, tournament):
    n = adj.shape[0]
    if n < 2:
        return 0
    if tournament:
        rows = tournament_link_sig_rows(adj)
    else:
        rows = link_sig_rows(adj)
    count = 0
    for u in range(n):
        for v in range(u + 1, n):
            if _rows_equal(rows, u, v) and _links_isomorphic(adj, u, v, tournament):
                count += 1
    return count


@njit(cache=True, nogil=True)
def is_link_irregular_adj(adj, tournament):
    n = adj.shape[0]
    if n < 2:
        return False
    if tournament:
        rows = tournament_link_sig_rows(adj)
    else:
        rows = link_sig_rows(adj)
    for u in range(n):
        for v in range(u + 1, n):
            if _rows_equal(rows, u, v) and _links_isomorphic(adj, u, v, tournament):
                return False
    return True


@njit(cache=True)
def decode_pair_states(n, universe, code, adj):
    if universe == UNIVERSE_TOURNAMENTS:
        base = 2
    elif universe == UNIVERSE_ORIENTED:
        base = 3
    else:
        base = 4
    for u in range(n):
        for v in range(n):
            adj[u, v] = 0
    for u in range(n - 1, -1, -1):
        for v in range(n - 1, u, -1):
            digit = code % base
            code //= base
            if universe == UNIVERSE_TOURNAMENTS:
                digit += 1
            if digit == 1 or digit == 3:
                adj[u, v] = 1
            if digit == 2 or digit == 3:
                adj[v, u] = 1


@njit(cache=True, nogil=True)
def count_link_irregular_range(n, universe, start, stop):
    adj = np.zeros((n, n), dtype=np.uint8)
    tournament = universe == UNIVERSE_TOURNAMENTS
    count = 0
    for code in range(start, stop):
        decode_pair_states(n, universe, code, adj)
        if is_link_irregular_adj(adj, tournament):
            count += 1
    return count


@njit(cache=True, nogil=True)
def scan_orientations(n, eu, ev, start, stop, find_first):
    m = len(eu)
    adj = np.zeros((n, n), dtype=np.uint8)
    first = -1
    count = 0
    for code in range(start, stop):
        for u in range(n):
            for v in range(n):
                adj[u, v] = 0
        for j in range(m):
            if code >> (m - 1 - j) & 1:
                adj[ev[j], eu[j]] = 1
            else:
                adj[eu[j], ev[j]] = 1
        if is_link_irregular_adj(adj, False):
            count += 1
            if first < 0:
                first = code
            if find_first:
                return first, count
    return first, count


@njit(cache=True, nogil=True)
def hill_climb_run(adj, pair_u, pair_v, arc_choices):
    current = conflict_count(adj, True)
    flips = 0
    for t in range(len(arc_choices)):
        if current == 0:
            break
        p = arc_choices[t]
        u = pair_u[p]
        v = pair_v[p]
        tmp = adj[u, v]
        adj[u, v] = adj[v, u]
        adj[v, u] = tmp
        flips += 1
        candidate = conflict_count(adj, True)
        if candidate <= current:
            current = candidate
        else:
            tmp = adj[u, v]
            adj[u, v] = adj[v, u]
            adj[v, u] = tmp
    return current, flips
