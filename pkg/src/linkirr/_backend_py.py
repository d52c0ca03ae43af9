"""Pure numpy/Python backend for the hot kernels.

This is the reference implementation; ``_backend_nb`` provides jitted
twins with identical semantics (same row layouts, same candidate
ordering, same returned witnesses). ``kernels`` selects between them.

Conventions shared by both backends:

* adjacency matrices are square arrays with ``adj[u, v] != 0`` meaning
  the arc u->v (entries may carry edge labels for labeled isomorphism);
* a "signature row" for the link of vertex v is the int64 vector
  ``[order, size, tri_total, in_seq | out_seq | tri_seq]`` where each
  sequence is sorted ascending and padded with -1 up to n-1 entries;
* digraphs on fewer than 2 vertices are never link-irregular.
"""

from __future__ import annotations

import numpy as np


def sig_width(n: int) -> int:
    return 3 + 3 * max(n - 1, 0)


def link_sig_rows(adj: np.ndarray) -> np.ndarray:
    """Per-vertex link signature rows for an arbitrary digraph."""
    n = adj.shape[0]
    rows = np.full((n, sig_width(n)), -1, dtype=np.int64)
    if n == 0:
        return rows
    pad = n - 1
    und = (adj + adj.T) > 0
    for v in range(n):
        nbrs = np.nonzero(und[v])[0]
        k = int(nbrs.size)
        sub = adj[np.ix_(nbrs, nbrs)].astype(np.int64)
        sub = (sub != 0).astype(np.int64)
        tri = np.einsum("ij,jk,ki->i", sub, sub, sub)
        rows[v, 0] = k
        rows[v, 1] = sub.sum()
        rows[v, 2] = tri.sum() // 3
        rows[v, 3:3 + k] = np.sort(sub.sum(axis=0))
        rows[v, 3 + pad:3 + pad + k] = np.sort(sub.sum(axis=1))
        rows[v, 3 + 2 * pad:3 + 2 * pad + k] = np.sort(tri)
    return rows


def tournament_link_sig_rows(adj: np.ndarray) -> np.ndarray:
    """Fast signature rows for tournaments.

    In a tournament the link of v is the whole tournament minus v, so all
    n rows come from global degree and triangle counts in O(n^2 log n)
    after one matrix product, instead of n separate induced subgraphs.
    """
    n = adj.shape[0]
    rows = np.full((n, sig_width(n)), -1, dtype=np.int64)
    if n == 0:
        return rows
    k = n - 1
    a = adj.astype(np.int64)
    a2 = a @ a
    outd = a.sum(axis=1)
    ind = a.sum(axis=0)
    tri = (a2 * a.T).sum(axis=1)
    # entry [v, w]: the degree/triangle count of w inside the link of v
    in_link = ind[None, :] - a
    out_link = outd[None, :] - a.T
    tri_link = tri[None, :] - (a * a2.T + a.T * a2)
    off = ~np.eye(n, dtype=bool)
    in_link = np.sort(in_link[off].reshape(n, k), axis=1)
    out_link = np.sort(out_link[off].reshape(n, k), axis=1)
    tri_link = tri_link[off].reshape(n, k)
    rows[:, 0] = k
    rows[:, 1] = k * (k - 1) // 2
    rows[:, 2] = tri_link.sum(axis=1) // 3
    rows[:, 3:3 + k] = in_link
    rows[:, 3 + k:3 + 2 * k] = out_link
    rows[:, 3 + 2 * k:3 + 3 * k] = np.sort(tri_link, axis=1)
    return rows


def _vertex_invariants(adj: np.ndarray) -> np.ndarray:
    """Per-vertex (out-degree, in-degree, triangles, out-sum, in-sum)."""
    n = adj.shape[0]
    a = adj.astype(np.int64)
    s = (a != 0).astype(np.int64)
    inv = np.empty((n, 5), dtype=np.int64)
    inv[:, 0] = s.sum(axis=1)
    inv[:, 1] = s.sum(axis=0)
    inv[:, 2] = np.einsum("ij,jk,ki->i", s, s, s)
    inv[:, 3] = a.sum(axis=1)
    inv[:, 4] = a.sum(axis=0)
    return inv


def adj_iso_map(mat_a: np.ndarray, mat_b: np.ndarray) -> np.ndarray:
    """Arc- and label-preserving isomorphism from A to B, or an empty
    array when none exists. Requires equal orders >= 1.

    Backtracking over vertices of A ordered most-constrained-first
    (rarest invariant class in B); candidates are tried in increasing
    vertex index, so the returned witness is deterministic.
    """
    n = mat_a.shape[0]
    inv_a = _vertex_invariants(mat_a)
    inv_b = _vertex_invariants(mat_b)

    freq = np.zeros(n, dtype=np.int64)
    for v in range(n):
        cnt_a = int((inv_a == inv_a[v]).all(axis=1).sum())
        cnt_b = int((inv_b == inv_a[v]).all(axis=1).sum())
        if cnt_a != cnt_b:
            return np.empty(0, dtype=np.int64)
        freq[v] = cnt_b
    for w in range(n):
        if not (inv_a == inv_b[w]).all(axis=1).any():
            return np.empty(0, dtype=np.int64)

    order = sorted(range(n), key=lambda v: (freq[v], *inv_a[v].tolist(), v))

    a = mat_a.tolist()
    b = mat_b.tolist()
    ia = inv_a.tolist()
    ib = inv_b.tolist()
    mapping = [-1] * n
    used = [False] * n
    ptr = [0] * n
    depth = 0
    while True:
        u = order[depth]
        w = ptr[depth]
        advanced = False
        while w < n:
            if not used[w] and ia[u] == ib[w]:
                row_u, col_u = a[u], b[w]
                ok = True
                for e in range(depth):
                    x = order[e]
                    mx = mapping[x]
                    if row_u[x] != col_u[mx] or a[x][u] != b[mx][w]:
                        ok = False
                        break
                if ok:
                    ptr[depth] = w + 1
                    mapping[u] = w
                    used[w] = True
                    depth += 1
                    if depth == n:
                        return np.array(mapping, dtype=np.int64)
                    ptr[depth] = 0
                    advanced = True
                    break
            w += 1
        if not advanced:
            depth -= 1
            if depth < 0:
                return np.empty(0, dtype=np.int64)
            prev = order[depth]
            used[mapping[prev]] = False
            mapping[prev] = -1


def _link_adj(adj: np.ndarray, v: int, tournament: bool) -> np.ndarray:
    if tournament:
        keep = np.arange(adj.shape[0]) != v
    else:
        keep = (adj[v] + adj[:, v]) > 0
    idx = np.nonzero(keep)[0]
    return np.ascontiguousarray(adj[np.ix_(idx, idx)])


def _links_isomorphic(adj, u, v, tournament) -> bool:
    sub_u = _link_adj(adj, u, tournament).astype(np.int64)
    sub_v = _link_adj(adj, v, tournament).astype(np.int64)
    if sub_u.shape[0] == 0:
        return True  # equal signature rows imply equal (zero) order
    return adj_iso_map(sub_u, sub_v).size > 0


def conflict_count(adj: np.ndarray, tournament: bool) -> int:
    """Number of unordered vertex pairs whose links are isomorphic."""
    n = adj.shape[0]
    if n < 2:
        return 0
    rows = tournament_link_sig_rows(adj) if tournament else link_sig_rows(adj)
    count = 0
    for u in range(n):
        for v in range(u + 1, n):
            if np.array_equal(rows[u], rows[v]) and _links_isomorphic(adj, u, v, tournament):
                count += 1
    return count


def is_link_irregular_adj(adj: np.ndarray, tournament: bool) -> bool:
    """Exact link-irregularity decision; False for orders < 2."""
    n = adj.shape[0]
    if n < 2:
        return False
    rows = tournament_link_sig_rows(adj) if tournament else link_sig_rows(adj)
    for u in range(n):
        for v in range(u + 1, n):
            if np.array_equal(rows[u], rows[v]) and _links_isomorphic(adj, u, v, tournament):
                return False
    return True


# Universe codes for exhaustive enumeration.
UNIVERSE_TOURNAMENTS = 0
UNIVERSE_ORIENTED = 1
UNIVERSE_GENERAL = 2

_BASES = {UNIVERSE_TOURNAMENTS: 2, UNIVERSE_ORIENTED: 3, UNIVERSE_GENERAL: 4}


def decode_pair_states(n: int, universe: int, code: int, adj: np.ndarray) -> None:
    """Fill ``adj`` with the digraph at ``code`` in the pair-state order.

    Unordered pairs are taken in lexicographic order with the first pair
    most significant; the per-pair digit order is absent, u->v, v->u,
    digon (tournaments use only the middle two states).
    """
    base = _BASES[universe]
    adj[:] = 0
    m = n * (n - 1) // 2
    p = m - 1
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
            p -= 1


def count_link_irregular_range(n: int, universe: int, start: int, stop: int) -> int:
    """Count link-irregular members among codes [start, stop)."""
    adj = np.zeros((n, n), dtype=np.uint8)
    tournament = universe == UNIVERSE_TOURNAMENTS
    count = 0
    for code in range(start, stop):
        decode_pair_states(n, universe, code, adj)
        if is_link_irregular_adj(adj, tournament):
            count += 1
    return count


def scan_orientations(n: int, eu: np.ndarray, ev: np.ndarray,
                      start: int, stop: int, find_first: bool) -> tuple[int, int]:
    """Scan orientation codes of the edge list (eu, ev).

    Bit j of a code (counting from the most significant of m bits)
    orients edge j: 0 keeps u->v, 1 reverses. Returns (first link-
    irregular code or -1, number of link-irregular codes seen); with
    ``find_first`` the scan stops at the first hit.
    """
    m = len(eu)
    adj = np.zeros((n, n), dtype=np.uint8)
    first = -1
    count = 0
    for code in range(start, stop):
        adj[:] = 0
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


def hill_climb_run(adj: np.ndarray, pair_u: np.ndarray, pair_v: np.ndarray,
                   arc_choices: np.ndarray) -> tuple[int, int]:
    """One hill-climbing restart over arc reversals, in place.

    ``arc_choices[t]`` names the unordered pair whose arc is reversed at
    step t; a reversal is kept iff the conflict count does not increase.
    Stops early at zero conflicts. Returns (best conflict count reached,
    flips evaluated).
    """
    current = conflict_count(adj, True)
    flips = 0
    for t in range(len(arc_choices)):
        if current == 0:
            break
        p = arc_choices[t]
        u = pair_u[p]
        v = pair_v[p]
        adj[u, v], adj[v, u] = adj[v, u], adj[u, v]
        flips += 1
        candidate = conflict_count(adj, True)
        if candidate <= current:
            current = candidate
        else:
            adj[u, v], adj[v, u] = adj[v, u], adj[u, v]
    return current, flips
