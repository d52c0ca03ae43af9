"""Exact isomorphism decisions for digraphs, graphs and labeled graphs.

All three reduce to one matrix backtracker (``kernels.adj_iso_map``)
that matches vertices most-constrained-first under per-vertex degree and
triangle invariants and checks adjacency (and label) consistency
incrementally. A signature prefilter short-circuits digraph pairs that
cannot be isomorphic. ``brute_force_isomorphic`` tries every permutation
and serves as the independent oracle in tests.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from . import kernels
from .graphs import Digraph, LabeledGraph, UndirectedGraph
from .links import signature


def _iso_from_matrices(mat_a: np.ndarray, mat_b: np.ndarray) -> tuple[int, ...] | None:
    if mat_a.shape[0] != mat_b.shape[0]:
        return None
    if mat_a.shape[0] == 0:
        return ()
    mapping = kernels.adj_iso_map(mat_a.astype(np.int64), mat_b.astype(np.int64))
    return tuple(int(x) for x in mapping) if mapping.size else None


def find_isomorphism(a: Digraph, b: Digraph) -> tuple[int, ...] | None:
    """Arc-preserving bijection from a to b, or None.

    The witness is deterministic for fixed inputs; verify it with
    :func:`mapping_is_isomorphism`.
    """
    if a.n != b.n or signature(a) != signature(b):
        return None
    return _iso_from_matrices(a.to_matrix(), b.to_matrix())


def are_isomorphic(a: Digraph, b: Digraph) -> bool:
    return find_isomorphism(a, b) is not None


def mapping_is_isomorphism(a: Digraph, b: Digraph, mapping) -> bool:
    """Validate a witness by direct arc-set comparison."""
    if a.n != b.n or sorted(mapping) != list(range(a.n)):
        return False
    return {(mapping[u], mapping[v]) for u, v in a.arcs} == set(b.arcs)


def find_isomorphism_undirected(a: UndirectedGraph, b: UndirectedGraph) -> tuple[int, ...] | None:
    if a.n != b.n or a.size != b.size:
        return None
    if sorted(a.degree(v) for v in range(a.n)) != sorted(b.degree(v) for v in range(b.n)):
        return None
    return _iso_from_matrices(a.to_matrix(), b.to_matrix())


def are_isomorphic_undirected(a: UndirectedGraph, b: UndirectedGraph) -> bool:
    return find_isomorphism_undirected(a, b) is not None


def are_isomorphic_labeled(a: LabeledGraph, b: LabeledGraph) -> bool:
    """Edge- and label-preserving isomorphism of labeled graphs."""
    if a.n != b.n or len(a.labels) != len(b.labels):
        return False
    if sorted(a.labels.values()) != sorted(b.labels.values()):
        return False
    return _iso_from_matrices(a.to_matrix(), b.to_matrix()) is not None


BRUTE_FORCE_MAX = 9


def brute_force_isomorphic(a: Digraph, b: Digraph) -> bool:
    """Decision by trying all n! vertex bijections (testing oracle)."""
    if a.n > BRUTE_FORCE_MAX or b.n > BRUTE_FORCE_MAX:
        raise ValueError(f"brute force limited to order {BRUTE_FORCE_MAX}")
    if a.n != b.n or a.size != b.size:
        return False
    arcs_b = set(b.arcs)
    for perm in permutations(range(a.n)):
        if all((perm[u], perm[v]) in arcs_b for u, v in a.arcs):
            return True
    return False
