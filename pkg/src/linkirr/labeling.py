"""Link-irregular labelings and orientability of undirected graphs.

A positive-integer edge labeling is link-irregular when all labeled
links (the labeled subgraphs induced by each neighborhood) are pairwise
non-isomorphic under label-preserving isomorphism. A graph admits such
a labeling iff for every vertex pair either the plain links are
non-isomorphic or their edge sets differ as sets of actual base-graph
edges; the second clause compares identity, not isomorphism.
"""

from __future__ import annotations

from itertools import combinations

from .enumeration import first_link_irregular_orientation
from .graphs import Digraph, LabeledGraph, UndirectedGraph
from .iso import are_isomorphic_labeled, are_isomorphic_undirected

ORIENTABILITY_EDGE_GUARD = 30


def labeled_link(lg: LabeledGraph, v: int) -> LabeledGraph:
    """Labeled subgraph induced by N(v), labels inherited unchanged."""
    return lg.induced_sublabeled(lg.base.neighbors(v))


def link_edge_set(g: UndirectedGraph, v: int) -> frozenset[tuple[int, int]]:
    """E(L(v)) as a set of base-graph edges (pairs of original labels)."""
    nbrs = set(g.neighbors(v))
    return frozenset(e for e in g.edges if e[0] in nbrs and e[1] in nbrs)


def admits_link_irregular_labeling(g: UndirectedGraph) -> tuple[bool, tuple[int, int] | None]:
    """Decide the labeling criterion; on failure return the first
    violating pair (links isomorphic AND equal edge sets)."""
    links = [g.induced_subgraph(g.neighbors(v)) for v in range(g.n)]
    edge_sets = [link_edge_set(g, v) for v in range(g.n)]
    for x, y in combinations(range(g.n), 2):
        if edge_sets[x] == edge_sets[y] and are_isomorphic_undirected(links[x], links[y]):
            return False, (x, y)
    return True, None


def verify_labeling(lg: LabeledGraph) -> tuple[bool, tuple[int, int] | None]:
    """True iff all labeled links are pairwise non-isomorphic under
    label-preserving isomorphism; else the first clashing pair."""
    links = [labeled_link(lg, v) for v in range(lg.n)]
    for x, y in combinations(range(lg.n), 2):
        if are_isomorphic_labeled(links[x], links[y]):
            return False, (x, y)
    return True, None


def is_link_irregular_orientable(g: UndirectedGraph) -> tuple[bool, Digraph | None]:
    """Exhaustively decide whether some orientation of g is
    link-irregular; returns the first witness orientation if so."""
    if g.size > ORIENTABILITY_EDGE_GUARD:
        raise ValueError(f"{g.size} edges exceed the orientability guard "
                         f"({ORIENTABILITY_EDGE_GUARD})")
    witness = first_link_irregular_orientation(g)
    return (witness is not None), witness


def check_orientable_implies_labelable(g: UndirectedGraph) -> bool:
    """Instance of the implication: link-irregular orientable =>
    link-irregular labelable."""
    orientable, _ = is_link_irregular_orientable(g)
    if not orientable:
        return True
    return admits_link_irregular_labeling(g)[0]
