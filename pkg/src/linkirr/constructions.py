"""Exact generators for the ground-truth corpus.

Every named construction records the properties it is expected to
satisfy; tests re-validate the whole corpus, and the shipped arc-list
files under ``linkirr/corpus`` are byte-identical to what these
builders serialize. Vertex labels are 0-based; objects whose source
drawings used 1-based labels are shifted down by one, noted in the
file comment headers.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .graphs import Digraph, LabeledGraph, UndirectedGraph
from .search import extend_dominated, extend_dominating

RED = 1
BLUE = 2


def five_vertex_pair() -> tuple[Digraph, Digraph]:
    """Two distinct link-irregular digraphs on 5 vertices; they are
    non-isomorphic orientations of the same underlying graph, differing
    only in the direction of the 0-4 arc."""
    left = Digraph.from_arcs(5, [(2, 3), (3, 4), (1, 2), (4, 0),
                                 (4, 2), (3, 0), (1, 3), (1, 4)])
    right = Digraph.from_arcs(5, [(2, 3), (3, 4), (1, 2), (0, 4),
                                  (4, 2), (3, 0), (1, 3), (1, 4)])
    return left, right


def d6() -> Digraph:
    """The link-irregular tournament on 6 vertices."""
    return Digraph.from_arcs(6, [
        (0, 5), (0, 2), (0, 3), (1, 0), (2, 1), (2, 3), (2, 5),
        (3, 4), (3, 5), (3, 1), (4, 0), (4, 1), (4, 2), (4, 5), (5, 1),
    ])


def d7() -> Digraph:
    """d6 plus a dominating vertex; the new vertex's link is d6."""
    return extend_dominating(d6())


def d8() -> Digraph:
    """d7 plus a dominated vertex."""
    return extend_dominated(d7())


def circulant(n: int, k: int) -> Digraph:
    """Arcs i -> (i+j) mod n for j = 1..k.

    Every vertex has d+ = d- = k and the rotation i -> i+1 is an
    automorphism, so all links are isomorphic: Eulerian but never
    link-irregular. For k > (n-1)/2 opposite arcs appear (digons);
    the digraph is then not oriented, which is permitted here.
    """
    if n < 3:
        raise ValueError("circulant requires n >= 3")
    if not 1 <= k <= n - 1:
        raise ValueError("circulant requires 1 <= k <= n-1")
    return Digraph.from_arcs(n, [(i, (i + j) % n)
                                 for i in range(n) for j in range(1, k + 1)])


def two_out_regular_6() -> Digraph:
    """Link-irregular digraph on 6 vertices with every outdegree 2."""
    return Digraph.from_arcs(6, [
        (0, 1), (0, 2), (1, 4), (1, 2), (2, 5), (2, 4),
        (3, 4), (3, 2), (4, 5), (4, 0), (5, 0), (5, 3),
    ])


def regular_tournament_9() -> Digraph:
    """Link-irregular regular tournament on 9 vertices (d+ = d- = 4)."""
    out = {
        0: (2, 3, 4, 7), 1: (0, 2, 5, 7), 2: (4, 5, 6, 7),
        3: (1, 2, 6, 8), 4: (1, 3, 6, 7), 5: (0, 3, 4, 8),
        6: (0, 1, 5, 8), 7: (3, 5, 6, 8), 8: (0, 1, 2, 4),
    }
    return Digraph.from_arcs(9, [(u, v) for u, vs in out.items() for v in vs])


def counterexample_graph() -> tuple[UndirectedGraph, LabeledGraph]:
    """7-vertex graph that admits a link-irregular 2-labeling but no
    link-irregular orientation (two vertices have K2 links, and K2 has
    only one orientation up to isomorphism).

    The returned labeling uses 1 for red and 2 for blue; blue sits on
    the edges 3-5 and 5-6.
    """
    g = UndirectedGraph.from_edges(7, [
        (0, 1), (0, 3), (0, 2), (2, 5), (1, 2), (1, 4),
        (1, 5), (4, 5), (3, 6), (3, 5), (5, 6),
    ])
    labels = {edge: (BLUE if edge in ((3, 5), (5, 6)) else RED) for edge in g.edges}
    return g, LabeledGraph(g, labels)


def wheel(n: int) -> UndirectedGraph:
    """Cycle on vertices 0..n-1 plus a hub vertex n joined to all."""
    if n < 3:
        raise ValueError("wheel requires cycle length >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return UndirectedGraph.from_edges(n + 1, edges)


def hypercube(d: int) -> UndirectedGraph:
    """The d-dimensional cube on vertices 0..2^d-1 (bitstring adjacency)."""
    if d < 1:
        raise ValueError("hypercube requires dimension >= 1")
    n = 1 << d
    edges = [(x, x ^ (1 << b)) for x in range(n) for b in range(d) if x < x ^ (1 << b)]
    return UndirectedGraph.from_edges(n, edges)


@dataclass(frozen=True)
class NamedConstruction:
    name: str
    obj: Digraph | UndirectedGraph | LabeledGraph
    expected_properties: tuple[str, ...]
    comments: tuple[str, ...]

    @property
    def filename(self) -> str:
        if isinstance(self.obj, Digraph):
            return f"{self.name}.dg"
        if isinstance(self.obj, LabeledGraph):
            return f"{self.name}.lg"
        return f"{self.name}.ug"


def _property_checks():
    # deferred imports: verification and labeling sit above this module
    from .labeling import is_link_irregular_orientable, verify_labeling
    from .verify import is_link_irregular

    return {
        "tournament": lambda d: d.is_tournament(),
        "oriented": lambda d: d.is_oriented(),
        "eulerian": lambda d: d.is_eulerian(),
        "link-irregular": lambda d: is_link_irregular(d).is_irregular,
        "2-out-regular": lambda d: all(d.out_degree(v) == 2 for v in range(d.n)),
        "4-in-4-out-regular": lambda d: all(
            (d.out_degree(v), d.in_degree(v)) == (4, 4) for v in range(d.n)),
        "triangle-in-underlying": lambda d: d.underlying_graph().contains_triangle(),
        "labeling-verifies": lambda lg: verify_labeling(lg)[0],
        "not-link-irregular-orientable": lambda g: not is_link_irregular_orientable(g)[0],
    }


def check_properties(nc: NamedConstruction) -> list[str]:
    """Names of expected properties that fail (empty when all hold)."""
    checks = _property_checks()
    return [p for p in nc.expected_properties if not checks[p](nc.obj)]


_SHIFTED = "vertex labels are 0-based (source drawing used 1-based labels)"


def corpus() -> dict[str, NamedConstruction]:
    """All named constructions, keyed by name."""
    left, right = five_vertex_pair()
    graph7, labeled7 = counterexample_graph()
    entries = [
        NamedConstruction(
            "five_a", left, ("oriented", "link-irregular", "triangle-in-underlying"),
            ("five_a: link-irregular digraph on 5 vertices (one of a non-isomorphic pair)",
             _SHIFTED)),
        NamedConstruction(
            "five_b", right, ("oriented", "link-irregular", "triangle-in-underlying"),
            ("five_b: link-irregular digraph on 5 vertices (one of a non-isomorphic pair)",
             _SHIFTED)),
        NamedConstruction(
            "d6", d6(), ("tournament", "link-irregular"),
            ("d6: link-irregular tournament on 6 vertices", _SHIFTED)),
        NamedConstruction(
            "d7", d7(), ("tournament", "link-irregular"),
            ("d7: d6 extended by a dominating vertex",)),
        NamedConstruction(
            "d8", d8(), ("tournament", "link-irregular"),
            ("d8: d7 extended by a dominated vertex",)),
        NamedConstruction(
            "two_out_regular_6", two_out_regular_6(),
            ("oriented", "2-out-regular", "link-irregular"),
            ("two_out_regular_6: link-irregular, every vertex has outdegree 2",)),
        NamedConstruction(
            "regular_tournament_9", regular_tournament_9(),
            ("tournament", "4-in-4-out-regular", "link-irregular"),
            ("regular_tournament_9: link-irregular regular tournament on 9 vertices",)),
        NamedConstruction(
            "counterexample", graph7, ("not-link-irregular-orientable",),
            ("counterexample: 2-labelable but not link-irregular orientable", _SHIFTED)),
        NamedConstruction(
            "counterexample_labeled", labeled7, ("labeling-verifies",),
            ("counterexample_labeled: link-irregular 2-labeling (1=red, 2=blue)",
             _SHIFTED)),
    ]
    return {nc.name: nc for nc in entries}


def corpus_dir():
    return resources.files("linkirr") / "corpus"


def build_named(name: str) -> NamedConstruction:
    """Look up a corpus entry, or build a parametric one from a name
    like ``circulant-5-2``, ``wheel-4`` or ``hypercube-3``."""
    entries = corpus()
    if name in entries:
        return entries[name]
    parts = name.split("-")
    try:
        if parts[0] == "circulant" and len(parts) == 3:
            n, k = int(parts[1]), int(parts[2])
            return NamedConstruction(
                name, circulant(n, k), ("eulerian",),
                (f"circulant-{n}-{k}: arcs i -> i+j (mod {n}) for j = 1..{k}",))
        if parts[0] == "wheel" and len(parts) == 2:
            return NamedConstruction(name, wheel(int(parts[1])), (), (name,))
        if parts[0] == "hypercube" and len(parts) == 2:
            return NamedConstruction(name, hypercube(int(parts[1])), (), (name,))
    except ValueError as exc:
        raise ValueError(f"bad parameters in construction name {name!r}: {exc}") from None
    raise KeyError(f"unknown construction {name!r}")
