"""Core digraph and undirected-graph value types.

Vertices are 0-based contiguous integers. Both graph classes are immutable
after construction and hashable, so they can be shared freely across
workers. Adjacency is kept as one Python-int bitmask per vertex (bit j of
``out_bits[i]`` means the arc i->j exists), which keeps neighborhood
queries and induced-subgraph extraction cheap up to ``MAX_VERTICES``.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

# Row-wise bit adjacency is exercised only up to this order; callers that
# need more should not exist at desk scale.
MAX_VERTICES = 128


def _check_order(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    if n > MAX_VERTICES:
        raise ValueError(f"vertex count {n} exceeds supported maximum {MAX_VERTICES}")


def _bits_to_indices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class Digraph:
    """Loopless directed graph on vertices 0..n-1.

    Digons (a pair of opposite arcs) are representable; routines that
    require an orientation check :meth:`is_oriented` explicitly.
    """

    __slots__ = ("n", "arcs", "out_bits", "in_bits")

    def __init__(self, n: int, arcs: tuple[tuple[int, int], ...],
                 out_bits: tuple[int, ...], in_bits: tuple[int, ...]):
        # Internal constructor: inputs already validated and canonical.
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "out_bits", out_bits)
        object.__setattr__(self, "in_bits", in_bits)

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    @classmethod
    def from_arcs(cls, n: int, arcs) -> "Digraph":
        """Build a digraph, rejecting self-loops, out-of-range endpoints
        and duplicate arcs (each reported distinctly)."""
        _check_order(n)
        out_bits = [0] * n
        in_bits = [0] * n
        canonical = []
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-loop ({u},{v}) is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) has an endpoint outside [0,{n})")
            if out_bits[u] >> v & 1:
                raise ValueError(f"duplicate arc ({u},{v})")
            out_bits[u] |= 1 << v
            in_bits[v] |= 1 << u
            canonical.append((u, v))
        canonical.sort()
        return cls(n, tuple(canonical), tuple(out_bits), tuple(in_bits))

    @classmethod
    def from_matrix(cls, adj: np.ndarray) -> "Digraph":
        """Build from a 0/1 adjacency matrix (adj[u, v] != 0 means u->v)."""
        n = adj.shape[0]
        us, vs = np.nonzero(adj)
        return cls.from_arcs(n, list(zip(us.tolist(), vs.tolist())))

    def to_matrix(self) -> np.ndarray:
        """Adjacency matrix as uint8 (the kernel-facing representation)."""
        adj = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.arcs:
            adj[u, v] = 1
        return adj

    @property
    def size(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_bits[u] >> v & 1)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return _bits_to_indices(self.out_bits[v])

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return _bits_to_indices(self.in_bits[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Out- and in-neighbors combined (the link's vertex set)."""
        return _bits_to_indices(self.out_bits[v] | self.in_bits[v])

    def out_degree(self, v: int) -> int:
        return self.out_bits[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_bits[v].bit_count()

    def degree(self, v: int) -> int:
        """Underlying-graph degree; equals d+ + d- when there is no digon."""
        return (self.out_bits[v] | self.in_bits[v]).bit_count()

    def degrees(self) -> list[tuple[int, int, int]]:
        """Per-vertex (d+, d-, d) triples."""
        return [(self.out_degree(v), self.in_degree(v), self.degree(v))
                for v in range(self.n)]

    def underlying_graph(self) -> "UndirectedGraph":
        """Forget orientation; a digon collapses to a single edge."""
        edges = {(u, v) if u < v else (v, u) for u, v in self.arcs}
        return UndirectedGraph.from_edges(self.n, sorted(edges))

    def induced_subdigraph(self, vertices) -> "Digraph":
        """Induced subdigraph on ``vertices``, relabeled 0..k-1 in the
        ascending order of the original labels."""
        sub = sorted(set(vertices))
        for v in sub:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} outside [0,{self.n})")
        pos = {v: i for i, v in enumerate(sub)}
        arcs = [(pos[u], pos[v]) for u, v in self.arcs if u in pos and v in pos]
        return Digraph.from_arcs(len(sub), arcs)

    def relabel(self, perm) -> "Digraph":
        """Apply the bijection v -> perm[v] to all arcs."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a bijection on the vertex set")
        return Digraph.from_arcs(self.n, [(perm[u], perm[v]) for u, v in self.arcs])

    def is_oriented(self) -> bool:
        """True when no digon is present."""
        return all(not (self.out_bits[u] >> v & 1 and self.out_bits[v] >> u & 1)
                   for u, v in self.arcs)

    def is_tournament(self) -> bool:
        """Oriented with exactly one arc per unordered vertex pair."""
        if len(self.arcs) != self.n * (self.n - 1) // 2:
            return False
        full = (1 << self.n) - 1
        return all((self.out_bits[v] | self.in_bits[v]) == full ^ (1 << v)
                   and not self.out_bits[v] & self.in_bits[v]
                   for v in range(self.n))

    def is_strongly_connected(self) -> bool:
        if self.n <= 1:
            return True
        return (self._reach(0, self.out_bits) == (1 << self.n) - 1
                and self._reach(0, self.in_bits) == (1 << self.n) - 1)

    def _reach(self, start: int, rows: tuple[int, ...]) -> int:
        seen = 1 << start
        frontier = rows[start] & ~seen
        while frontier:
            seen |= frontier
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= rows[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
        return seen

    def is_eulerian(self) -> bool:
        """Strongly connected with d+(v) = d-(v) at every vertex."""
        return (self.is_strongly_connected()
                and all(self.out_degree(v) == self.in_degree(v)
                        for v in range(self.n)))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Digraph)
                and self.n == other.n and self.arcs == other.arcs)

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={list(self.arcs)})"


class UndirectedGraph:
    """Simple loopless undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "bits")

    def __init__(self, n: int, edges: tuple[tuple[int, int], ...],
                 bits: tuple[int, ...]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("UndirectedGraph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges) -> "UndirectedGraph":
        _check_order(n)
        bits = [0] * n
        canonical = []
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop ({a},{b}) is not allowed")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a},{b}) has an endpoint outside [0,{n})")
            u, v = (a, b) if a < b else (b, a)
            if bits[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u},{v})")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
            canonical.append((u, v))
        canonical.sort()
        return cls(n, tuple(canonical), tuple(bits))

    @classmethod
    def complete(cls, n: int) -> "UndirectedGraph":
        return cls.from_edges(n, combinations(range(n), 2))

    @property
    def size(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.bits[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return _bits_to_indices(self.bits[v])

    def degree(self, v: int) -> int:
        return self.bits[v].bit_count()

    def contains_triangle(self) -> bool:
        """True iff some three vertices are mutually adjacent."""
        for u, v in self.edges:
            if self.bits[u] & self.bits[v]:
                return True
        return False

    def induced_subgraph(self, vertices) -> "UndirectedGraph":
        sub = sorted(set(vertices))
        for v in sub:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} outside [0,{self.n})")
        pos = {v: i for i, v in enumerate(sub)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return UndirectedGraph.from_edges(len(sub), edges)

    def relabel(self, perm) -> "UndirectedGraph":
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a bijection on the vertex set")
        return UndirectedGraph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def to_matrix(self) -> np.ndarray:
        adj = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges:
            adj[u, v] = 1
            adj[v, u] = 1
        return adj

    def __eq__(self, other) -> bool:
        return (isinstance(other, UndirectedGraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, edges={list(self.edges)})"


class LabeledGraph:
    """Undirected graph with a positive-integer label on every edge."""

    __slots__ = ("base", "labels")

    def __init__(self, base: UndirectedGraph, labels: dict[tuple[int, int], int]):
        normalized = {}
        for (a, b), lab in labels.items():
            u, v = (a, b) if a < b else (b, a)
            if not base.has_edge(u, v):
                raise ValueError(f"label on non-edge ({u},{v})")
            if lab < 1:
                raise ValueError(f"label {lab} on edge ({u},{v}) must be >= 1")
            normalized[(u, v)] = lab
        missing = [e for e in base.edges if e not in normalized]
        if missing:
            raise ValueError(f"unlabeled edges: {missing}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "labels", normalized)

    def __setattr__(self, name, value):
        raise AttributeError("LabeledGraph is immutable")

    @property
    def n(self) -> int:
        return self.base.n

    def label_of(self, u: int, v: int) -> int:
        return self.labels[(u, v) if u < v else (v, u)]

    def induced_sublabeled(self, vertices) -> "LabeledGraph":
        """Induced labeled subgraph, vertices relabeled 0..k-1 ascending;
        labels are inherited unchanged."""
        sub = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(sub)}
        g = self.base.induced_subgraph(sub)
        labels = {(pos[u], pos[v]): lab for (u, v), lab in self.labels.items()
                  if u in pos and v in pos}
        return LabeledGraph(g, labels)

    def to_matrix(self) -> np.ndarray:
        adj = np.zeros((self.n, self.n), dtype=np.int64)
        for (u, v), lab in self.labels.items():
            adj[u, v] = lab
            adj[v, u] = lab
        return adj

    def __eq__(self, other) -> bool:
        return (isinstance(other, LabeledGraph)
                and self.base == other.base and self.labels == other.labels)

    def __hash__(self) -> int:
        return hash((self.base, tuple(sorted(self.labels.items()))))

    def __repr__(self) -> str:
        return f"LabeledGraph(n={self.n}, labels={dict(sorted(self.labels.items()))})"


def two_degree_coincidence(g: UndirectedGraph) -> tuple[int, int]:
    """Some pair of distinct vertices with equal degree.

    Such a pair always exists for n >= 2 (pigeonhole on degrees); the
    lexicographically least one is returned for determinism.
    """
    if g.n < 2:
        raise ValueError("need at least 2 vertices")
    first_of_degree: dict[int, int] = {}
    best = None
    for v in range(g.n):
        d = g.degree(v)
        if d in first_of_degree:
            pair = (first_of_degree[d], v)
            if best is None or pair < best:
                best = pair
        else:
            first_of_degree[d] = v
    assert best is not None  # pigeonhole: n vertices, degrees in [0, n-1] minus one
    return best
