"""Directed links and their isomorphism-invariant signatures.

The link of a vertex is the subdigraph induced by its combined out- and
in-neighborhood (the vertex itself excluded). Signatures collect order,
size, sorted degree sequences and the sorted per-vertex directed-3-cycle
participation counts; equal signatures are necessary (not sufficient)
for isomorphism, which makes them the standard prefilter throughout the
package.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Digraph


def link(d: Digraph, v: int) -> Digraph:
    """Induced subdigraph on N+(v) | N-(v); empty for an isolated vertex."""
    if not 0 <= v < d.n:
        raise ValueError(f"vertex {v} outside [0,{d.n})")
    return d.induced_subdigraph(d.neighbors(v))


def directed_triangles_through(d: Digraph, v: int) -> int:
    """Number of directed 3-cycles (arc triples u->w->x->u) containing v.

    A digon is not a directed 3-cycle; in digraphs with digons a triangle
    whose arcs run both ways around counts once per cyclic arc triple.
    """
    if not 0 <= v < d.n:
        raise ValueError(f"vertex {v} outside [0,{d.n})")
    count = 0
    for a in d.out_neighbors(v):
        # third vertices closing v -> a -> b -> v
        count += (d.out_bits[a] & d.in_bits[v]).bit_count()
    return count


def directed_triangle_total(d: Digraph) -> int:
    return sum(directed_triangles_through(d, v) for v in range(d.n)) // 3


@dataclass(frozen=True)
class Signature:
    """Isomorphism-invariant fingerprint of a digraph."""

    order: int
    size: int
    in_seq: tuple[int, ...]
    out_seq: tuple[int, ...]
    tri_seq: tuple[int, ...]
    tri_total: int


def signature(d: Digraph) -> Signature:
    tri = [directed_triangles_through(d, v) for v in range(d.n)]
    return Signature(
        order=d.n,
        size=d.size,
        in_seq=tuple(sorted(d.in_degree(v) for v in range(d.n))),
        out_seq=tuple(sorted(d.out_degree(v) for v in range(d.n))),
        tri_seq=tuple(sorted(tri)),
        tri_total=sum(tri) // 3,
    )


@dataclass(frozen=True)
class LinkProfile:
    """Per-vertex (link, signature) pairs of a digraph."""

    entries: tuple[tuple[Digraph, Signature], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def link(self, v: int) -> Digraph:
        return self.entries[v][0]

    def sig(self, v: int) -> Signature:
        return self.entries[v][1]

    def in_degree_multisets(self) -> list[tuple[int, ...]]:
        return [sig.in_seq for _, sig in self.entries]


def link_profile(d: Digraph) -> LinkProfile:
    entries = []
    for v in range(d.n):
        lk = link(d, v)
        entries.append((lk, signature(lk)))
    return LinkProfile(tuple(entries))
