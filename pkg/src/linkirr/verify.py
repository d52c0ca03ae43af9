"""Link-irregularity certificates, conflict counting, and degree bounds.

A digraph is link-irregular when all per-vertex links are pairwise
non-isomorphic. Conflicts (pairs with isomorphic links) are found by
grouping links on equal signatures and resolving each group into
isomorphism classes with the exact backtracker, so the count is exact.

Desk rule: digraphs on fewer than 2 vertices are reported not-irregular
(existence starts at order 5; the vacuous single-vertex case is
excluded deliberately). Those certificates carry no witness pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .graphs import Digraph
from .iso import find_isomorphism
from .links import LinkProfile, Signature, link_profile

IRREGULAR = "irregular"
NOT_IRREGULAR = "not-irregular"


def _conflicts(profile: LinkProfile) -> list[tuple[int, int]]:
    groups: dict[Signature, list[int]] = {}
    for v in range(len(profile)):
        groups.setdefault(profile.sig(v), []).append(v)
    pairs: list[tuple[int, int]] = []
    for members in groups.values():
        if len(members) < 2:
            continue
        # split the signature group into isomorphism classes; one
        # comparison against each class representative suffices
        classes: list[list[int]] = []
        for v in members:
            for cls in classes:
                if find_isomorphism(profile.link(v), profile.link(cls[0])) is not None:
                    cls.append(v)
                    break
            else:
                classes.append([v])
        for cls in classes:
            pairs.extend(combinations(cls, 2))
    return sorted(pairs)


def conflict_pairs(d: Digraph) -> list[tuple[int, int]]:
    """All unordered vertex pairs whose links are isomorphic, sorted.

    The number of such pairs is the local-search objective; zero means
    link-irregular (for n >= 2).
    """
    return _conflicts(link_profile(d))


@dataclass(frozen=True)
class Certificate:
    """Outcome of a link-irregularity check.

    ``witness`` holds the lexicographically least conflicting pair and
    an explicit isomorphism between their links; it is None exactly for
    irregular verdicts and for the vacuous orders n < 2.
    """

    verdict: str
    n: int
    size: int
    witness: tuple[int, int, tuple[int, ...]] | None
    profile: tuple[Signature, ...]

    @property
    def is_irregular(self) -> bool:
        return self.verdict == IRREGULAR

    def to_record(self) -> dict:
        """Serializable summary (fields in documented order)."""
        return {
            "verdict": self.verdict,
            "n": self.n,
            "size": self.size,
            "witness_pair": list(self.witness[:2]) if self.witness else None,
            "witness_mapping": list(self.witness[2]) if self.witness else None,
            "planar_edge_bound": max(3 * self.n - 6, 0),
            "link_orders": [sig.order for sig in self.profile],
        }


def is_link_irregular(d: Digraph) -> Certificate:
    """Decide link-irregularity and certify the verdict."""
    profile = link_profile(d)
    sigs = tuple(sig for _, sig in profile.entries)
    if d.n < 2:
        return Certificate(NOT_IRREGULAR, d.n, d.size, None, sigs)
    pairs = _conflicts(profile)
    if not pairs:
        return Certificate(IRREGULAR, d.n, d.size, None, sigs)
    u, v = pairs[0]
    mapping = find_isomorphism(profile.link(u), profile.link(v))
    assert mapping is not None
    return Certificate(NOT_IRREGULAR, d.n, d.size, (u, v, mapping), sigs)


@dataclass(frozen=True)
class BoundReport:
    """Degree thresholds every link-irregular digraph must meet."""

    n: int
    h: int
    degree_bound: float
    outdegree_bound: float


def bound_report(n: int) -> BoundReport:
    """Evaluate the minimum-degree bound at order n.

    h is the largest integer with 2^(2*C(h,2)) <= n, in closed form
    floor((1 + sqrt(1 + 4*log2(n))) / 2); the bound subtracts from h the
    weighted count of low-degree vertices a link-irregular digraph can
    afford, (h-d)/n * 2^(2*C(d,2)) for d = 1..h-1 (with C(1,2) = 0).
    Logarithms are base 2 throughout: the derivation counts 2^(2*C(d,2))
    isomorphism classes of digraphs on d vertices.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    h = int((1 + math.sqrt(1 + 4 * math.log2(n))) // 2)
    total = 0.0
    for d in range(1, h):
        total += (h - d) / n * 2 ** (2 * math.comb(d, 2))
    degree_bound = h - total
    return BoundReport(n=n, h=h, degree_bound=degree_bound,
                       outdegree_bound=degree_bound / 2)


def check_bounds(d: Digraph) -> bool:
    """True iff d meets both necessary degree conditions: some vertex of
    degree >= the degree bound and some vertex of outdegree >= half of it."""
    if d.n == 0:
        return False
    report = bound_report(d.n)
    has_degree = any(d.degree(v) >= report.degree_bound for v in range(d.n))
    has_outdegree = any(d.out_degree(v) >= report.outdegree_bound for v in range(d.n))
    return has_degree and has_outdegree


def check_triangle_necessity(d: Digraph) -> bool:
    """Instance of the implication: link-irregular => the underlying
    graph contains a 3-cycle."""
    if d.underlying_graph().contains_triangle():
        return True
    return not is_link_irregular(d).is_irregular
