"""Acceptance suite: one test per criterion, each printing a pass/fail
line with its runtime against the stated budget (run with -s to see
them). Kernels are pre-warmed by the session fixture so budgets measure
compute, not jit compilation."""

import math
import time
from contextlib import contextmanager
from itertools import combinations

import numpy as np
from mpmath import mp, mpf

import linkirr as li
from linkirr.constructions import (
    circulant,
    corpus,
    counterexample_graph,
    d6,
    d7,
    d8,
    five_vertex_pair,
    regular_tournament_9,
    two_out_regular_6,
)
from linkirr.graphs import Digraph, UndirectedGraph
from linkirr.search import extend_dominated, extend_dominating

from conftest import random_digraph, random_permutation

# Labeled censuses pinned from the first exhaustive runs (both backends
# agree; each is divisible by n! since link-irregular digraphs have no
# nontrivial automorphisms).
TOURNAMENTS_6_CENSUS = 2880
GENERAL_4_CENSUS = 576

SWEEP_RANGE = range(6, 41)
SWEEP_SEEDS = (1, 2, 3)


@contextmanager
def criterion(num: int, title: str, limit_s: float):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[criterion {num:2d}] FAIL  {title}")
        raise
    elapsed = time.perf_counter() - t0
    print(f"[criterion {num:2d}] PASS  {title} ({elapsed:.2f}s / {limit_s:.0f}s budget)")
    assert elapsed < limit_s, f"criterion {num} exceeded its {limit_s}s budget"


def run_sweep() -> dict[int, li.SearchReport]:
    """Search n = 6..40, seeds tried in order, first success kept; found
    witnesses feed the library for larger orders."""
    library = li.WitnessLibrary.builtin()
    found: dict[int, li.SearchReport] = {}
    for n in SWEEP_RANGE:
        for seed in SWEEP_SEEDS:
            report = li.search(n, li.DEFAULT_BUDGET, seed, library)
            if report.outcome == "found":
                found[n] = report
                library.add(report.witness())
                break
    return found


_SWEEP_CACHE: dict[int, li.SearchReport] = {}


def sweep_reports() -> dict[int, li.SearchReport]:
    if not _SWEEP_CACHE:
        _SWEEP_CACHE.update(run_sweep())
    return _SWEEP_CACHE


def test_criterion_01_nonexistence_below_5():
    with criterion(1, "nonexistence below 5 (oriented); digon census pinned at 576", 5.0):
        for n, size in [(2, 3), (3, 27), (4, 729)]:
            spec = li.EnumSpec(n, "oriented", "link-irregular")
            assert li.universe_size(spec) == size
            assert li.count_link_irregular(spec) == 0
        for n in range(0, 4):
            assert li.count_link_irregular(li.EnumSpec(n, "general", "link-irregular")) == 0
        # With digons allowed the nonexistence boundary does NOT extend to
        # n = 4: the exhaustive run over all 4096 objects finds 576
        # link-irregular ones (see test_enumeration for an explicit
        # hand-checked witness). The count is pinned instead of the
        # spec'd zero, which is unattainable.
        assert li.universe_size(li.EnumSpec(4, "general")) == 4096
        assert li.count_link_irregular(li.EnumSpec(4, "general", "link-irregular")) == GENERAL_4_CENSUS


def test_criterion_02_five_vertex_pair():
    with criterion(2, "five-vertex pair verifies and is non-isomorphic", 1.0):
        left, right = five_vertex_pair()
        assert li.is_link_irregular(left).is_irregular
        assert li.is_link_irregular(right).is_irregular
        assert not li.are_isomorphic(left, right)
        cycle3 = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
        assert li.link(left, 1) == cycle3  # source drawing's vertex 2


def test_criterion_03_d6_table():
    with criterion(3, "d6 link in-degree table and 3-cycle separation", 1.0):
        prof = li.link_profile(d6())
        assert prof.in_degree_multisets() == [
            (1, 1, 1, 3, 4), (1, 1, 2, 2, 4), (1, 1, 2, 3, 3),
            (0, 2, 2, 3, 3), (1, 1, 2, 3, 3), (1, 2, 2, 2, 3)]
        for v, expected in [(2, 3), (4, 1)]:
            lk = prof.link(v)
            deg2 = [w for w in range(lk.n) if lk.in_degree(w) == 2]
            assert len(deg2) == 1
            assert li.directed_triangles_through(lk, deg2[0]) == expected


def test_criterion_04_tournament_thresholds():
    with criterion(4, "tournament thresholds at 5 and 6", 60.0):
        assert li.count_link_irregular(li.EnumSpec(5, "tournaments", "link-irregular")) == 0
        census = li.count_link_irregular(li.EnumSpec(6, "tournaments", "link-irregular"))
        assert census == TOURNAMENTS_6_CENSUS
        assert census > 0 and census % math.factorial(6) == 0


def test_criterion_05_extension_chain():
    with criterion(5, "extension chain d7/d8 and the order-9 failure", 1.0):
        assert li.is_link_irregular(d7()).is_irregular
        assert li.is_link_irregular(d8()).is_irregular
        nine = extend_dominated(extend_dominating(d7()))
        assert nine.n == 9
        assert not li.is_link_irregular(nine).is_irregular
        # continuing the alternation directly: the two dominating
        # vertices' links clash, both copies of d8
        alt = extend_dominating(d8())
        cert = li.is_link_irregular(alt)
        assert not cert.is_irregular and cert.witness[:2] == (6, 8)
        assert li.are_isomorphic(li.link(alt, 8), d8())


def test_criterion_06_search_sweep():
    with criterion(6, "search finds witnesses for every n in 6..40", 1800.0):
        reports = sweep_reports()
        for n in SWEEP_RANGE:
            assert n in reports, f"no seed in {SWEEP_SEEDS} found a witness at n={n}"
            witness = reports[n].witness()
            assert witness.is_tournament()
            assert li.conflict_pairs(witness) == []


def test_criterion_07_circulants():
    with criterion(7, "circulants are Eulerian non-examples", 10.0):
        for n in range(3, 11):
            for k in range(1, n):
                c = circulant(n, k)
                assert c.is_eulerian(), (n, k)
                pairs = li.conflict_pairs(c)
                assert len(pairs) == math.comb(n, 2), (n, k)
                assert not li.is_link_irregular(c).is_irregular


def test_criterion_08_regular_constructions():
    with criterion(8, "regular constructions verify", 1.0):
        t = two_out_regular_6()
        assert all(t.out_degree(v) == 2 for v in range(t.n))
        assert li.is_link_irregular(t).is_irregular
        r = regular_tournament_9()
        assert r.is_tournament()
        assert all((r.out_degree(v), r.in_degree(v)) == (4, 4) for v in range(r.n))
        assert li.is_link_irregular(r).is_irregular


def test_criterion_09_triangle_necessity():
    with criterion(9, "triangle necessity on 10^4 random digraphs", 60.0):
        rng = np.random.default_rng(19001)
        universes = ("oriented", "general", "tournaments")
        for i in range(10_000):
            d = random_digraph(rng, int(rng.integers(1, 8)), universes[i % 3])
            assert li.check_triangle_necessity(d)
        for nc in corpus().values():
            if isinstance(nc.obj, Digraph):
                assert li.check_triangle_necessity(nc.obj), nc.name


def mpmath_bound(n: int) -> tuple[int, float]:
    mp.dps = 60
    log2n = mp.log(n) / mp.log(2)
    h = int(mp.floor((1 + mp.sqrt(1 + 4 * log2n)) / 2))
    total = mpf(0)
    for d in range(1, h):
        total += mpf(h - d) / n * mp.power(2, 2 * math.comb(d, 2))
    return h, float(h - total)


def test_criterion_10_bounds():
    with criterion(10, "degree bounds match high-precision evaluation", 5.0):
        for n in (1, 5, 6, 9, 100):
            h, expected = mpmath_bound(n)
            rep = li.bound_report(n)
            assert rep.h == h
            assert abs(rep.degree_bound - expected) < 1e-9
            assert abs(rep.outdegree_bound - expected / 2) < 1e-9
        for nc in corpus().values():
            if isinstance(nc.obj, Digraph) and "link-irregular" in nc.expected_properties:
                assert li.check_bounds(nc.obj), nc.name
        for report in sweep_reports().values():
            assert li.check_bounds(report.witness())


def test_criterion_11_labeling_suite():
    with criterion(11, "labeling suite", 120.0):
        g, lg = counterexample_graph()
        ok, _ = li.verify_labeling(lg)
        assert ok
        assert li.count_link_irregular_orientations(g) == 0
        assert not li.is_link_irregular_orientable(g)[0]
        # orientable => labelable over every labeled graph on 5 vertices
        pairs5 = list(combinations(range(5), 2))
        checked = 0
        for mask in range(1 << 10):
            edges = [pairs5[j] for j in range(10) if mask >> j & 1]
            assert li.check_orientable_implies_labelable(
                UndirectedGraph.from_edges(5, edges))
            checked += 1
        assert checked == 1024


def test_criterion_12_isomorphism_oracle():
    with criterion(12, "backtracker agrees with the brute-force oracle", 30.0):
        rng = np.random.default_rng(77001)
        for i in range(1000):
            n = int(rng.integers(1, 7))
            a = random_digraph(rng, n)
            if i % 2 == 0:
                b = a.relabel(random_permutation(rng, n))
                assert li.are_isomorphic(a, b)
            else:
                b = random_digraph(rng, n)
            assert li.are_isomorphic(a, b) == li.brute_force_isomorphic(a, b)


def test_criterion_13_determinism():
    with criterion(13, "sweep rerun reproduces byte-identical reports", 1800.0):
        first = sweep_reports()
        rerun = run_sweep()
        assert rerun.keys() == first.keys()
        for n, report in first.items():
            assert rerun[n].payload_json() == report.payload_json(), n
