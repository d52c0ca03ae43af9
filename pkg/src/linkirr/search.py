"""Three-stage randomized search for link-irregular tournaments.

Stage order is random sampling, hill climbing over arc reversals, then
seeded extension of a stored witness; the first success wins. Default
budgets are 300 random attempts, 6000 steps x 5 restarts of hill
climbing, and 50 seeded attempts.

Reproducibility: all randomness flows from one nonnegative integer
seed. Each task (random attempt, restart, seeded attempt) draws from
its own PCG64 generator seeded with SeedSequence((seed, stage, task)),
stages numbered random=0, hillclimb=1, seeded=2. Tasks may run
concurrently (``jobs``); the winner is always the successful task of
lowest index and reported totals cover tasks up to the winner only, so
identical (n, budget, seed, library) inputs reproduce bit-identical
reports at any worker count. The wall-clock field is excluded from the
deterministic payload.

The hill-climb objective is the number of link-isomorphic vertex pairs
(the definition's direct violation count). A uniformly random arc is
reversed each step; the reversal is kept iff the count does not
increase (sideways moves escape plateaus), so the tracked objective is
non-increasing within a restart.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

import numpy as np

from . import kernels
from .arcio import loads_digraph, write_path
from .graphs import Digraph
from .verify import conflict_pairs

STAGE_RANDOM = 0
STAGE_HILLCLIMB = 1
STAGE_SEEDED = 2

FOUND = "found"
FAILED = "failed"


@dataclass(frozen=True)
class SearchBudget:
    random_attempts: int = 300
    hc_steps: int = 6000
    hc_restarts: int = 5
    seeded_attempts: int = 50

    def __post_init__(self):
        for name in ("random_attempts", "hc_steps", "hc_restarts", "seeded_attempts"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class SearchReport:
    """Reproducible record of one search run."""

    n: int
    outcome: str
    strategy: str
    rng_seed: int
    arcs: tuple[tuple[int, int], ...] | None
    attempts_used: int
    flips_used: int
    best_conflicts: int
    elapsed: float

    def witness(self) -> Digraph | None:
        if self.arcs is None:
            return None
        return Digraph.from_arcs(self.n, self.arcs)

    def payload(self) -> dict:
        """Deterministic payload: everything except wall time."""
        return {
            "n": self.n,
            "outcome": self.outcome,
            "strategy": self.strategy,
            "rng_seed": self.rng_seed,
            "arcs": [list(a) for a in self.arcs] if self.arcs is not None else None,
            "attempts_used": self.attempts_used,
            "flips_used": self.flips_used,
            "best_conflicts": self.best_conflicts,
        }

    def payload_json(self) -> str:
        return json.dumps(self.payload(), separators=(",", ":"))

    def log_json(self) -> str:
        record = self.payload()
        record["elapsed"] = round(self.elapsed, 6)
        return json.dumps(record, separators=(",", ":"))


def _stream(seed: int, stage: int, task: int) -> np.random.Generator:
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, stage, task))))


def _pair_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = list(combinations(range(n), 2))
    pu = np.array([u for u, _ in pairs], dtype=np.int64)
    pv = np.array([v for _, v in pairs], dtype=np.int64)
    return pu, pv


def _random_tournament_adj(n: int, rng: np.random.Generator) -> np.ndarray:
    adj = np.zeros((n, n), dtype=np.uint8)
    pu, pv = _pair_arrays(n)
    coins = rng.integers(0, 2, size=len(pu))
    for p in range(len(pu)):
        if coins[p] == 0:
            adj[pu[p], pv[p]] = 1
        else:
            adj[pv[p], pu[p]] = 1
    return adj


def random_tournament(n: int, rng: np.random.Generator) -> Digraph:
    """Orient each unordered pair by an independent fair coin from rng
    (pairs in lexicographic order; 0 keeps u->v)."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return Digraph.from_matrix(_random_tournament_adj(n, rng))


def _arcs_of(adj: np.ndarray) -> tuple[tuple[int, int], ...]:
    us, vs = np.nonzero(adj)
    return tuple(sorted(zip(us.tolist(), vs.tolist())))


def _success(n: int, conflicts: int) -> bool:
    # single-vertex digraphs are never link-irregular
    return n >= 2 and conflicts == 0


@dataclass(frozen=True)
class _TaskResult:
    conflicts: int
    flips: int
    arcs: tuple[tuple[int, int], ...] | None


def _run_tasks(count: int, jobs: int, run) -> tuple[int | None, list[_TaskResult]]:
    """Execute tasks 0..count-1; the winner is the lowest-index success.

    Returns (winner index or None, results for tasks 0..winner) so that
    aggregated totals are identical whether tasks ran serially (with
    early exit) or concurrently.
    """
    if jobs <= 1:
        results: list[_TaskResult] = []
        for i in range(count):
            results.append(run(i))
            if results[-1].arcs is not None:
                return i, results
        return None, results
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        all_results = list(pool.map(run, range(count)))
    for i, res in enumerate(all_results):
        if res.arcs is not None:
            return i, all_results[:i + 1]
    return None, all_results


def _stage_report(n: int, seed: int, strategy: str, attempts_cap: int,
                  winner: int | None, results: list[_TaskResult],
                  t0: float) -> SearchReport:
    flips = sum(r.flips for r in results)
    if winner is not None:
        return SearchReport(
            n=n, outcome=FOUND, strategy=strategy, rng_seed=seed,
            arcs=results[winner].arcs, attempts_used=winner + 1,
            flips_used=flips, best_conflicts=0,
            elapsed=time.perf_counter() - t0)
    best = min((r.conflicts for r in results), default=0)
    return SearchReport(
        n=n, outcome=FAILED, strategy=strategy, rng_seed=seed, arcs=None,
        attempts_used=attempts_cap, flips_used=flips, best_conflicts=best,
        elapsed=time.perf_counter() - t0)


def random_search(n: int, budget: SearchBudget = DEFAULT_BUDGET,
                  seed: int = 0, jobs: int = 1) -> SearchReport:
    """Up to ``random_attempts`` independent samples; stop at the first
    link-irregular tournament."""
    if n < 1:
        raise ValueError("order must be >= 1")
    t0 = time.perf_counter()

    def attempt(i: int) -> _TaskResult:
        adj = _random_tournament_adj(n, _stream(seed, STAGE_RANDOM, i))
        conflicts = int(kernels.conflict_count(adj, True))
        return _TaskResult(conflicts, 0, _arcs_of(adj) if _success(n, conflicts) else None)

    winner, results = _run_tasks(budget.random_attempts, jobs, attempt)
    return _reverify(_stage_report(n, seed, "random", budget.random_attempts,
                                   winner, results, t0))


def _climb(adj: np.ndarray, steps: int, rng: np.random.Generator) -> tuple[int, int]:
    """Run one climb on ``adj`` in place; returns (conflicts, flips)."""
    n = adj.shape[0]
    pu, pv = _pair_arrays(n)
    choices = rng.integers(0, len(pu), size=steps).astype(np.int64)
    conflicts, flips = kernels.hill_climb_run(adj, pu, pv, choices)
    return int(conflicts), int(flips)


def hill_climb_from(start: Digraph, steps: int, seed: int,
                    stage: int = STAGE_HILLCLIMB, task: int = 0) -> tuple[Digraph, int, int]:
    """Climb from an explicit start tournament (exposed for tests and
    for the seeded polish); returns (tournament, conflicts, flips)."""
    if not start.is_tournament():
        raise ValueError("hill climbing requires a tournament start")
    adj = start.to_matrix()
    conflicts, flips = _climb(adj, steps, _stream(seed, stage, task))
    return Digraph.from_matrix(adj), conflicts, flips


def hill_climb(n: int, budget: SearchBudget = DEFAULT_BUDGET,
               seed: int = 0, jobs: int = 1) -> SearchReport:
    """Restarted local search: from a random tournament, reverse a
    uniformly random arc per step, keeping non-worsening moves."""
    if n < 2:
        raise ValueError("hill climbing requires n >= 2")
    t0 = time.perf_counter()

    def restart(i: int) -> _TaskResult:
        rng = _stream(seed, STAGE_HILLCLIMB, i)
        adj = _random_tournament_adj(n, rng)
        conflicts, flips = _climb(adj, budget.hc_steps, rng)
        return _TaskResult(conflicts, flips,
                           _arcs_of(adj) if _success(n, conflicts) else None)

    winner, results = _run_tasks(budget.hc_restarts, jobs, restart)
    return _reverify(_stage_report(n, seed, "hillclimb", budget.hc_restarts,
                                   winner, results, t0))


def extend_dominating(d: Digraph) -> Digraph:
    """Append a vertex with arcs to every existing vertex; the new
    vertex's link is exactly d."""
    if not d.is_tournament():
        raise ValueError("extension requires a tournament")
    return Digraph.from_arcs(d.n + 1, list(d.arcs) + [(d.n, v) for v in range(d.n)])


def extend_dominated(d: Digraph) -> Digraph:
    """Append a vertex with arcs from every existing vertex."""
    if not d.is_tournament():
        raise ValueError("extension requires a tournament")
    return Digraph.from_arcs(d.n + 1, list(d.arcs) + [(v, d.n) for v in range(d.n)])


class WitnessLibrary:
    """Stored link-irregular tournaments, one per order.

    Directory layout: one arc-list file per order named ``w<n>.dg``.
    """

    def __init__(self, witnesses=()):
        self._by_order: dict[int, Digraph] = {}
        for d in witnesses:
            self.add(d)

    @classmethod
    def builtin(cls) -> "WitnessLibrary":
        from .constructions import d6, d7, d8, regular_tournament_9
        return cls([d6(), d7(), d8(), regular_tournament_9()])

    @classmethod
    def from_dir(cls, path) -> "WitnessLibrary":
        lib = cls()
        for file in sorted(Path(path).glob("w*.dg")):
            lib.add(loads_digraph(file.read_text()))
        return lib

    def add(self, d: Digraph) -> None:
        if not d.is_tournament():
            raise ValueError("library witnesses must be tournaments")
        self._by_order[d.n] = d

    def orders(self) -> list[int]:
        return sorted(self._by_order)

    def largest_below(self, n: int) -> Digraph | None:
        candidates = [m for m in self._by_order if m < n]
        return self._by_order[max(candidates)] if candidates else None

    def save_witness(self, directory, d: Digraph) -> Path:
        out = Path(directory) / f"w{d.n}.dg"
        write_path(out, d)
        return out

    def __len__(self) -> int:
        return len(self._by_order)


def seeded_extension(n: int, budget: SearchBudget = DEFAULT_BUDGET,
                     seed: int = 0, library: WitnessLibrary | None = None,
                     jobs: int = 1) -> SearchReport:
    """Grow the largest stored witness of order m < n by n-m fresh
    vertices, orienting every new pair by a fair coin; accept iff
    link-irregular, otherwise polish with one hill-climb round."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if library is None:
        library = WitnessLibrary.builtin()
    base = library.largest_below(n)
    if base is None:
        raise ValueError(f"library has no witness of order below {n}")
    t0 = time.perf_counter()
    pu, pv = _pair_arrays(n)
    new_pairs = [p for p in range(len(pu)) if pv[p] >= base.n]
    base_adj = np.zeros((n, n), dtype=np.uint8)
    base_adj[:base.n, :base.n] = base.to_matrix()

    def attempt(i: int) -> _TaskResult:
        rng = _stream(seed, STAGE_SEEDED, i)
        adj = base_adj.copy()
        coins = rng.integers(0, 2, size=len(new_pairs))
        for j, p in enumerate(new_pairs):
            if coins[j] == 0:
                adj[pu[p], pv[p]] = 1
            else:
                adj[pv[p], pu[p]] = 1
        conflicts = int(kernels.conflict_count(adj, True))
        flips = 0
        if not _success(n, conflicts):
            conflicts, flips = _climb(adj, budget.hc_steps, rng)
        return _TaskResult(conflicts, flips,
                           _arcs_of(adj) if _success(n, conflicts) else None)

    winner, results = _run_tasks(budget.seeded_attempts, jobs, attempt)
    return _reverify(_stage_report(n, seed, "seeded", budget.seeded_attempts,
                                   winner, results, t0))


def _reverify(report: SearchReport) -> SearchReport:
    """Re-check a found witness from its arc list via the independent
    certificate path; never trust the run itself."""
    if report.outcome != FOUND:
        return report
    d = report.witness()
    assert d is not None
    if not d.is_tournament() or conflict_pairs(d):
        raise RuntimeError("search produced an invalid witness; kernel bug")
    return report


def search(n: int, budget: SearchBudget = DEFAULT_BUDGET, seed: int = 0,
           library: WitnessLibrary | None = None, jobs: int = 1) -> SearchReport:
    """Run the stages in order; first success wins. The failure report
    carries the lowest conflict count seen anywhere, and attempts/flips
    accumulate across stages."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if library is None:
        library = WitnessLibrary.builtin()
    t0 = time.perf_counter()
    attempts = 0
    flips = 0
    best: int | None = None

    def merge(report: SearchReport) -> SearchReport:
        return SearchReport(
            n=report.n, outcome=report.outcome, strategy=report.strategy,
            rng_seed=seed, arcs=report.arcs,
            attempts_used=attempts + report.attempts_used,
            flips_used=flips + report.flips_used,
            best_conflicts=(report.best_conflicts if best is None
                            else min(best, report.best_conflicts)),
            elapsed=time.perf_counter() - t0)

    report = random_search(n, budget, seed, jobs)
    if report.outcome == FOUND:
        return merge(report)
    attempts += report.attempts_used
    flips += report.flips_used
    best = report.best_conflicts

    if n >= 2:
        report = hill_climb(n, budget, seed, jobs)
        if report.outcome == FOUND:
            return merge(report)
        attempts += report.attempts_used
        flips += report.flips_used
        best = min(best, report.best_conflicts)

    if library.largest_below(n) is not None:
        report = seeded_extension(n, budget, seed, library, jobs)
        if report.outcome == FOUND:
            return merge(report)
        attempts += report.attempts_used
        flips += report.flips_used
        best = min(best, report.best_conflicts)

    return SearchReport(
        n=n, outcome=FAILED, strategy=report.strategy, rng_seed=seed,
        arcs=None, attempts_used=attempts, flips_used=flips,
        best_conflicts=best if best is not None else 0,
        elapsed=time.perf_counter() - t0)
