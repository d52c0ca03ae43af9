"""Backend dispatch for the hot kernels.

The environment variable ``LINKIRR_BACKEND`` selects the implementation:
``numba`` (default when importable) for the jitted kernels, ``numpy``
for the pure fallback. Both expose identical functions and results;
``benchmarks/bench_backends.py`` measures the gap.
"""

from __future__ import annotations

import os
import warnings

from . import _backend_py

UNIVERSE_TOURNAMENTS = _backend_py.UNIVERSE_TOURNAMENTS
UNIVERSE_ORIENTED = _backend_py.UNIVERSE_ORIENTED
UNIVERSE_GENERAL = _backend_py.UNIVERSE_GENERAL

_requested = os.environ.get("LINKIRR_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(f"LINKIRR_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

if _requested == "numpy":
    _impl = _backend_py
    BACKEND = "numpy"
else:
    try:
        from . import _backend_nb as _impl
        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        warnings.warn("numba unavailable; falling back to the numpy backend")
        _impl = _backend_py
        BACKEND = "numpy"

sig_width = _backend_py.sig_width
link_sig_rows = _impl.link_sig_rows
tournament_link_sig_rows = _impl.tournament_link_sig_rows
adj_iso_map = _impl.adj_iso_map
conflict_count = _impl.conflict_count
is_link_irregular_adj = _impl.is_link_irregular_adj
count_link_irregular_range = _impl.count_link_irregular_range
scan_orientations = _impl.scan_orientations
hill_climb_run = _impl.hill_climb_run


def backend_name() -> str:
    return BACKEND


def warm_up() -> None:
    """Trigger jit compilation on tiny inputs so first real calls are fast."""
    import numpy as np

    adj = np.zeros((3, 3), dtype=np.uint8)
    adj[0, 1] = adj[1, 2] = adj[2, 0] = 1
    link_sig_rows(adj)
    tournament_link_sig_rows(adj)
    conflict_count(adj, True)
    is_link_irregular_adj(adj, False)
    adj_iso_map(adj.astype(np.int64), adj.astype(np.int64))
    count_link_irregular_range(3, UNIVERSE_ORIENTED, 0, 3)
    eu = np.array([0, 1, 2], dtype=np.int64)
    ev = np.array([1, 2, 0], dtype=np.int64)
    scan_orientations(3, eu, ev, 0, 4, False)
    hill_climb_run(adj.copy(), eu, ev, np.zeros(2, dtype=np.int64))
