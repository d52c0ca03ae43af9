import numpy as np
import pytest

from linkirr import Digraph, kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile the jitted kernels once so timed tests measure compute only
    kernels.warm_up()


def random_digraph(rng: np.random.Generator, n: int, universe: str = "general") -> Digraph:
    """Random digraph with independent pair states (seeded, for property loops)."""
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if universe == "tournaments":
                state = int(rng.integers(1, 3))
            elif universe == "oriented":
                state = int(rng.integers(0, 3))
            else:
                state = int(rng.integers(0, 4))
            if state in (1, 3):
                arcs.append((u, v))
            if state in (2, 3):
                arcs.append((v, u))
    return Digraph.from_arcs(n, arcs)


def random_permutation(rng: np.random.Generator, n: int) -> list[int]:
    return rng.permutation(n).tolist()
