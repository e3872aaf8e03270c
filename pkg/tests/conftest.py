import numpy as np
import pytest

from flipsearch import Factor, build_factor_graph

# 2x3 grid: variables 0..5, row 0 = (0,1,2), row 1 = (3,4,5)
GRID_EDGES = [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]


def grid_graph():
    factors = [Factor((a, b), (0.0, 1.0, 1.0, 0.0)) for a, b in GRID_EDGES]
    return build_factor_graph(6, factors)


def trap_graph():
    """Two variables whose unary-optimal configuration (0,0) is a single-flip
    local optimum; the global optimum is (1,1)."""
    return build_factor_graph(
        2,
        [
            Factor((0,), (0.0, 0.5)),
            Factor((1,), (0.0, 0.5)),
            Factor((0, 1), (2.0, 2.0, 2.0, 0.0)),
        ],
    )


def random_graph(rng: np.random.Generator, m: int, max_arity: int = 4,
                 extra_factors: int | None = None, with_unaries: bool = True):
    """A random model: optional unaries plus random higher-order factors."""
    factors = []
    if with_unaries:
        for v in range(m):
            factors.append(Factor((v,), tuple(rng.random(2))))
    if extra_factors is None:
        extra_factors = int(rng.integers(1, 2 * m))
    for _ in range(extra_factors):
        k = min(int(rng.integers(2, max_arity + 1)), m)
        scope = tuple(int(x) for x in rng.choice(m, size=k, replace=False))
        factors.append(Factor(scope, tuple(rng.random(2**k) * 2.0 - 1.0)))
    return build_factor_graph(m, factors)


@pytest.fixture
def grid():
    return grid_graph()


@pytest.fixture
def trap():
    return trap_graph()
