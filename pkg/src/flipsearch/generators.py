"""Seeded generators for the two synthetic model families.

Randomness comes from numpy's PCG64 with an explicit 64-bit seed, so the
same spec yields bit-identical models on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Factor, FactorGraph, build_factor_graph

import numpy as np

__all__ = [
    "IsingSpec",
    "SubgraphGridSpec",
    "generate_ising",
    "generate_subgraph_grid",
    "junction_potential",
]

# Penalty by number of selected edges at a 4-edge junction; dead ends are
# effectively forbidden, branches merely discouraged.
_JUNCTION_TABLE = (0.0, 100.0, 0.6, 1.2, 2.4)


@dataclass(frozen=True)
class IsingSpec:
    height: int
    width: int
    alpha: float
    seed: int

    def __post_init__(self):
        if self.height < 1 or self.width < 1:
            raise ValueError("grid dimensions must be positive")
        if self.alpha < 0:
            raise ValueError("alpha must be non-negative")


@dataclass(frozen=True)
class SubgraphGridSpec:
    cell_height: int
    cell_width: int
    seed: int

    def __post_init__(self):
        if self.cell_height < 2 or self.cell_width < 2:
            raise ValueError("cell grid must be at least 2x2 to have junctions")


def _random_unaries(m: int, rng: np.random.Generator) -> list[Factor]:
    # E(0) uniform on [0,1), E(1) its complement
    factors = []
    for v in range(m):
        e0 = float(rng.random())
        factors.append(Factor(scope=(v,), table=(e0, 1.0 - e0)))
    return factors


def generate_ising(spec: IsingSpec) -> FactorGraph:
    """Grid model: random complementary unaries plus a disagreement penalty
    of `alpha` on every 4-neighbor edge.

    Variables are row-major over grid points; pair factors list all
    horizontal edges row-major, then all vertical edges row-major.
    """
    h, w = spec.height, spec.width
    m = h * w
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    factors = _random_unaries(m, rng)
    pair = (0.0, spec.alpha, spec.alpha, 0.0)
    for i in range(h):
        for j in range(w - 1):
            v = i * w + j
            factors.append(Factor(scope=(v, v + 1), table=pair))
    for i in range(h - 1):
        for j in range(w):
            v = i * w + j
            factors.append(Factor(scope=(v, v + w), table=pair))
    return build_factor_graph(m, factors)


def junction_potential(s: int) -> float:
    """Penalty for a 4-edge junction with `s` selected edges."""
    if not 0 <= s <= 4:
        raise ValueError(f"junction edge count must be in 0..4, got {s}")
    return _JUNCTION_TABLE[s]


def generate_subgraph_grid(spec: SubgraphGridSpec) -> FactorGraph:
    """Edge-selection model on an H x W cell grid.

    Variables are the interior cell boundaries: H-1 rows of W horizontal
    boundaries (row-major, first), then H rows of W-1 vertical boundaries
    (row-major). Each of the (H-1)(W-1) interior junctions, where two
    horizontal and two vertical boundaries meet, carries a fourth-order
    factor scoring the number of selected boundaries; unaries are drawn as
    in generate_ising.
    """
    h, w = spec.cell_height, spec.cell_width
    n_horizontal = (h - 1) * w
    m = n_horizontal + h * (w - 1)
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    factors = _random_unaries(m, rng)

    def horizontal(i: int, j: int) -> int:
        # boundary between cells (i, j) and (i+1, j)
        return i * w + j

    def vertical(i: int, j: int) -> int:
        # boundary between cells (i, j) and (i, j+1)
        return n_horizontal + i * (w - 1) + j

    table = tuple(
        _JUNCTION_TABLE[((a >> 3) & 1) + ((a >> 2) & 1) + ((a >> 1) & 1) + (a & 1)]
        for a in range(16)
    )
    for i in range(1, h):
        for j in range(1, w):
            scope = (
                horizontal(i - 1, j - 1),
                horizontal(i - 1, j),
                vertical(i - 1, j - 1),
                vertical(i, j - 1),
            )
            factors.append(Factor(scope=scope, table=table))
    return build_factor_graph(m, factors)
