"""Binary-variable factor graphs and incremental energy evaluation.

A model is a set of binary variables plus factors, each factor being an
explicit value table over the joint assignments of its scope. Two variables
are adjacent iff they co-occur in some factor scope; this adjacency is what
"connected subset of variables" refers to throughout the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import kernels

__all__ = [
    "Factor",
    "FactorGraph",
    "Configuration",
    "build_factor_graph",
    "energy",
    "energy_after_flip",
    "flip",
    "neighbors",
]


class ModelError(ValueError):
    """Raised for structurally invalid factors or configurations."""


@dataclass(frozen=True)
class Factor:
    """A potential: an ordered variable scope and a table of 2^arity values.

    The table entry for an assignment is found by reading the scope bits as a
    binary number with the last scope variable as the least significant bit
    (last variable varying fastest).
    """

    scope: tuple[int, ...]
    table: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "scope", tuple(int(v) for v in self.scope))
        object.__setattr__(self, "table", tuple(float(x) for x in self.table))

    @property
    def arity(self) -> int:
        return len(self.scope)

    def value(self, bits: Sequence[int]) -> float:
        idx = 0
        for v in self.scope:
            idx = 2 * idx + int(bits[v])
        return self.table[idx]


@dataclass(frozen=True)
class FactorGraph:
    """Immutable factor graph over binary variables 0..m-1.

    Besides the factor list, flattened CSR-style arrays (scopes, tables,
    variable->factor incidence, variable adjacency) are precomputed so the
    numeric kernels can run without touching Python objects.
    """

    variable_count: int
    factors: tuple[Factor, ...]
    adjacency: tuple[tuple[int, ...], ...]
    incidence: tuple[tuple[int, ...], ...]
    scope_flat: np.ndarray = field(repr=False)
    scope_off: np.ndarray = field(repr=False)
    table_flat: np.ndarray = field(repr=False)
    table_off: np.ndarray = field(repr=False)
    inc_flat: np.ndarray = field(repr=False)
    inc_off: np.ndarray = field(repr=False)
    adj_flat: np.ndarray = field(repr=False)
    adj_off: np.ndarray = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, FactorGraph):
            return NotImplemented
        return (
            self.variable_count == other.variable_count
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash((self.variable_count, self.factors))


@dataclass
class Configuration:
    """A 0/1 assignment to every variable plus its maintained total energy.

    The energy field is kept up to date by delta accumulation across flips,
    not recomputed per query; drift is observable via a final recomputation.
    """

    bits: np.ndarray
    energy: float

    def copy(self) -> "Configuration":
        return Configuration(self.bits.copy(), self.energy)


def _csr(lists: Iterable[Sequence[int]], dtype=np.int64):
    offsets = [0]
    flat = []
    for xs in lists:
        flat.extend(xs)
        offsets.append(len(flat))
    return np.asarray(flat, dtype=dtype), np.asarray(offsets, dtype=np.int64)


def build_factor_graph(variable_count: int, factors: Iterable[Factor]) -> FactorGraph:
    """Validate factors and precompute adjacency, incidence and flat arrays."""
    m = int(variable_count)
    if m < 0:
        raise ModelError(f"variable_count must be non-negative, got {m}")
    factors = tuple(factors)
    neighbor_sets = [set() for _ in range(m)]
    incidence = [[] for _ in range(m)]
    for fi, f in enumerate(factors):
        if f.arity < 1:
            raise ModelError(f"factor {fi}: empty scope")
        if len(set(f.scope)) != f.arity:
            raise ModelError(f"factor {fi}: duplicate variable in scope {f.scope}")
        for v in f.scope:
            if not 0 <= v < m:
                raise ModelError(f"factor {fi}: variable {v} out of range [0, {m})")
        if len(f.table) != 2**f.arity:
            raise ModelError(
                f"factor {fi}: table has {len(f.table)} entries, "
                f"expected {2 ** f.arity}"
            )
        for x in f.table:
            if not math.isfinite(x):
                raise ModelError(f"factor {fi}: non-finite table value {x}")
        for v in f.scope:
            incidence[v].append(fi)
            for u in f.scope:
                if u != v:
                    neighbor_sets[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
    incidence = tuple(tuple(xs) for xs in incidence)

    scope_flat, scope_off = _csr(f.scope for f in factors)
    table_flat = np.asarray(
        [x for f in factors for x in f.table], dtype=np.float64
    )
    table_off = np.asarray(
        np.cumsum([0] + [len(f.table) for f in factors]), dtype=np.int64
    )
    inc_flat, inc_off = _csr(incidence)
    adj_flat, adj_off = _csr(adjacency)
    return FactorGraph(
        variable_count=m,
        factors=factors,
        adjacency=adjacency,
        incidence=incidence,
        scope_flat=scope_flat,
        scope_off=scope_off,
        table_flat=table_flat,
        table_off=table_off,
        inc_flat=inc_flat,
        inc_off=inc_off,
        adj_flat=adj_flat,
        adj_off=adj_off,
    )


def energy(graph: FactorGraph, bits: Sequence[int]) -> float:
    """Total energy: sum of all factor table entries selected by `bits`."""
    bits = np.ascontiguousarray(bits, dtype=np.uint8)
    if bits.shape != (graph.variable_count,):
        raise ModelError(
            f"bits has shape {bits.shape}, expected ({graph.variable_count},)"
        )
    return float(
        kernels.total_energy(
            bits, graph.scope_flat, graph.scope_off, graph.table_flat, graph.table_off
        )
    )


class _FlipScratch:
    """Per-graph scratch buffers for the flip-delta kernel."""

    def __init__(self, graph: FactorGraph):
        self.in_subset = np.zeros(graph.variable_count, dtype=np.uint8)
        self.touched = np.zeros(len(graph.factors), dtype=np.int64)
        self.stamp = 0
        self.evaluations = 0

    def delta(self, graph: FactorGraph, bits: np.ndarray, subset: np.ndarray):
        self.stamp += 1
        d, evals = kernels.flip_delta(
            bits,
            subset,
            self.in_subset,
            graph.inc_flat,
            graph.inc_off,
            graph.scope_flat,
            graph.scope_off,
            graph.table_flat,
            graph.table_off,
            self.touched,
            self.stamp,
        )
        self.evaluations += evals
        return float(d)


def _check_subset(graph: FactorGraph, subset) -> np.ndarray:
    s = np.asarray(sorted(subset), dtype=np.int64)
    if s.size == 0:
        raise ModelError("flip set must be non-empty")
    if len(set(s.tolist())) != s.size:
        raise ModelError(f"flip set has duplicate indices: {sorted(subset)}")
    if s.min() < 0 or s.max() >= graph.variable_count:
        raise ModelError(f"flip set {sorted(subset)} out of range")
    return s


def energy_after_flip(
    graph: FactorGraph, config: Configuration, subset, scratch: _FlipScratch | None = None
) -> float:
    """Energy of `config` with the variables in `subset` toggled.

    Only factors incident to the subset are evaluated (twice each); the
    configuration itself is not modified.
    """
    s = _check_subset(graph, subset)
    if scratch is None:
        scratch = _FlipScratch(graph)
    return config.energy + scratch.delta(graph, config.bits, s)


def flip(config: Configuration, subset, new_energy: float) -> Configuration:
    """Toggle the bits in `subset` in place and adopt the precomputed energy."""
    for v in subset:
        config.bits[v] ^= 1
    config.energy = float(new_energy)
    return config


def neighbors(graph: FactorGraph, j: int) -> tuple[int, ...]:
    """Sorted distinct variables sharing at least one factor with `j`."""
    if not 0 <= j < graph.variable_count:
        raise ModelError(f"variable {j} out of range")
    return graph.adjacency[j]


def make_configuration(graph: FactorGraph, bits: Sequence[int]) -> Configuration:
    """Configuration with a freshly computed (exact) energy."""
    arr = np.ascontiguousarray(bits, dtype=np.uint8)
    if arr.shape != (graph.variable_count,):
        raise ModelError(
            f"configuration has length {arr.shape[0]}, "
            f"expected {graph.variable_count}"
        )
    if arr.size and arr.max() > 1:
        raise ModelError("configuration bits must be 0 or 1")
    return Configuration(arr, energy(graph, arr))
