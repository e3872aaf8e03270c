"""Brute-force reference implementations for desk-scale certification.

These deliberately share nothing with the CS-tree, tag-list or solver code
paths beyond the FactorGraph type, so differential tests against them are
meaningful.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .model import Configuration, FactorGraph, energy

__all__ = [
    "EnumerationReport",
    "brute_force_minimize",
    "enumerate_connected_subsets_recursive",
    "count_connected_sequences",
    "verify_hamming_bound",
]


@dataclass
class EnumerationReport:
    counts: dict[int, int]
    total: int
    subsets: list[frozenset[int]] | None = None


def brute_force_minimize(
    graph: FactorGraph, max_variables: int = 24
) -> tuple[Configuration, float]:
    """Scan all 2^m configurations; return the lexicographically smallest
    argmin and its energy."""
    m = graph.variable_count
    if m > max_variables:
        raise ValueError(f"{m} variables exceed the brute-force guard {max_variables}")
    n = 1 << m
    codes = np.arange(n, dtype=np.int64)
    energies = np.zeros(n, dtype=np.float64)
    # bit j of a configuration is stored at position m-1-j, so increasing
    # integer code order is lexicographic order of bit vectors
    for f in graph.factors:
        idx = np.zeros(n, dtype=np.int64)
        for v in f.scope:
            idx = 2 * idx + ((codes >> (m - 1 - v)) & 1)
        energies += np.asarray(f.table, dtype=np.float64)[idx]
    best = int(np.argmin(energies))
    bits = np.array([(best >> (m - 1 - j)) & 1 for j in range(m)], dtype=np.uint8)
    return Configuration(bits, float(energies[best])), float(energies[best])


def enumerate_connected_subsets_recursive(
    graph: FactorGraph,
    max_size: int | None = None,
    include_listing: bool = False,
    max_variables: int = 20,
) -> EnumerationReport:
    """Enumerate connected subsets by growing from each minimum vertex.

    For every vertex v, subsets whose minimum is v are grown by repeatedly
    adding neighbors larger than v, with explicit frozenset deduplication.
    This is intentionally a different method than the CS-tree.
    """
    m = graph.variable_count
    if m > max_variables and (max_size is None or max_size > max_variables):
        raise ValueError(
            f"{m} variables exceed the enumeration guard {max_variables}"
        )
    adjacency = graph.adjacency
    counts: dict[int, int] = {}
    listing: list[frozenset[int]] = []
    for v in range(m):
        seen = {frozenset((v,))}
        stack = [frozenset((v,))]
        while stack:
            s = stack.pop()
            if max_size is not None and len(s) >= max_size:
                continue
            for u in s:
                for w in adjacency[u]:
                    if w > v and w not in s:
                        t = s | {w}
                        if t not in seen:
                            seen.add(t)
                            stack.append(t)
        for s in seen:
            counts[len(s)] = counts.get(len(s), 0) + 1
            if include_listing:
                listing.append(s)
    return EnumerationReport(
        counts=dict(sorted(counts.items())),
        total=sum(counts.values()),
        subsets=listing if include_listing else None,
    )


def count_connected_sequences(graph: FactorGraph, subset, max_size: int = 8) -> int:
    """Count orderings of `subset` in which every element after the first is
    adjacent to some predecessor."""
    s = sorted(set(subset))
    if len(s) > max_size:
        raise ValueError(f"subset of {len(s)} variables exceeds guard {max_size}")
    adjacency = [set(graph.adjacency[v]) for v in range(graph.variable_count)]
    count = 0
    for perm in itertools.permutations(s):
        ok = True
        for i in range(1, len(perm)):
            if not any(perm[i] in adjacency[perm[j]] for j in range(i)):
                ok = False
                break
        if ok:
            count += 1
    return count


def verify_hamming_bound(
    graph: FactorGraph,
    config: Configuration,
    n: int,
    max_checks: int = 5_000_000,
    rel_tol: float = 1e-9,
) -> bool:
    """True iff no flip of up to n variables (connected or not) strictly
    lowers the energy.

    Energies of flipped configurations are recomputed from scratch; a
    relative tolerance absorbs summation-order rounding.
    """
    m = graph.variable_count
    checks = sum(math.comb(m, k) for k in range(1, min(n, m) + 1))
    if checks > max_checks:
        raise ValueError(f"{checks} flip checks exceed the budget {max_checks}")
    base = energy(graph, config.bits)
    threshold = base - rel_tol * max(1.0, abs(base))
    bits = config.bits.copy()
    for k in range(1, min(n, m) + 1):
        for combo in itertools.combinations(range(m), k):
            for v in combo:
                bits[v] ^= 1
            e = energy(graph, bits)
            for v in combo:
                bits[v] ^= 1
            if e < threshold:
                return False
    return True
