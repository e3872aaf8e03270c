from collections import Counter, deque

import numpy as np
import pytest

from flipsearch import (
    CSTree,
    build_factor_graph,
    Factor,
    csr_extendable,
    enumerate_connected_subsets,
    enumerate_connected_subsets_recursive,
)

from conftest import grid_graph, random_graph

# size-2 canonical sequences of the 2x3 grid, in length-lexicographic order
GRID_PAIRS = [(0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (4, 5)]


def is_connected(graph, subset):
    subset = set(subset)
    start = next(iter(subset))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in graph.adjacency[v]:
            if u in subset and u not in seen:
                seen.add(u)
                queue.append(u)
    return seen == subset


class TestCsrExtendable:
    def test_adjacent_larger_vertex(self, grid):
        assert csr_extendable(grid, (0,), 1)

    def test_smaller_than_first_fails(self, grid):
        assert not csr_extendable(grid, (1,), 0)

    def test_earlier_insertion_rule(self, grid):
        # 1 is adjacent to 0, so appending it after (0, 3) would skip the
        # earlier position; {0, 1, 3} is represented only by (0, 1, 3)
        assert not csr_extendable(grid, (0, 3), 1)
        assert csr_extendable(grid, (0, 1), 3)

    def test_duplicate_fails(self, grid):
        assert not csr_extendable(grid, (0, 1), 0)

    def test_disconnected_fails(self, grid):
        assert not csr_extendable(grid, (0,), 5)


class TestGrowSubset:
    def test_root_children_are_all_singletons(self, grid):
        tree = CSTree(grid)
        labels = []
        while True:
            q = tree.grow_subset(0)
            if q is None:
                break
            labels.append(tree.labels[q])
        assert labels == [0, 1, 2, 3, 4, 5]

    def test_growth_under_singleton(self, grid):
        tree = CSTree(grid)
        p = tree.grow_subset(0)  # node (0)
        children = []
        while True:
            q = tree.grow_subset(p)
            if q is None:
                break
            children.append(tree.labels[q])
        # neighbors of 0 greater than 0
        assert children == [1, 3]

    def test_growth_under_second_singleton(self, grid):
        tree = CSTree(grid)
        tree.grow_subset(0)
        p = tree.grow_subset(0)  # node (1)
        children = []
        while True:
            q = tree.grow_subset(p)
            if q is None:
                break
            children.append(tree.labels[q])
        # 0 fails the first-element rule, 2 and 4 qualify
        assert children == [2, 4]


class TestLevelIteration:
    def test_first_subset_of_size_one(self, grid):
        tree = CSTree(grid)
        p = tree.first_subset_of_size(1)
        assert tree.labels[p] == 0

    def test_first_pair(self, grid):
        tree = CSTree(grid)
        p = tree.first_subset_of_size(1)
        while p is not None:
            p = tree.next_subset_of_same_size(p)
        q = tree.first_subset_of_size(2)
        assert tree.sequence_of(q) == (0, 1)

    def test_single_variable_model_has_no_pairs(self):
        g = build_factor_graph(1, [Factor((0,), (0.3, 0.7))])
        tree = CSTree(g)
        p = tree.first_subset_of_size(1)
        while p is not None:
            p = tree.next_subset_of_same_size(p)
        assert tree.first_subset_of_size(2) is None

    def test_incomplete_level_precondition(self, grid):
        tree = CSTree(grid)
        tree.first_subset_of_size(1)
        with pytest.raises(ValueError):
            tree.first_subset_of_size(2)

    def test_pair_enumeration_order(self, grid):
        tree = CSTree(grid)
        p = tree.first_subset_of_size(1)
        while p is not None:
            p = tree.next_subset_of_same_size(p)
        sequences = []
        p = tree.first_subset_of_size(2)
        while p is not None:
            sequences.append(tree.sequence_of(p))
            p = tree.next_subset_of_same_size(p)
        assert sequences == GRID_PAIRS

    def test_grid_total_is_forty(self, grid):
        assert len(list(enumerate_connected_subsets(grid))) == 40


class TestSubsetOf:
    def test_singleton(self, grid):
        tree = CSTree(grid)
        p = None
        for _ in range(4):
            p = tree.grow_subset(0)
        assert tree.subset_of(p) == frozenset({3})

    def test_path_readout(self, grid):
        tree = CSTree(grid)
        p = tree.grow_subset(0)  # (0)
        p = tree.grow_subset(p)  # (0, 1)
        tree.grow_subset(p)  # (0, 1, 2)
        tree.grow_subset(p)  # (0, 1, 3)
        q = tree.grow_subset(p)  # (0, 1, 4)
        assert tree.sequence_of(q) == (0, 1, 4)
        assert tree.subset_of(q) == frozenset({0, 1, 4})

    def test_root_rejected(self, grid):
        tree = CSTree(grid)
        with pytest.raises(ValueError):
            tree.subset_of(0)

    def test_all_enumerated_subsets_are_connected(self, grid):
        for _, subset in enumerate_connected_subsets(grid):
            assert is_connected(grid, subset)


def test_uniqueness_completeness_and_order_random_graphs():
    rng = np.random.default_rng(7)
    for _ in range(40):
        m = int(rng.integers(2, 13))
        g = random_graph(rng, m)
        subsets = []
        sequences_by_level = {}
        tree = CSTree(g)
        n = 1
        while True:
            p = tree.first_subset_of_size(n)
            if p is None:
                break
            while p is not None:
                subsets.append(tree.subset_of(p))
                sequences_by_level.setdefault(n, []).append(tree.sequence_of(p))
                p = tree.next_subset_of_same_size(p)
            n += 1
        assert len(subsets) == len(set(subsets))  # no duplicates
        report = enumerate_connected_subsets_recursive(g, include_listing=True)
        assert set(subsets) == set(report.subsets)
        for seqs in sequences_by_level.values():
            assert seqs == sorted(seqs)  # lexicographic within a level
        assert tree.node_count == len(subsets)


def test_fig_grid_per_size_counts(grid):
    counts = Counter(n for n, _ in enumerate_connected_subsets(grid))
    assert counts[1] == 6
    assert counts[2] == 7
    assert sum(counts.values()) == 40


def test_max_size_cutoff(grid):
    counts = Counter(n for n, _ in enumerate_connected_subsets(grid, max_size=2))
    assert dict(counts) == {1: 6, 2: 7}


def test_dump_format():
    g = grid_graph()
    tree = CSTree(g)
    p = tree.first_subset_of_size(1)
    while p is not None:
        p = tree.next_subset_of_same_size(p)
    lines = tree.dump().splitlines()
    assert lines[0] == "0 -1 -1 0"  # root
    assert lines[1] == "1 0 0 1"
    assert len(lines) == 7  # root plus six singletons
    for node_id, line in enumerate(lines):
        fields = line.split()
        assert len(fields) == 4
        assert int(fields[0]) == node_id
