"""Tag lists: marking variables affected by recent flips.

A flag per variable plus an explicit list of tagged indices, so clearing
costs O(#tagged) rather than O(m). The traversal functions drive the
revisiting sweeps over already-built parts of the CS-tree; they never grow
the tree.
"""

from __future__ import annotations

import numpy as np

from .cstree import CSTree, NONE
from .model import FactorGraph

__all__ = ["TagList"]


class TagList:
    def __init__(self, variable_count: int):
        self.flags = np.zeros(variable_count, dtype=bool)
        self.tagged: list[int] = []
        self.flag_writes = 0  # diagnostic, counts individual flag mutations

    def __len__(self) -> int:
        return len(self.tagged)

    def tag(self, x: int) -> None:
        if not 0 <= x < self.flags.shape[0]:
            raise IndexError(f"variable {x} out of range")
        if not self.flags[x]:
            self.flags[x] = True
            self.flag_writes += 1
            self.tagged.append(x)

    def untag_all(self) -> None:
        for x in self.tagged:
            self.flags[x] = False
            self.flag_writes += 1
        self.tagged.clear()

    def tag_connected_variables(self, tree: CSTree, graph: FactorGraph, s: int) -> None:
        """Tag the variables of node s's subset and all their graph neighbors."""
        if s == 0:
            raise ValueError("root represents no subset")
        for v in tree.sequence_of(s):
            self.tag(v)
            for u in graph.adjacency[v]:
                self.tag(u)

    def first_tagged_subset(self, tree: CSTree) -> int | None:
        """First level-1 node whose own label is tagged, in level order."""
        if len(tree.level_heads) < 2:
            return None
        p = tree.level_heads[1]
        while p != NONE:
            if self.flags[tree.labels[p]]:
                return p
            p = tree.next_same_level[p]
        return None

    def next_tagged_subset(self, tree: CSTree, s: int) -> int | None:
        """Next built node (level order, across levels) whose path to the root
        contains at least one tagged variable."""
        p = tree.next_in_level_order(s)
        while p is not None:
            q = p
            while q != 0:
                if self.flags[tree.labels[q]]:
                    return p
                q = tree.parents[q]
            p = tree.next_in_level_order(p)
        return None
