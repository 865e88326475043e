"""Static LCA via Euler tour + sparse table over a suffix tree subtree.

Pre-processing: O(m log m) for an m-node subtree. Query: O(1).
"""

import logging
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from errors import NodeNotInIndex, NodeNotInTree
from suffix_tree import SuffixTree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LcaIndex:
    """Euler tour of a subtree plus a sparse table of tour positions."""

    root: int
    euler: np.ndarray
    depths: np.ndarray
    first_occurrence: Dict[int, int]
    table: np.ndarray
    log: np.ndarray

    @property
    def tour_length(self) -> int:
        return int(self.euler.shape[0])

    def __contains__(self, node_id: int) -> bool:
        return node_id in self.first_occurrence


def build_index(tree: SuffixTree, subtree_root: int) -> LcaIndex:
    """
    Preprocess the subtree rooted at subtree_root for LCA queries.

    Args:
        tree (SuffixTree): Finished (or paused) suffix tree
        subtree_root (int): Node id whose subtree is indexed

    Returns:
        LcaIndex: Index answering lca() for any two nodes of the subtree
    """
    if not 0 <= subtree_root < len(tree.nodes):
        raise NodeNotInTree(f"Node {subtree_root} not in tree of {len(tree.nodes)} nodes")

    nodes = tree.nodes
    euler: List[int] = []
    depths: List[int] = []
    first_occurrence: Dict[int, int] = {}

    # iterative DFS; an entry is (node, sorted child keys, next child index)
    stack = [(subtree_root, sorted(nodes[subtree_root].children), 0)]
    first_occurrence[subtree_root] = 0
    euler.append(subtree_root)
    depths.append(nodes[subtree_root].depth)
    while stack:
        node_id, keys, index = stack[-1]
        if index < len(keys):
            stack[-1] = (node_id, keys, index + 1)
            child = nodes[node_id].children[keys[index]]
            first_occurrence[child] = len(euler)
            euler.append(child)
            depths.append(nodes[child].depth)
            stack.append((child, sorted(nodes[child].children), 0))
        else:
            stack.pop()
            if stack:
                parent = stack[-1][0]
                euler.append(parent)
                depths.append(nodes[parent].depth)

    m = len(euler)
    euler_array = np.asarray(euler, dtype=np.int64)
    depth_array = np.asarray(depths, dtype=np.int64)

    log = np.zeros(m + 1, dtype=np.int64)
    if m > 1:
        log[2:] = np.floor(np.log2(np.arange(2, m + 1))).astype(np.int64)
    levels = int(log[m]) + 1

    # table[level, i] = tour index of the shallowest node in euler[i .. i + 2^level - 1]
    table = np.zeros((levels, m), dtype=np.int64)
    table[0] = np.arange(m)
    for level in range(1, levels):
        half = 1 << (level - 1)
        span = 1 << level
        count = m - span + 1
        left = table[level - 1, :count]
        right = table[level - 1, half:half + count]
        table[level, :count] = np.where(depth_array[left] <= depth_array[right], left, right)

    logger.debug(f"LCA index over node {subtree_root}: tour length {m}")
    return LcaIndex(
        root=subtree_root,
        euler=euler_array,
        depths=depth_array,
        first_occurrence=first_occurrence,
        table=table,
        log=log,
    )


def lca(index: LcaIndex, u: int, v: int) -> int:
    """Deepest common ancestor of u and v inside the indexed subtree."""
    try:
        left = index.first_occurrence[u]
        right = index.first_occurrence[v]
    except KeyError as e:
        raise NodeNotInIndex(f"Node {e.args[0]} is not in the subtree of {index.root}") from None
    if left > right:
        left, right = right, left
    level = int(index.log[right - left + 1])
    a = index.table[level, left]
    b = index.table[level, right - (1 << level) + 1]
    return int(index.euler[a] if index.depths[a] <= index.depths[b] else index.euler[b])
