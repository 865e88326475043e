"""
Minimal k-th power period of a window from its suffix tree.

A prefix x^k with |x| = i - 1 exists iff the suffixes starting at the
window start and at i share a prefix of length >= (k-1)(i-1); such leaves
all sit under the highest ancestor h of leaf_1 with depth >= (k-1)(s+1),
so only that subtree is searched.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from errors import InvalidParameter, InvariantViolation
from lca import build_index, lca
from suffix_tree import SuffixTree, word_tree
from words import INF, Period, Word

logger = logging.getLogger(__name__)


@dataclass
class MpStats:
    """Work counters for compute_mp calls; check_leaf_bound asserts anchor_leaf_bound on each."""

    calls: int = 0
    leaves_visited: int = 0
    max_leaves: int = 0
    check_leaf_bound: bool = False


def _check_parameters(s: int, k: int) -> None:
    if k < 2:
        raise InvalidParameter(f"k must be >= 2 (got {k})")
    if s < 0:
        raise InvalidParameter(f"s must be >= 0 (got {s})")


def find_anchor(tree: SuffixTree, s: int, k: int) -> Optional[int]:
    """
    Highest ancestor h of leaf_1 whose depth is >= (k-1)(s+1).

    leaf_1 is the leaf of the window start. Returns None when
    k(s+1) exceeds the window length.
    """
    _check_parameters(s, k)
    if k * (s + 1) > tree.window_length:
        return None
    threshold = (k - 1) * (s + 1)
    nodes = tree.nodes
    anchor = tree.leaves[tree.start]
    # depth(root) = 0 < threshold, so the walk stops below the root
    while nodes[nodes[anchor].parent].depth >= threshold:
        anchor = nodes[anchor].parent
    return anchor


def smallest_period(codes: Sequence[int]) -> int:
    """Smallest p >= 1 with codes[i] == codes[i + p] throughout (KMP border)."""
    border = [0] * (len(codes) + 1)
    border[0] = -1
    for i in range(1, len(codes) + 1):
        b = border[i - 1]
        while b >= 0 and codes[b] != codes[i - 1]:
            b = border[b]
        border[i] = b + 1
    return len(codes) - border[len(codes)]


def anchor_leaf_bound(tree: SuffixTree, anchor: int) -> int:
    """
    Most leaves the subtree under an anchor can hold.

    Every leaf below the anchor starts an occurrence of u = w[start..start+d-1],
    d = min(delta(anchor), window length). Two occurrences of u are at least
    p = smallest_period(u) apart and the last starts no later than end-d+1,
    so there are at most (L - d) // p + 1 of them. This is not n / min(s+1, mp_0^k):
    in 01001010 with k=2, s=2 the anchor is 010 with leaves 1, 4 and 6.
    """
    length = tree.window_length
    d = min(tree.nodes[anchor].depth, length)
    prefix = tree.text[tree.start - 1:tree.start - 1 + d]
    return (length - d) // smallest_period(prefix) + 1


def compute_mp(tree: SuffixTree, s: int, k: int, stats: Optional[MpStats] = None) -> Period:
    """
    mp_s^k of the tree's window word.

    Args:
        tree (SuffixTree): Suffix tree of w[start..end]
        s (int): Periods must be longer than s
        k (int): Exponent, >= 2
        stats (MpStats): Optional counters to update

    Returns:
        Period: smallest m > s with a k-th power prefix of period m, or INF
    """
    anchor = find_anchor(tree, s, k)
    if stats is not None:
        stats.calls += 1
    if anchor is None:
        return INF

    first_leaf = tree.leaves[tree.start]
    leaves = tree.subtree_leaves(anchor)
    if stats is not None:
        stats.leaves_visited += len(leaves)
        stats.max_leaves = max(stats.max_leaves, len(leaves))
        if stats.check_leaf_bound:
            bound = anchor_leaf_bound(tree, anchor)
            if len(leaves) > bound:
                raise InvariantViolation(
                    f"{len(leaves)} leaves under the anchor of [{tree.start}..{tree.end}], bound {bound}"
                )
    if len(leaves) < 2:
        return INF

    index = build_index(tree, anchor)
    nodes = tree.nodes
    best: Optional[int] = None
    for leaf in leaves:
        if leaf == first_leaf:
            continue
        shift = nodes[leaf].leaf_position - tree.start
        if shift <= s:
            continue
        if nodes[lca(index, first_leaf, leaf)].depth >= (k - 1) * shift:
            if best is None or shift < best:
                best = shift
    return INF if best is None else Period(best)


def minimal_period(word: Word, s: int, k: int) -> Period:
    """Build the suffix tree of a word and return mp_s^k(word)."""
    _check_parameters(s, k)
    if len(word) == 0:
        return INF
    return compute_mp(word_tree(word), s, k)
