import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import NodeNotInIndex, NodeNotInTree
from lca import build_index, lca
from suffix_tree import ROOT, path_label, word_tree
from words import Word


def naive_lca(tree, u, v):
    ancestors = set()
    while True:
        ancestors.add(u)
        if u == ROOT:
            break
        u = tree.parent(u)
    while v not in ancestors:
        v = tree.parent(v)
    return v


def test_fig1_tour_and_query(fig1):
    tree = word_tree(fig1)
    index = build_index(tree, ROOT)
    assert index.tour_length == 2 * len(tree) - 1 == 37
    ancestor = lca(index, tree.leaf(1), tree.leaf(4))
    assert path_label(tree, ancestor) == "010"
    assert tree.depth(ancestor) == 3


def test_lca_of_node_with_itself(fig1):
    tree = word_tree(fig1)
    index = build_index(tree, ROOT)
    for node in range(len(tree)):
        assert lca(index, node, node) == node


def test_subtree_index_rejects_outside_nodes(fig1):
    tree = word_tree(fig1)
    inner = tree.parent(tree.leaf(1))
    index = build_index(tree, inner)
    assert tree.leaf(1) in index
    assert tree.leaf(2) not in index
    with pytest.raises(NodeNotInIndex):
        lca(index, tree.leaf(1), tree.leaf(2))
    with pytest.raises(NodeNotInTree):
        build_index(tree, len(tree) + 3)


def test_single_node_index():
    tree = word_tree(Word.from_text("a"))
    index = build_index(tree, tree.leaf(1))
    assert index.tour_length == 1
    assert lca(index, tree.leaf(1), tree.leaf(1)) == tree.leaf(1)


@settings(max_examples=60, deadline=None)
@given(st.text(alphabet="abc", min_size=1, max_size=45))
def test_lca_matches_ancestor_walk(text):
    tree = word_tree(Word.from_text(text))
    index = build_index(tree, ROOT)
    for u, v in itertools.combinations(range(len(tree)), 2):
        assert lca(index, u, v) == naive_lca(tree, u, v)
