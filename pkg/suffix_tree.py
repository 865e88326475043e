"""
Incremental suffix trees in Weiner order.

A SuffixTree covers a window text[start..end] (1-based, inclusive) and
grows by one letter on the left per `extend` call, so suffixes are added
shortest to longest. Node string depths never change once a node exists,
which is what lets the period engine annotate nodes exactly once.

Construction bookkeeping follows Weiner: every node carries an indicator
bitmask (bit a set iff a.tau(v) occurs in the current window) and a link
table (letter a -> node whose path label is a.tau(v), when that node
exists).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence

from errors import NodeNotInTree, NotPreviousWindow, WindowOutOfRange

logger = logging.getLogger(__name__)

ROOT = 0
TERMINAL_SYMBOL = '$'


@dataclass(slots=True)
class Node:
    """One suffix tree node; edge labels are position ranges into the text."""

    parent: int
    depth: int
    edge_start: int = 0
    edge_end: int = -1
    children: Dict[int, int] = field(default_factory=dict)
    leaf_position: Optional[int] = None
    indicator: int = 0
    links: Dict[int, int] = field(default_factory=dict)
    pi: object = None

    @property
    def is_leaf(self) -> bool:
        return self.leaf_position is not None

    @property
    def edge_length(self) -> int:
        return self.edge_end - self.edge_start + 1


@dataclass(frozen=True)
class SplitInfo:
    """An edge x -> z was split into x -> y -> z."""

    y: int
    z: int


@dataclass(frozen=True)
class ExtendResult:
    """Outcome of one Weiner extension."""

    leaf: int
    parent: int
    split: Optional[SplitInfo]


@dataclass(frozen=True)
class StructureReport:
    """Verdict of validate_structure."""

    ok: bool
    violations: tuple = ()
    leaf_count: int = 0

    @property
    def message(self) -> str:
        return '; '.join(self.violations)


class SuffixTree:
    """Suffix tree of text[start..end]$ built right to left."""

    def __init__(self, text: Sequence[int], terminal: int, position: int, symbols: Optional[Sequence[str]] = None):
        """
        Create the one-letter tree of text[position..position].

        Args:
            text (Sequence[int]): Letter codes, stored 0-based
            terminal (int): Code of the virtual end marker $, outside the letters used in text
            position (int): 1-based window start and end
            symbols (Sequence[str]): Optional code -> symbol table used for labels
        """
        if not 1 <= position <= len(text):
            raise WindowOutOfRange(f"Window [{position}..{position}] outside 1..{len(text)}")
        self.text = text
        self.terminal = terminal
        self.symbols = symbols
        self.start = position
        self.end = position
        self.steps = 0
        self.nodes: List[Node] = [Node(parent=ROOT, depth=0)]
        self.leaves: Dict[int, int] = {}
        self._attach_leaf(ROOT, position)
        # the window's only letter a makes a.tau(root) = a occur
        self.nodes[ROOT].indicator = 1 << text[position - 1]

    # ------------------------------------------------------------------
    @property
    def root(self) -> int:
        return ROOT

    @property
    def window_length(self) -> int:
        return self.end - self.start + 1

    def letter(self, position: int) -> int:
        """Code at 1-based position; end + 1 is the terminal."""
        if position == self.end + 1:
            return self.terminal
        return self.text[position - 1]

    def node(self, node_id: int) -> Node:
        if not 0 <= node_id < len(self.nodes):
            raise NodeNotInTree(f"Node {node_id} not in tree of {len(self.nodes)} nodes")
        return self.nodes[node_id]

    def leaf(self, position: int) -> int:
        try:
            return self.leaves[position]
        except KeyError:
            raise NodeNotInTree(f"No leaf for position {position} in window [{self.start}..{self.end}]") from None

    def parent(self, node_id: int) -> int:
        return self.node(node_id).parent

    def depth(self, node_id: int) -> int:
        return self.node(node_id).depth

    def __len__(self) -> int:
        return len(self.nodes)

    # ------------------------------------------------------------------
    def _new_node(self, parent: int, depth: int, edge_start: int, edge_end: int) -> int:
        self.nodes.append(Node(parent=parent, depth=depth, edge_start=edge_start, edge_end=edge_end))
        return len(self.nodes) - 1

    def _attach_leaf(self, parent: int, position: int) -> int:
        parent_depth = self.nodes[parent].depth
        edge_start = position + parent_depth
        leaf = self._new_node(parent, self.end - position + 2, edge_start, self.end + 1)
        self.nodes[leaf].leaf_position = position
        self.nodes[parent].children[self.letter(edge_start)] = leaf
        self.leaves[position] = leaf
        return leaf

    def _split_edge(self, upper: int, lower: int, offset: int) -> int:
        """Insert a node `offset` letters below `upper` on the edge into `lower`."""
        lower_node = self.nodes[lower]
        first = self.letter(lower_node.edge_start)
        middle = self._new_node(
            upper,
            self.nodes[upper].depth + offset,
            lower_node.edge_start,
            lower_node.edge_start + offset - 1,
        )
        lower_node.edge_start += offset
        lower_node.parent = middle
        middle_node = self.nodes[middle]
        middle_node.children[self.letter(lower_node.edge_start)] = lower
        # occurrences of tau(middle) are those of tau(lower) plus the new leaf, which has no left letter yet
        middle_node.indicator = lower_node.indicator
        self.nodes[upper].children[first] = middle
        return middle

    def extend(self, new_start: int) -> ExtendResult:
        """
        Add the suffix text[new_start..end]$ to the tree of text[new_start+1..end].

        Args:
            new_start (int): Must be exactly the current start minus one

        Returns:
            ExtendResult: the new leaf, its parent y and the split (y, z) if one happened
        """
        if new_start != self.start - 1:
            raise NotPreviousWindow(f"Tree window starts at {self.start}; cannot extend to {new_start}")
        if new_start < 1:
            raise WindowOutOfRange("Cannot extend a tree past position 1")

        nodes = self.nodes
        letter = self.text[new_start - 1]
        bit = 1 << letter
        previous_leaf = self.leaves[self.start]

        # Walk up from the previous leaf to the first node v with a.tau(v) already present.
        current = previous_leaf
        found: Optional[int] = None
        while True:
            self.steps += 1
            current_node = nodes[current]
            if current_node.indicator & bit:
                found = current
                break
            current_node.indicator |= bit
            if current == ROOT:
                break
            current = current_node.parent

        self.start = new_start
        split = None
        if found is None:
            # letter is new to the window
            parent = ROOT
        else:
            # Walk further up to the first node v' that has a link for the letter.
            linked = found
            while letter not in nodes[linked].links and linked != ROOT:
                self.steps += 1
                linked = nodes[linked].parent
            target = nodes[linked].links.get(letter, ROOT)
            target_depth = nodes[target].depth
            offset = nodes[found].depth + 1 - target_depth
            if offset == 0:
                parent = target
            else:
                child = nodes[target].children[self.letter(new_start + target_depth)]
                parent = self._split_edge(target, child, offset)
                nodes[found].links[letter] = parent
                split = SplitInfo(y=parent, z=child)

        leaf = self._attach_leaf(parent, new_start)
        nodes[previous_leaf].links[letter] = leaf
        return ExtendResult(leaf=leaf, parent=parent, split=split)

    def extend_to(self, new_start: int) -> None:
        """Extend one position at a time until the window starts at new_start."""
        while self.start > new_start:
            self.extend(self.start - 1)

    # ------------------------------------------------------------------
    def path_codes(self, node_id: int) -> List[int]:
        """Codes of tau(node), including the terminal for leaves."""
        node = self.node(node_id)
        if node_id == ROOT:
            return []
        if node.is_leaf:
            return [self.letter(p) for p in range(node.leaf_position, self.end + 2)]
        # tau(v) is a prefix of the path to any leaf below v
        below = node_id
        while not self.nodes[below].is_leaf:
            below = next(iter(self.nodes[below].children.values()))
        first = self.nodes[below].leaf_position
        return [self.letter(p) for p in range(first, first + node.depth)]

    def render(self, codes: Sequence[int]) -> str:
        parts = []
        for code in codes:
            if code == self.terminal:
                parts.append(TERMINAL_SYMBOL)
            elif self.symbols is not None and code < len(self.symbols):
                parts.append(self.symbols[code])
            else:
                parts.append(f"<{code}>")
        return ''.join(parts)

    def edge_label(self, node_id: int) -> str:
        node = self.node(node_id)
        return self.render([self.letter(p) for p in range(node.edge_start, node.edge_end + 1)])

    def iter_subtree(self, node_id: int) -> Iterator[int]:
        """Pre-order node ids below (and including) node_id, children by letter code."""
        stack = [node_id]
        while stack:
            current = stack.pop()
            yield current
            children = self.nodes[current].children
            stack.extend(children[key] for key in sorted(children, reverse=True))

    def subtree_leaves(self, node_id: int) -> List[int]:
        return [n for n in self.iter_subtree(node_id) if self.nodes[n].is_leaf]


def new_tree(text: Sequence[int], terminal: int, i: int, j: int, symbols: Optional[Sequence[str]] = None) -> SuffixTree:
    """Suffix tree of the single-letter window text[j..j]; requires i == j."""
    if i != j:
        raise WindowOutOfRange(f"A new tree starts from one position (got [{i}..{j}])")
    return SuffixTree(text, terminal, j, symbols)


def build_tree(text: Sequence[int], terminal: int, i: int, j: int, symbols: Optional[Sequence[str]] = None) -> SuffixTree:
    """Suffix tree of text[i..j], built from j down to i."""
    if not 1 <= i <= j <= len(text):
        raise WindowOutOfRange(f"Window [{i}..{j}] outside 1..{len(text)}")
    tree = SuffixTree(text, terminal, j, symbols)
    tree.extend_to(i)
    logger.debug(f"Built suffix tree over [{i}..{j}] with {len(tree)} nodes")
    return tree


def word_tree(word, i: Optional[int] = None, j: Optional[int] = None) -> SuffixTree:
    """Suffix tree of a Word (or a window of it), terminal = sigma."""
    i = 1 if i is None else i
    j = len(word) if j is None else j
    return build_tree(word.codes, word.sigma, i, j, word.alphabet.symbols)


def path_label(tree: SuffixTree, node_id: int) -> str:
    """tau(node) as text; leaves end with '$'."""
    return tree.render(tree.path_codes(node_id))


def validate_structure(tree: SuffixTree) -> StructureReport:
    """
    Check the suffix tree properties and the depth recurrence.

    Returns:
        StructureReport: ok, or the list of violations found
    """
    violations = []
    leaf_count = 0
    for node_id, node in enumerate(tree.nodes):
        if node.is_leaf:
            leaf_count += 1
            if node.children:
                violations.append(f"leaf {node_id} has children")
        elif node_id != ROOT and len(node.children) < 2:
            violations.append(f"internal node {node_id} has {len(node.children)} child(ren)")
        if node_id != ROOT:
            if node.edge_length < 1:
                violations.append(f"node {node_id} has an empty edge label")
            if node.edge_start < tree.start or node.edge_end > tree.end + 1:
                violations.append(f"node {node_id} edge label outside the window")
            parent = tree.nodes[node.parent]
            if parent.children.get(tree.letter(node.edge_start)) != node_id:
                violations.append(f"node {node_id} not reachable from its parent by its first letter")
            if node.depth != parent.depth + node.edge_length:
                violations.append(f"node {node_id} depth {node.depth} breaks the depth recurrence")
        for first_letter, child in node.children.items():
            if tree.nodes[child].parent != node_id:
                violations.append(f"child {child} of {node_id} points to another parent")
            if tree.letter(tree.nodes[child].edge_start) != first_letter:
                violations.append(f"child {child} of {node_id} filed under the wrong letter")

    if leaf_count != tree.window_length:
        violations.append(f"{leaf_count} leaves for a window of length {tree.window_length}")
    for position in range(tree.start, tree.end + 1):
        leaf = tree.leaves.get(position)
        if leaf is None:
            violations.append(f"no leaf for position {position}")
            continue
        expected = [tree.letter(p) for p in range(position, tree.end + 2)]
        if _walk_path(tree, leaf) != expected:
            violations.append(f"leaf {leaf} path label differs from suffix {position}")

    return StructureReport(ok=not violations, violations=tuple(violations), leaf_count=leaf_count)


def _walk_path(tree: SuffixTree, node_id: int) -> List[int]:
    """Concatenate edge labels from the root; independent of path_codes."""
    chain = []
    current = node_id
    while current != ROOT:
        chain.append(current)
        current = tree.nodes[current].parent
    codes: List[int] = []
    for step in reversed(chain):
        node = tree.nodes[step]
        codes.extend(tree.letter(p) for p in range(node.edge_start, node.edge_end + 1))
    return codes


def to_dot(tree: SuffixTree, name: str = 'suffix_tree') -> str:
    """
    Render a tree as a DOT digraph.

    Nodes show their depth and, once set, their pi annotation; leaves also
    show their position. Children are emitted in letter-code order.
    """
    lines = [f'digraph "{name}" {{', '  node [shape=circle, fontsize=10];']
    for node_id in tree.iter_subtree(ROOT):
        node = tree.nodes[node_id]
        label = f"δ={node.depth}"
        if node.pi is not None:
            label += f"\\nπ={node.pi}"
        if node.is_leaf:
            label = f"leaf {node.leaf_position}\\n" + label
        shape = ', shape=box' if node.is_leaf else ''
        lines.append(f'  n{node_id} [label="{label}"{shape}];')
    for node_id in tree.iter_subtree(ROOT):
        node = tree.nodes[node_id]
        for key in sorted(node.children):
            child = node.children[key]
            lines.append(f'  n{node_id} -> n{child} [label="{tree.edge_label(child)}"];')
    lines.append('}')
    return '\n'.join(lines) + '\n'
