"""
Right and left minimal period arrays in O(k n).

The main suffix tree is grown right to left in Weiner order while every
new node gets its pi annotation, pi(v) = mp_s^k(tau(v)), exactly once:
- a split node y inherits pi(z) when delta(y) >= k * pi(z), else INF
- a new leaf inherits pi of its parent when that is finite
- otherwise pi(leaf_i) comes from a small auxiliary suffix tree over a
  window w[i..j] that is long enough to decide mp_s^k(w[i..n]) and is
  thrown away once it grows too long or the parent depth drops.
rmp[i] is pi(leaf_i); lmp is rmp of the reversed word, read backwards.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import config
from errors import EmptyWord, InvalidParameter, InvariantViolation
from minimal_period import MpStats, compute_mp
from oracle import mp_oracle
from suffix_tree import ROOT, SuffixTree, build_tree
from words import INF, Period, PeriodArray, Word

logger = logging.getLogger(__name__)


@dataclass
class EngineStats:
    """Work counters for one compute_rmp run."""

    main_steps: int = 0
    aux_steps: int = 0
    aux_built: int = 0
    aux_destroyed: int = 0
    mp: MpStats = field(default_factory=MpStats)

    @property
    def total_steps(self) -> int:
        return self.main_steps + self.aux_steps + self.mp.leaves_visited

    def to_json(self) -> dict:
        return {
            "main_steps": self.main_steps,
            "aux_steps": self.aux_steps,
            "aux_built": self.aux_built,
            "aux_destroyed": self.aux_destroyed,
            "mp_calls": self.mp.calls,
            "mp_leaves_visited": self.mp.leaves_visited,
            "total_steps": self.total_steps,
        }


@dataclass
class AuxState:
    """The auxiliary tree A over w[i..j] with its creation depth d."""

    tree: Optional[SuffixTree] = None
    d: int = 0
    j: int = 0
    clamped: bool = False

    @property
    def present(self) -> bool:
        return self.tree is not None


def set_pi(tree: SuffixTree, node_id: int, value: Period) -> None:
    """Write a pi annotation; each node is written exactly once."""
    node = tree.nodes[node_id]
    if node.pi is not None:
        raise InvariantViolation(f"pi of node {node_id} is already {node.pi}")
    node.pi = value


def annotate_split(tree: SuffixTree, y: int, z: int, k: int) -> Period:
    """
    Set pi(y) for a node y just split above z.

    pi(y) = pi(z) when delta(y) >= k * pi(z), otherwise INF.
    """
    pi_z = tree.nodes[z].pi
    if pi_z is None:
        raise InvariantViolation(f"pi of node {z} is not set before the split above it")
    depth = tree.nodes[y].depth
    value = pi_z if pi_z.is_finite and depth >= k * pi_z.value else INF
    set_pi(tree, y, value)
    return value


def _check_parameters(word: Word, s: int, k: int) -> None:
    if len(word) == 0:
        raise EmptyWord("Cannot compute periods of the empty word")
    if k < 2:
        raise InvalidParameter(f"k must be >= 2 (got {k})")
    if s < 0:
        raise InvalidParameter(f"s must be >= 0 (got {s})")


class _InvariantChecker:
    """Per-iteration assertions used when engine debugging is on."""

    def __init__(self, word: Word, s: int, k: int):
        self.word = word
        self.s = s
        self.k = k
        self.oracle_limit = config.DEBUG_ORACLE_MAX_LENGTH

    def check_new_node(self, tree: SuffixTree, node_id: int) -> None:
        node = tree.nodes[node_id]
        parent_pi = tree.nodes[node.parent].pi
        pi = node.pi
        if parent_pi is not None and parent_pi.is_infinite and pi.is_finite:
            parent_depth = tree.nodes[node.parent].depth
            if not (parent_depth < self.k * pi.value and (self.k - 1) * pi.value <= parent_depth):
                raise InvariantViolation(
                    f"pi bound broken at node {node_id}: pi={pi}, parent depth {parent_depth}"
                )
        if node.depth <= self.oracle_limit:
            codes = tuple(c for c in tree.path_codes(node_id) if c != tree.terminal)
            expected = mp_oracle(Word(codes, self.word.alphabet), self.s, self.k)
            if pi != expected:
                raise InvariantViolation(f"pi of node {node_id} is {pi}, expected {expected}")

    def check_parent_step(self, parent_depth: int, previous_parent_depth: int, i: int) -> None:
        if parent_depth > previous_parent_depth + 1:
            raise InvariantViolation(
                f"parent depth jumped from {previous_parent_depth} to {parent_depth} at position {i}"
            )

    def check_aux(self, aux: AuxState, parent_depth: int, i: int) -> None:
        k = self.k
        if (aux.j - i + 1) * (k - 1) > 2 * k * aux.d:
            raise InvariantViolation(f"aux window [{i}..{aux.j}] longer than 2kd/(k-1) with d={aux.d}")
        if 2 * parent_depth < aux.d:
            raise InvariantViolation(f"parent depth {parent_depth} below d/2 with d={aux.d}")
        if not aux.clamped and parent_depth > 2 * aux.d:
            raise InvariantViolation(f"parent depth {parent_depth} above 2d with d={aux.d}")

    def check_window(self, aux: AuxState, i: int, pi: Period) -> None:
        n = len(self.word)
        if n - i + 1 > self.oracle_limit:
            return
        expected = mp_oracle(self.word.factor(i, n), self.s, self.k)
        if expected != pi:
            raise InvariantViolation(
                f"window [{i}..{aux.j}] gives {pi} but the full suffix has {expected}"
            )
        if expected.is_finite and self.k * expected.value > aux.j - i + 1:
            raise InvariantViolation(f"window [{i}..{aux.j}] too short for period {expected}")


def _run_engine(word: Word, s: int, k: int, debug: bool, stats: EngineStats) -> Tuple[SuffixTree, List[Period]]:
    n = len(word)
    text = word.codes
    terminal = word.sigma
    checker = _InvariantChecker(word, s, k) if debug else None
    if debug:
        stats.mp.check_leaf_bound = True
    trace = logger.isEnabledFor(logging.DEBUG)

    main = SuffixTree(text, terminal, n, word.alphabet.symbols)
    set_pi(main, ROOT, INF)
    set_pi(main, main.leaves[n], INF)
    nodes = main.nodes

    rmp: List[Period] = [INF] * n
    aux = AuxState(j=n)
    degenerate = (k - 1) * (s + 1)
    previous_parent_depth = 0

    for i in range(n - 1, 0, -1):
        step = main.extend(i)
        y = step.parent
        leaf = step.leaf
        if step.split is not None:
            annotate_split(main, step.split.y, step.split.z, k)
            if checker:
                checker.check_new_node(main, step.split.y)
        depth_y = nodes[y].depth
        if checker:
            checker.check_parent_step(depth_y, previous_parent_depth, i)
        previous_parent_depth = depth_y

        if aux.present and ((aux.j - i + 1) * (k - 1) > 2 * k * aux.d or 2 * depth_y < aux.d):
            stats.aux_steps += aux.tree.steps
            stats.aux_destroyed += 1
            if trace:
                logger.debug(f"Dropped aux tree over [{i + 1}..{aux.j}] (d={aux.d}, delta(y)={depth_y})")
            aux.tree = None

        pi_y = nodes[y].pi
        if pi_y.is_finite or depth_y < degenerate:
            # finite: inherited from the parent; degenerate: any period would be <= s
            set_pi(main, leaf, pi_y if pi_y.is_finite else INF)
            if aux.present:
                aux.tree.extend(i)
                if checker:
                    checker.check_aux(aux, depth_y, i)
        else:
            if aux.present:
                aux.tree.extend(i)
            else:
                aux.d = depth_y
                window = -(-(k + 1) * aux.d // (k - 1))
                aux.j = min(n, i + window - 1)
                aux.clamped = aux.j < i + window - 1
                aux.tree = build_tree(text, terminal, i, aux.j, word.alphabet.symbols)
                stats.aux_built += 1
                if trace:
                    logger.debug(f"Built aux tree over [{i}..{aux.j}] (d={aux.d})")
            if checker:
                checker.check_aux(aux, depth_y, i)
            value = compute_mp(aux.tree, max(s, depth_y // k), k, stats.mp)
            set_pi(main, leaf, value)
            if checker:
                checker.check_window(aux, i, value)
        if checker:
            checker.check_new_node(main, leaf)
        rmp[i - 1] = nodes[leaf].pi

    if aux.present:
        stats.aux_steps += aux.tree.steps
    stats.main_steps += main.steps
    return main, rmp


def compute_rmp(word: Word, s: int, k: int, debug: Optional[bool] = None,
                stats: Optional[EngineStats] = None) -> PeriodArray:
    """
    Right minimal period array: entry i is mp_s^k(w[i..n]).

    Args:
        word (Word): Input word, non-empty
        s (int): Periods must be longer than s
        k (int): Exponent, >= 2
        debug (bool): Run invariant assertions every iteration (defaults to ENGINE_DEBUG)
        stats (EngineStats): Optional counters to fill

    Returns:
        PeriodArray: rmp entries for positions 1..n
    """
    _check_parameters(word, s, k)
    debug = config.ENGINE_DEBUG if debug is None else debug
    stats = stats if stats is not None else EngineStats()
    _, rmp = _run_engine(word, s, k, debug, stats)
    logger.info(f"Computed rmp for n={len(word)}, k={k}, s={s} in {stats.total_steps} steps")
    return PeriodArray(tuple(rmp), k=k, s=s, direction='right')


def compute_lmp(word: Word, s: int, k: int, debug: Optional[bool] = None,
                stats: Optional[EngineStats] = None) -> PeriodArray:
    """Left minimal period array: lmp[i] = rmp of the reversed word at n+1-i."""
    _check_parameters(word, s, k)
    reversed_rmp = compute_rmp(word.reverse(), s, k, debug=debug, stats=stats)
    return PeriodArray(tuple(reversed(reversed_rmp.entries)), k=k, s=s, direction='left')


def annotated_tree(word: Word, s: int, k: int, debug: Optional[bool] = None) -> Tuple[SuffixTree, PeriodArray]:
    """
    The suffix tree of w with every node annotated by pi = mp_s^k(tau(v)).

    Returns:
        Tuple[SuffixTree, PeriodArray]: the annotated tree and the rmp array read off its leaves
    """
    _check_parameters(word, s, k)
    debug = config.ENGINE_DEBUG if debug is None else debug
    tree, rmp = _run_engine(word, s, k, debug, EngineStats())
    return tree, PeriodArray(tuple(rmp), k=k, s=s, direction='right')


def period_array(word: Word, s: int, exponent: int, direction: str = 'right') -> PeriodArray:
    """
    rmp or lmp for any exponent >= 1.

    With exponent 1 every suffix (or reversed prefix) of length >= s+1 has
    minimal period s+1, so the array is filled directly.
    """
    if exponent < 1:
        raise InvalidParameter(f"exponent must be >= 1 (got {exponent})")
    if direction not in ('right', 'left'):
        raise InvalidParameter(f"direction must be 'right' or 'left' (got {direction})")
    n = len(word)
    if n == 0:
        raise EmptyWord("Cannot compute periods of the empty word")
    if exponent == 1:
        shortest = Period(s + 1)
        if direction == 'right':
            entries = tuple(shortest if n - i + 1 >= s + 1 else INF for i in range(1, n + 1))
        else:
            entries = tuple(shortest if i >= s + 1 else INF for i in range(1, n + 1))
        return PeriodArray(entries, k=1, s=s, direction=direction)
    if direction == 'right':
        return compute_rmp(word, s, exponent)
    return compute_lmp(word, s, exponent)
