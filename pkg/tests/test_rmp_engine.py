import random
import string

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import EmptyWord, InvalidParameter, InvariantViolation
from oracle import lmp_oracle, mp_oracle, rmp_oracle
from rmp_engine import (
    EngineStats,
    annotate_split,
    annotated_tree,
    compute_lmp,
    compute_rmp,
    period_array,
    set_pi,
)
from suffix_tree import path_label, word_tree
from tests.helpers import all_words, fibonacci_word, random_word
from words import INF, Alphabet, Period, Word

BINARY = Alphabet.from_symbols("01")
FIG1_RMP = [3, INF, 1, 2, 2, INF, INF, 1, INF, INF]
FIG1_LMP = [INF, INF, INF, 1, INF, 3, 2, 2, 1, 5]


def test_fig1_golden_arrays(fig1):
    assert list(compute_rmp(fig1, 0, 2)) == FIG1_RMP
    assert list(compute_lmp(fig1, 0, 2)) == FIG1_LMP


def test_fig1_large_s(fig1):
    assert list(compute_rmp(fig1, 4, 2)) == [5] + [INF] * 9


def test_unary_word():
    word = Word.from_text("aaaa")
    assert list(compute_rmp(word, 0, 2)) == [1, 1, 1, INF]
    assert list(compute_lmp(word, 0, 2)) == [INF, 1, 1, 1]


def test_array_metadata(fig1):
    rmp = compute_rmp(fig1, 1, 3)
    lmp = compute_lmp(fig1, 1, 3)
    assert (rmp.k, rmp.s, rmp.direction) == (3, 1, 'right')
    assert lmp.direction == 'left'
    assert rmp.at(1) == rmp.entries[0]


def test_bad_parameters(fig1):
    with pytest.raises(EmptyWord):
        compute_rmp(Word.from_text(""), 0, 2)
    with pytest.raises(InvalidParameter):
        compute_rmp(fig1, 0, 1)
    with pytest.raises(InvalidParameter):
        compute_lmp(fig1, -2, 2)


def test_fibonacci_prefix_matches_oracle():
    word = Word.from_text(fibonacci_word(100))
    for k in (2, 3):
        assert compute_rmp(word, 0, k) == rmp_oracle(word, 0, k)


def test_short_binary_words_with_invariant_checks():
    for text in all_words("01", 8):
        word = Word.from_text(text, BINARY)
        for k in (2, 3):
            for s in (0, 1):
                assert compute_rmp(word, s, k, debug=True) == rmp_oracle(word, s, k), (text, s, k)
                assert compute_lmp(word, s, k, debug=True) == lmp_oracle(word, s, k), (text, s, k)


@settings(max_examples=150, deadline=None)
@given(
    st.sampled_from(["ab", "acgt", string.ascii_lowercase]).flatmap(
        lambda letters: st.text(alphabet=letters, min_size=1, max_size=80)
    ),
    st.integers(min_value=2, max_value=5),
    st.integers(min_value=0, max_value=3),
)
def test_random_words_match_oracle(text, k, s):
    word = Word.from_text(text)
    assert compute_rmp(word, s, k) == rmp_oracle(word, s, k)
    assert compute_lmp(word, s, k) == lmp_oracle(word, s, k)


@settings(max_examples=60, deadline=None)
@given(st.text(alphabet="ab", min_size=1, max_size=50), st.integers(min_value=2, max_value=4))
def test_debug_invariants_hold_on_periodic_words(seed, k):
    # repeating a short seed forces long runs of finite periods and aux trees
    word = Word.from_text((seed * (60 // len(seed) + 1))[:60] + seed)
    compute_rmp(word, 0, k, debug=True)


def test_annotated_tree_matches_oracle_on_every_node(fig1):
    tree, rmp = annotated_tree(fig1, 0, 2)
    assert list(rmp) == FIG1_RMP
    for node_id, node in enumerate(tree.nodes):
        label = path_label(tree, node_id).rstrip('$')
        assert node.pi == mp_oracle(Word.from_text(label, fig1.alphabet), 0, 2), label


def _fresh_pair(text):
    tree = word_tree(Word.from_text(text))
    z = tree.leaf(1)
    return tree, tree.parent(z), z


def test_annotate_split_boundary():
    tree, y, z = _fresh_pair("abab")
    assert tree.depth(y) == 2
    tree.node(z).pi = Period(1)
    assert annotate_split(tree, y, z, 2) == 1


def test_annotate_split_too_shallow():
    tree, y, z = _fresh_pair("abab")
    tree.node(z).pi = Period(2)
    assert annotate_split(tree, y, z, 2) is INF


def test_annotate_split_from_infinite():
    tree, y, z = _fresh_pair("abab")
    tree.node(z).pi = INF
    assert annotate_split(tree, y, z, 2) is INF


def test_annotate_split_needs_child_annotation():
    tree, y, z = _fresh_pair("abab")
    with pytest.raises(InvariantViolation):
        annotate_split(tree, y, z, 2)


def test_pi_is_written_once():
    tree, y, _ = _fresh_pair("abab")
    set_pi(tree, y, INF)
    with pytest.raises(InvariantViolation):
        set_pi(tree, y, Period(1))


def test_exponent_one_arrays():
    word = Word.from_text("abc")
    assert list(period_array(word, 1, 1, 'right')) == [2, 2, INF]
    assert list(period_array(word, 1, 1, 'left')) == [INF, 2, 2]
    assert period_array(word, 0, 2, 'left') == compute_lmp(word, 0, 2)
    with pytest.raises(InvalidParameter):
        period_array(word, 0, 0)
    with pytest.raises(InvalidParameter):
        period_array(word, 0, 2, 'up')


def test_debug_run_checks_the_leaf_bound():
    word = Word.from_text("0100101001001010", BINARY)
    stats = EngineStats()
    assert compute_rmp(word, 2, 2, debug=True, stats=stats) == rmp_oracle(word, 2, 2)
    assert stats.mp.check_leaf_bound
    assert stats.mp.calls > 0


def test_stats_are_filled():
    stats = EngineStats()
    compute_rmp(Word.from_text(fibonacci_word(300)), 0, 2, stats=stats)
    report = stats.to_json()
    assert report["main_steps"] > 0
    assert report["aux_built"] >= report["aux_destroyed"]
    assert report["total_steps"] == stats.main_steps + stats.aux_steps + stats.mp.leaves_visited


@pytest.mark.slow
def test_exhaustive_binary_words():
    for text in all_words("01", 12, min_length=9):
        word = Word.from_text(text, BINARY)
        for k in (2, 3, 4, 5):
            for s in (0, 1, 2, 3):
                assert compute_rmp(word, s, k) == rmp_oracle(word, s, k), (text, s, k)


@pytest.mark.slow
def test_long_random_words_match_oracle():
    rng = random.Random(2024)
    for alphabet in ("ab", "acgt", string.ascii_lowercase):
        for _ in range(5):
            word = Word.from_text(random_word(rng, alphabet, rng.randint(100, 250)))
            for k in (2, 3):
                assert compute_rmp(word, 0, k) == rmp_oracle(word, 0, k)


@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 5])
def test_steps_grow_linearly(k):
    rng = random.Random(7)
    counts = []
    for n in (1 << 14, 1 << 15):
        stats = EngineStats()
        compute_rmp(Word.from_text(random_word(rng, "01", n)), 0, k, stats=stats)
        counts.append(stats.total_steps)
    assert 1.8 <= counts[1] / counts[0] <= 2.4


@pytest.mark.slow
def test_steps_per_letter_do_not_grow_faster_than_k():
    n = 1 << 14
    word = Word.from_text(random_word(random.Random(11), "01", n))
    per_unit = {}
    for k in (2, 5):
        stats = EngineStats()
        compute_rmp(word, 0, k, stats=stats)
        per_unit[k] = stats.total_steps / (k * n)
    assert per_unit[5] <= 1.5 * per_unit[2]


@pytest.mark.parametrize("text, depth, expected", [
    ("abcabcabc", 6, Period(3)),
    ("0100101001", 5, INF),
])
def test_annotate_split_examples(text, depth, expected):
    tree, y, z = _fresh_pair(text)
    assert tree.depth(y) == depth
    tree.node(z).pi = Period(3)
    assert annotate_split(tree, y, z, 2) == expected
