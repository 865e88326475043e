import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import InvalidParameter
from oracle import cmp_oracle, detect_oracle, form_of
from pseudo import (
    FORMS,
    compute_cmp,
    detect,
    detect_alternating_form,
    detect_prefix_form,
    detect_suffix_form,
)
from tests.helpers import all_words
from words import InvolutionMap, Word

WC = InvolutionMap.watson_crick()
MIRROR = InvolutionMap.mirror()


def test_cmp_golden(fig1, mirror):
    assert list(compute_cmp(fig1, mirror)) == [0, 0, 0, 3, 0, 0, 0, 0, 2, 0, 0]


def test_cmp_small_words(watson_crick, mirror):
    assert list(compute_cmp(Word.from_text("ACGT"), watson_crick)) == [0, 0, 2, 0, 0]
    assert list(compute_cmp(Word.from_text("a"), mirror)) == [0, 0]
    assert list(compute_cmp(Word.from_text("AT"), watson_crick)) == [0, 1, 0]


@settings(max_examples=150, deadline=None)
@given(st.text(alphabet="ACGT", min_size=1, max_size=120))
def test_cmp_matches_center_expansion_dna(text):
    word = Word.from_text(text)
    assert compute_cmp(word, WC) == cmp_oracle(word, WC)


@settings(max_examples=150, deadline=None)
@given(st.text(alphabet="01", min_size=1, max_size=120))
def test_cmp_matches_center_expansion_mirror(text):
    word = Word.from_text(text)
    assert compute_cmp(word, MIRROR) == cmp_oracle(word, MIRROR)


def test_suffix_form_pseudo_square():
    verdict = detect_suffix_form(Word.from_text("ACGCGT"), WC, 2, 0)
    assert verdict.found
    assert (verdict.verdict, verdict.classic) == ("found", "NO")
    assert verdict.witness.x == "ACG"
    assert verdict.witness.position == 1
    assert verdict.witness.factor == "ACGCGT"


def test_prefix_form():
    verdict = detect_prefix_form(Word.from_text("CGTACG"), WC, 2, 0)
    assert verdict.found
    assert verdict.witness.x == "ACG"
    assert verdict.witness.position == 1
    assert verdict.witness.factor == "CGTACG"


def test_alternating_form():
    verdict = detect_alternating_form(Word.from_text("ACGTAC"), WC, 3, 0)
    assert verdict.found
    assert verdict.witness.x == "AC"
    assert verdict.witness.factor == "ACGTAC"
    assert verdict.operations > 0


def test_nothing_found():
    verdict = detect(Word.from_text("AAAA"), WC, 2, 0, "suffix")
    assert not verdict.found
    assert verdict.witness is None
    assert verdict.to_json() == {"verdict": "none", "classic": "YES", "form": "suffix"}


def test_s_excludes_short_x():
    assert detect(Word.from_text("ACGCGT"), WC, 2, 0, "suffix").found
    assert not detect(Word.from_text("ACGCGT"), WC, 2, 3, "suffix").found


def test_bad_arguments():
    word = Word.from_text("ACGT")
    with pytest.raises(InvalidParameter):
        detect(word, WC, 2, 0, "sideways")
    with pytest.raises(InvalidParameter):
        detect(word, WC, 1, 0, "suffix")
    with pytest.raises(InvalidParameter):
        detect(word, WC, 2, -1, "prefix")


def _check_against_oracle(text, phi, k, s):
    word = Word.from_text(text, phi.joint_alphabet(text))
    for form in FORMS:
        verdict = detect(word, phi, k, s, form)
        expected = detect_oracle(word, phi, k, s, form)
        assert verdict.found == (expected is not None), (text, k, s, form)
        if verdict.found:
            witness = verdict.witness
            p = len(witness.x)
            assert p > s
            assert witness.factor == form_of(witness.x, phi, k, form)
            assert text[witness.position - 1:witness.position - 1 + k * p] == witness.factor


def test_detectors_match_oracle_on_dna():
    for text in all_words("ACGT", 5):
        for k in (2, 3):
            for s in (0, 1):
                _check_against_oracle(text, WC, k, s)


def test_detectors_match_oracle_on_binary_mirror():
    for text in all_words("01", 9):
        for k in (2, 3, 4):
            _check_against_oracle(text, MIRROR, k, 0)


@settings(max_examples=100, deadline=None)
@given(
    st.text(alphabet="ACGT", min_size=1, max_size=40),
    st.integers(min_value=2, max_value=5),
    st.integers(min_value=0, max_value=2),
)
def test_detectors_match_oracle_random(text, k, s):
    _check_against_oracle(text, WC, k, s)


@settings(max_examples=100, deadline=None)
@given(st.text(alphabet="ACGT", min_size=1, max_size=60))
def test_alternating_square_is_suffix_square(text):
    word = Word.from_text(text, WC.joint_alphabet(text))
    assert detect_alternating_form(word, WC, 2, 0).found == detect_suffix_form(word, WC, 2, 0).found


@pytest.mark.parametrize("k", [2, 4, 8])
def test_alternating_operation_count(k):
    n = 1000
    verdict = detect_alternating_form(Word.from_text("A" * n), WC, k, 0)
    assert not verdict.found
    assert 0.25 <= verdict.operations / (n * n / k) <= 1.0


@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 4, 8])
def test_alternating_operation_count_scales_quadratically(k):
    counts = [detect_alternating_form(Word.from_text("A" * n), WC, k, 0).operations for n in (1000, 4000)]
    assert 8 <= counts[1] / counts[0] <= 32


@pytest.mark.slow
def test_detectors_match_oracle_on_longer_dna():
    for text in all_words("ACGT", 7, min_length=6):
        for k in (2, 3, 4):
            _check_against_oracle(text, WC, k, 0)


def test_distinct_letters_have_no_pseudo_square():
    word = Word.from_text("abcd")
    for form in FORMS:
        assert not detect(word, MIRROR, 2, 0, form).found


def test_detectors_reuse_a_given_cmp(watson_crick):
    word = Word.from_text("CGTACGCGT")
    cmp = compute_cmp(word, watson_crick)
    for form in FORMS:
        assert detect(word, watson_crick, 2, 0, form, cmp=cmp) == detect(word, watson_crick, 2, 0, form)
