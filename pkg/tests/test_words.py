import pytest
from hypothesis import given
from hypothesis import strategies as st

from errors import AlphabetTooLarge, InvalidParameter, UnknownLetter
from words import (
    INF,
    Alphabet,
    InvolutionMap,
    Period,
    Word,
    apply_antimorphism,
    encode_pair,
    reverse,
    validate_involution,
)

dna = st.text(alphabet="ACGT", min_size=1, max_size=40)


def test_period_ordering_with_ints():
    assert Period(3) == 3
    assert Period(2) < Period(3) < INF
    assert INF > 10 ** 9
    assert sorted([INF, Period(4), Period(1)]) == [Period(1), Period(4), INF]
    assert INF == INF
    assert INF != Period(1)


def test_period_serialization():
    assert str(INF) == "inf"
    assert str(Period(5)) == "5"
    assert INF.to_json() is None
    assert Period.from_json(None) is INF
    assert Period.from_json(7) == 7


def test_period_rejects_zero():
    with pytest.raises(InvalidParameter):
        Period(0)


def test_alphabet_is_sorted_and_dense():
    word = Word.from_text("banana")
    assert word.alphabet.symbols == ("a", "b", "n")
    assert word.codes == (1, 0, 2, 0, 2, 0)
    assert word.sigma == 3
    assert word.text == "banana"


def test_alphabet_size_limit():
    with pytest.raises(AlphabetTooLarge):
        Alphabet(tuple(chr(0x100 + i) for i in range(300)))


def test_unknown_letter_for_fixed_alphabet():
    with pytest.raises(UnknownLetter) as excinfo:
        Word.from_text("abz", Alphabet.from_symbols("ab"))
    assert excinfo.value.letter == "z"


def test_positions_are_one_based():
    word = Word.from_text("abc")
    assert word.letter(1) == 0
    assert word.factor(2, 3).text == "bc"
    assert len(word.factor(3, 2)) == 0
    with pytest.raises(InvalidParameter):
        word.letter(4)


def test_reverse():
    assert reverse(Word.from_text("abb")).text == "bba"


def test_watson_crick_map():
    phi = InvolutionMap.watson_crick()
    assert phi.map_letter("A") == "T"
    assert phi.map_letter("G") == "C"
    with pytest.raises(UnknownLetter):
        phi.map_letter("N")


def test_mirror_is_identity_on_letters():
    phi = InvolutionMap.mirror()
    assert phi.map_letter("x") == "x"
    assert apply_antimorphism(Word.from_text("abc"), phi).text == "cba"


def test_apply_antimorphism_extends_alphabet():
    image = apply_antimorphism(Word.from_text("ACG"), InvolutionMap.watson_crick())
    assert image.text == "CGT"
    assert "T" in image.alphabet.symbols


@given(dna)
def test_antimorphism_is_an_involution(text):
    phi = InvolutionMap.watson_crick()
    word = Word.from_text(text, phi.joint_alphabet(text))
    assert apply_antimorphism(apply_antimorphism(word, phi), phi).text == text


def test_validate_involution_reports_first_violation():
    assert validate_involution(InvolutionMap.watson_crick()).ok
    assert validate_involution(InvolutionMap.mirror()).ok
    report = validate_involution(InvolutionMap({"A": "T", "T": "G", "G": "A"}))
    assert not report.ok
    assert report.violating_letter == "A"


def test_encode_pair_shares_alphabet():
    word, image = encode_pair("AC", InvolutionMap.watson_crick())
    assert word.alphabet.symbols == ("A", "C", "G", "T")
    assert word.codes == (0, 1)
    assert tuple(image) == (2, 3)
