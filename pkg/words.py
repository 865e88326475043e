"""
Words, periods and antimorphic involutions.

This module holds the value types every other module works on:
- Alphabet / Word: dense letter coding of an input string
- Period: a finite period length or the distinguished INF
- PeriodArray / CmpArray: per-position results with 1-based access
- InvolutionMap: letter complement table for an antimorphic involution
"""

import logging
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from config import MAX_ALPHABET_SIZE
from errors import AlphabetTooLarge, InvalidParameter, UnknownLetter

logger = logging.getLogger(__name__)


@total_ordering
@dataclass(frozen=True, slots=True)
class Period:
    """
    An extended natural: a period length m >= 1, or INF when no power exists.

    Compares against ints and other periods; INF is greater than every
    finite value and equal only to itself.
    """

    value: Optional[int] = None

    def __post_init__(self):
        if self.value is not None and self.value < 1:
            raise InvalidParameter(f"Period length must be >= 1 (got {self.value})")

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def _key(self) -> Tuple[int, int]:
        return (1, 0) if self.value is None else (0, self.value)

    @staticmethod
    def _coerce(other) -> Optional["Period"]:
        if isinstance(other, Period):
            return other
        if isinstance(other, int) and not isinstance(other, bool) and other >= 1:
            return Period(other)
        return None

    def __eq__(self, other) -> bool:
        other_period = Period._coerce(other)
        if other_period is None:
            return NotImplemented
        return self.value == other_period.value

    def __lt__(self, other) -> bool:
        other_period = Period._coerce(other)
        if other_period is None:
            return NotImplemented
        return self._key() < other_period._key()

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)

    def __repr__(self) -> str:
        return "INF" if self.value is None else f"Period({self.value})"

    def to_json(self) -> Optional[int]:
        """Serialize for JSON output: INF becomes null."""
        return self.value

    @classmethod
    def from_json(cls, raw: Optional[int]) -> "Period":
        return INF if raw is None else cls(int(raw))


INF = Period(None)


@dataclass(frozen=True)
class Alphabet:
    """Bijection between raw symbols and the dense codes 0..sigma-1."""

    symbols: Tuple[str, ...]
    codes: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.symbols) > MAX_ALPHABET_SIZE:
            raise AlphabetTooLarge(
                f"Alphabet has {len(self.symbols)} symbols; at most {MAX_ALPHABET_SIZE} are supported"
            )
        if len(set(self.symbols)) != len(self.symbols):
            raise InvalidParameter("Alphabet symbols must be distinct")
        object.__setattr__(self, 'codes', {symbol: code for code, symbol in enumerate(self.symbols)})

    @classmethod
    def from_symbols(cls, symbols: Iterable[str]) -> "Alphabet":
        """Discover an alphabet: distinct symbols in sorted order."""
        return cls(tuple(sorted(set(symbols))))

    @property
    def size(self) -> int:
        return len(self.symbols)

    def code(self, symbol: str) -> int:
        try:
            return self.codes[symbol]
        except KeyError:
            raise UnknownLetter(symbol, "not in alphabet") from None

    def symbol(self, code: int) -> str:
        return self.symbols[code]


@dataclass(frozen=True)
class Word:
    """A letter-coded word; positions are 1-based at the API boundary."""

    codes: Tuple[int, ...]
    alphabet: Alphabet

    @classmethod
    def from_text(cls, text: str, alphabet: Optional[Alphabet] = None) -> "Word":
        """
        Encode a string.

        Args:
            text (str): Raw symbols, one character per letter
            alphabet (Alphabet): Alphabet to encode with; discovered from text if omitted

        Returns:
            Word: The encoded word
        """
        alphabet = alphabet or Alphabet.from_symbols(text)
        return cls(tuple(alphabet.code(symbol) for symbol in text), alphabet)

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.codes)

    @property
    def sigma(self) -> int:
        return self.alphabet.size

    @property
    def text(self) -> str:
        return ''.join(self.alphabet.symbols[code] for code in self.codes)

    def letter(self, position: int) -> int:
        """Code of the letter at 1-based position."""
        if not 1 <= position <= len(self.codes):
            raise InvalidParameter(f"Position {position} outside 1..{len(self.codes)}")
        return self.codes[position - 1]

    def factor(self, first: int, last: int) -> "Word":
        """The factor w[first..last] (1-based, inclusive); empty when last < first."""
        if last < first:
            return Word((), self.alphabet)
        if first < 1 or last > len(self.codes):
            raise InvalidParameter(f"Factor [{first}..{last}] outside 1..{len(self.codes)}")
        return Word(self.codes[first - 1:last], self.alphabet)

    def reverse(self) -> "Word":
        return Word(self.codes[::-1], self.alphabet)

    def __str__(self) -> str:
        return self.text


def reverse(word: Word) -> Word:
    """The mirror image w^R of a word."""
    return word.reverse()


@dataclass(frozen=True)
class PeriodArray:
    """
    Per-position minimal periods of length n.

    `direction` is 'right' for rmp (suffix w[i..n]) and 'left' for lmp
    (reversed prefix w[1..i]^R).
    """

    entries: Tuple[Period, ...]
    k: int
    s: int
    direction: str = 'right'

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Period]:
        return iter(self.entries)

    def at(self, position: int) -> Period:
        """Entry at 1-based position."""
        if not 1 <= position <= len(self.entries):
            raise InvalidParameter(f"Position {position} outside 1..{len(self.entries)}")
        return self.entries[position - 1]

    def to_json(self) -> list:
        return [entry.to_json() for entry in self.entries]


@dataclass(frozen=True)
class CmpArray:
    """Centralized maximal pseudo-palindrome radii, indices 0..n."""

    entries: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def at(self, index: int) -> int:
        if not 0 <= index < len(self.entries):
            raise InvalidParameter(f"Index {index} outside 0..{len(self.entries) - 1}")
        return self.entries[index]

    def to_json(self) -> list:
        return list(self.entries)


@dataclass(frozen=True)
class InvolutionMap:
    """
    Letter complement table of an antimorphic involution phi.

    Applying phi to a word reverses it and complements every letter.
    With `identity_default` unmapped letters are their own complement
    (the mirror involution is the empty table with this flag set).
    """

    complement: Mapping[str, str]
    name: str = 'custom'
    identity_default: bool = False

    @classmethod
    def watson_crick(cls) -> "InvolutionMap":
        return cls({'A': 'T', 'T': 'A', 'C': 'G', 'G': 'C'}, name='watson-crick')

    @classmethod
    def mirror(cls) -> "InvolutionMap":
        return cls({}, name='mirror', identity_default=True)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[str, str]], name: str = 'custom') -> "InvolutionMap":
        """Build a map from symmetric pairs: ('A', 'T') means A <-> T."""
        complement: Dict[str, str] = {}
        for left, right in pairs:
            complement[left] = right
            complement[right] = left
        return cls(complement, name=name)

    def map_letter(self, symbol: str) -> str:
        mapped = self.complement.get(symbol)
        if mapped is not None:
            return mapped
        if self.identity_default:
            return symbol
        raise UnknownLetter(symbol, f"no complement in morphism '{self.name}'")

    def symbols(self) -> Iterable[str]:
        """Every symbol the table mentions, on either side."""
        return set(self.complement) | set(self.complement.values())

    def joint_alphabet(self, text: str) -> Alphabet:
        """Alphabet covering a text and every complement its letters need."""
        return Alphabet.from_symbols(set(text) | set(self.map_letter(symbol) for symbol in set(text)))


@dataclass(frozen=True)
class InvolutionReport:
    """Verdict of validate_involution."""

    ok: bool
    violating_letter: Optional[str] = None
    message: str = ''


def validate_involution(phi: InvolutionMap) -> InvolutionReport:
    """
    Check complement(complement(a)) == a for every mapped letter.

    Returns:
        InvolutionReport: ok, or the first violating letter in table order
    """
    for letter, image in phi.complement.items():
        back = phi.complement.get(image)
        if back is None and phi.identity_default:
            back = image
        if back != letter:
            return InvolutionReport(
                ok=False,
                violating_letter=letter,
                message=f"{letter} -> {image} -> {back if back is not None else 'unmapped'}",
            )
    return InvolutionReport(ok=True)


def apply_antimorphism(word: Word, phi: InvolutionMap) -> Word:
    """
    Apply phi: reverse the word, then complement each letter.

    Args:
        word (Word): Input word
        phi (InvolutionMap): Complement table

    Returns:
        Word: phi(word), encoded over the word's alphabet when it covers the
        image, otherwise over the joint alphabet of word and image
    """
    symbols = word.alphabet.symbols
    image = ''.join(phi.map_letter(symbols[code]) for code in reversed(word.codes))
    alphabet = word.alphabet
    if any(symbol not in alphabet.codes for symbol in image):
        alphabet = Alphabet.from_symbols(set(symbols) | set(image))
    return Word.from_text(image, alphabet)


def encode_pair(text: str, phi: InvolutionMap) -> Tuple[Word, Sequence[int]]:
    """
    Encode a text and its phi-image over one shared alphabet.

    Returns:
        Tuple[Word, Sequence[int]]: the word and the codes of phi(word)
    """
    alphabet = phi.joint_alphabet(text)
    word = Word.from_text(text, alphabet)
    image = tuple(alphabet.code(phi.map_letter(symbol)) for symbol in reversed(text))
    return word, image
