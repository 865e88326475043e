"""
Pseudo-palindromes and special pseudo-powers under an antimorphic involution.

- compute_cmp: the maximal pseudo-palindrome radius at every center,
  read off as LCA depths in the suffix tree of w.£.phi(w)
- detect_suffix_form:      x^(k-1) phi(x)   via lmp (exponent k-1) vs cmp
- detect_prefix_form:      phi(x) x^(k-1)   via rmp (exponent k-1) vs cmp
- detect_alternating_form: x phi(x) x ...   via k-1 consecutive cmp hits
"""

import logging
from dataclasses import dataclass
from typing import Optional

from errors import InvalidParameter
from lca import build_index, lca
from rmp_engine import period_array
from suffix_tree import build_tree
from words import CmpArray, InvolutionMap, Word, encode_pair

logger = logging.getLogger(__name__)

SEPARATOR_SYMBOL = '£'
FORMS = ('suffix', 'prefix', 'alternating')


@dataclass(frozen=True)
class Witness:
    """A factor of the detected form: 1-based start, x, and the whole factor."""

    position: int
    x: str
    factor: str

    def to_json(self) -> dict:
        return {"position": self.position, "x": self.x}


@dataclass(frozen=True)
class Verdict:
    """Detector result; `classic` is the NO/YES convention (NO = factor exists)."""

    form: str
    k: int
    s: int
    found: bool
    witness: Optional[Witness] = None
    operations: int = 0

    @property
    def verdict(self) -> str:
        return "found" if self.found else "none"

    @property
    def classic(self) -> str:
        return "NO" if self.found else "YES"

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "classic": self.classic, "form": self.form}


def _check_parameters(k: int, s: int) -> None:
    if k < 2:
        raise InvalidParameter(f"k must be >= 2 (got {k})")
    if s < 0:
        raise InvalidParameter(f"s must be >= 0 (got {s})")


def compute_cmp(word: Word, phi: InvolutionMap) -> CmpArray:
    """
    Centralized maximal pseudo-palindrome array of a word.

    Args:
        word (Word): Input word; every letter must have a complement under phi
        phi (InvolutionMap): The antimorphic involution

    Returns:
        CmpArray: entries for centers 0..n
    """
    text = word.text
    n = len(text)
    encoded, image = encode_pair(text, phi)
    if n < 2:
        return CmpArray((0,) * (n + 1))

    sigma = encoded.sigma
    terminal = sigma
    separator = sigma + 1
    joined = encoded.codes + (separator,) + tuple(image)
    symbols = tuple(encoded.alphabet.symbols) + ('$', SEPARATOR_SYMBOL)
    tree = build_tree(joined, terminal, 1, 2 * n + 1, symbols)
    index = build_index(tree, tree.root)

    entries = [0] * (n + 1)
    for i in range(1, n):
        ancestor = lca(index, tree.leaves[i + 1], tree.leaves[2 * n - i + 2])
        entries[i] = tree.nodes[ancestor].depth
    logger.info(f"Computed cmp for n={n} under '{phi.name}'")
    return CmpArray(tuple(entries))


def _is_power(text: str, start: int, length: int, count: int) -> bool:
    """text[start:start + count*length] == (text[start:start+length])^count (0-based)."""
    if start < 0 or start + count * length > len(text):
        return False
    return text[start:start + count * length] == text[start:start + length] * count


def detect_suffix_form(word: Word, phi: InvolutionMap, k: int, s: int, cmp: Optional[CmpArray] = None) -> Verdict:
    """
    Does w contain a factor x^(k-1) phi(x) with |x| > s?

    A center i qualifies when lmp (exponent k-1) at i is <= cmp[i]. The
    witness is taken at the qualifying center with the widest
    pseudo-palindrome, with the longest x valid there.
    """
    _check_parameters(k, s)
    cmp = cmp if cmp is not None else compute_cmp(word, phi)
    n = len(word)
    if n == 0:
        return Verdict('suffix', k, s, found=False)
    lmp = period_array(word, s, k - 1, 'left')

    best = None
    for i in range(1, n + 1):
        period = lmp.at(i)
        if period.is_finite and period.value <= cmp.at(i):
            if best is None or cmp.at(i) > cmp.at(best):
                best = i
    if best is None:
        return Verdict('suffix', k, s, found=False)

    text = word.text
    for p in range(cmp.at(best), lmp.at(best).value - 1, -1):
        start = best - (k - 1) * p
        if p > s and _is_power(text, start, p, k - 1):
            break
    witness = Witness(start + 1, text[start:start + p], text[start:best + p])
    return Verdict('suffix', k, s, found=True, witness=witness)


def detect_prefix_form(word: Word, phi: InvolutionMap, k: int, s: int, cmp: Optional[CmpArray] = None) -> Verdict:
    """
    Does w contain a factor phi(x) x^(k-1) with |x| > s?

    A position i qualifies when rmp (exponent k-1) at i is <= cmp[i-1].
    """
    _check_parameters(k, s)
    cmp = cmp if cmp is not None else compute_cmp(word, phi)
    n = len(word)
    if n == 0:
        return Verdict('prefix', k, s, found=False)
    rmp = period_array(word, s, k - 1, 'right')

    best = None
    for i in range(1, n + 1):
        period = rmp.at(i)
        if period.is_finite and period.value <= cmp.at(i - 1):
            if best is None or cmp.at(i - 1) > cmp.at(best - 1):
                best = i
    if best is None:
        return Verdict('prefix', k, s, found=False)

    text = word.text
    for p in range(cmp.at(best - 1), rmp.at(best).value - 1, -1):
        if p > s and _is_power(text, best - 1, p, k - 1):
            break
    start = best - 1 - p
    witness = Witness(start + 1, text[best - 1:best - 1 + p], text[start:best - 1 + (k - 1) * p])
    return Verdict('prefix', k, s, found=True, witness=witness)


def detect_alternating_form(word: Word, phi: InvolutionMap, k: int, s: int,
                            cmp: Optional[CmpArray] = None) -> Verdict:
    """
    Does w contain (x phi(x))^(k/2), or (x phi(x))^(k//2) x for odd k, with |x| > s?

    Scans every stride d and offset i for k-1 consecutive centers
    i+d, i+2d, ... with cmp >= d. Strides run from n//k down so the first
    hit carries the longest x. O(n^2/k) operations.
    """
    _check_parameters(k, s)
    cmp = (cmp if cmp is not None else compute_cmp(word, phi)).entries
    n = len(word)
    text = word.text
    operations = 0
    for d in range(n // k, s, -1):
        for i in range(d):
            consecutive = 0
            for j in range(1, (n - i) // d):
                operations += 1
                if cmp[i + j * d] >= d:
                    consecutive += 1
                else:
                    consecutive = 0
                if consecutive >= k - 1:
                    first_center = i + (j - (k - 2)) * d
                    start = first_center - d
                    witness = Witness(start + 1, text[start:start + d], text[start:start + k * d])
                    return Verdict('alternating', k, s, found=True, witness=witness, operations=operations)
    return Verdict('alternating', k, s, found=False, operations=operations)


DETECTORS = {
    'suffix': detect_suffix_form,
    'prefix': detect_prefix_form,
    'alternating': detect_alternating_form,
}


def detect(word: Word, phi: InvolutionMap, k: int, s: int, form: str,
           cmp: Optional[CmpArray] = None) -> Verdict:
    """Dispatch to the detector for a form name; cmp, when given, must be compute_cmp(word, phi)."""
    try:
        detector = DETECTORS[form]
    except KeyError:
        raise InvalidParameter(f"Unknown form '{form}'; expected one of {', '.join(FORMS)}") from None
    return detector(word, phi, k, s, cmp)
