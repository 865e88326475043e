"""
Brute-force reference implementations.

Nothing here imports the suffix tree modules. The direct definitions are
for short words only: mp is O(n^2), the arrays O(n^3). The diagonal and
center variants at the bottom use numpy and reach a few thousand letters.
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from words import INF, CmpArray, InvolutionMap, Period, PeriodArray, Word

logger = logging.getLogger(__name__)

FORMS = ('suffix', 'prefix', 'alternating')


def _mp_codes(codes: Sequence, s: int, k: int) -> Period:
    n = len(codes)
    for m in range(s + 1, n // k + 1):
        x = list(codes[:m])
        if list(codes[:k * m]) == x * k:
            return Period(m)
    return INF


def mp_oracle(word: Word, s: int, k: int) -> Period:
    """Smallest m > s with w[1..km] = (w[1..m])^k, else INF."""
    return _mp_codes(word.codes, s, k)


def rmp_oracle(word: Word, s: int, k: int) -> PeriodArray:
    """mp of every suffix w[i..n]."""
    codes = word.codes
    entries = tuple(_mp_codes(codes[i:], s, k) for i in range(len(codes)))
    return PeriodArray(entries, k=k, s=s, direction='right')


def lmp_oracle(word: Word, s: int, k: int) -> PeriodArray:
    """mp of every reversed prefix w[1..i]^R."""
    codes = word.codes
    entries = tuple(_mp_codes(codes[:i][::-1], s, k) for i in range(1, len(codes) + 1))
    return PeriodArray(entries, k=k, s=s, direction='left')


def _phi_text(text: str, phi: InvolutionMap) -> str:
    return ''.join(phi.map_letter(symbol) for symbol in reversed(text))


def cmp_oracle(word: Word, phi: InvolutionMap) -> CmpArray:
    """Center expansion at every index 0..n."""
    text = word.text
    n = len(text)
    entries = []
    for i in range(n + 1):
        m = 0
        while m < min(i, n - i) and phi.map_letter(text[i - m - 1]) == text[i + m]:
            m += 1
        entries.append(m)
    return CmpArray(tuple(entries))


def form_of(x: str, phi: InvolutionMap, k: int, form: str) -> str:
    """The factor shape a detector looks for, built from x."""
    image = _phi_text(x, phi)
    if form == 'suffix':
        return x * (k - 1) + image
    if form == 'prefix':
        return image + x * (k - 1)
    if form == 'alternating':
        return ''.join(x if t % 2 == 0 else image for t in range(k))
    raise ValueError(f"Unknown form: {form}")


def detect_oracle(word: Word, phi: InvolutionMap, k: int, s: int, form: str) -> Optional[Tuple[int, str]]:
    """
    Enumerate every factor and test the requested form directly.

    Returns:
        Optional[Tuple[int, str]]: (1-based start, x) of the first factor found, or None
    """
    text = word.text
    n = len(text)
    # x is the second block for the prefix form; the first block is phi(x)
    offset = 1 if form == 'prefix' else 0
    for p in range(s + 1, n // k + 1):
        for start in range(n - k * p + 1):
            x = text[start + offset * p:start + (offset + 1) * p]
            if text[start:start + k * p] == form_of(x, phi, k, form):
                return start + 1, x
    return None


def _runs(equal: np.ndarray) -> np.ndarray:
    """Length of the run of True values starting at every index."""
    size = len(equal)
    index = np.arange(size)
    stops = np.where(equal, size, index)
    return np.minimum.accumulate(stops[::-1])[::-1] - index


def _shift_runs(codes: np.ndarray, m: int) -> np.ndarray:
    """Entry i: longest t with codes[i:i+t] == codes[i+m:i+m+t]."""
    return _runs(codes[:-m] == codes[m:])


def rmp_by_diagonals(word: Word, s: int, k: int) -> PeriodArray:
    """
    rmp from one comparison diagonal per candidate period.

    Suffix i has a k-th power prefix of period m iff the diagonal at shift m
    runs for at least (k-1)m letters from i. O(n^2/k) work in numpy, so it
    reaches words of a few thousand letters.
    """
    codes = np.asarray(word.codes, dtype=np.int64)
    n = len(codes)
    best = np.zeros(n, dtype=np.int64)
    for m in range(s + 1, n // k + 1):
        head = best[:n - m]
        hit = (_shift_runs(codes, m) >= (k - 1) * m) & (head == 0)
        head[hit] = m
    entries = tuple(Period(int(value)) if value else INF for value in best)
    return PeriodArray(entries, k=k, s=s, direction='right')


def lmp_by_diagonals(word: Word, s: int, k: int) -> PeriodArray:
    """lmp as rmp_by_diagonals of the reversed word, read backwards."""
    reversed_rmp = rmp_by_diagonals(word.reverse(), s, k)
    return PeriodArray(tuple(reversed(reversed_rmp.entries)), k=k, s=s, direction='left')


def detect_by_centers(word: Word, phi: InvolutionMap, k: int, s: int, form: str) -> Optional[Tuple[int, str]]:
    """
    Same answer as detect_oracle, read off cmp_oracle and comparison diagonals.

    Blocks b, b' of length p side by side satisfy b' = phi(b) iff the
    center between them has cmp >= p, and x^(k-1) is a diagonal run of
    (k-2)p letters at shift p.
    """
    if form not in FORMS:
        raise ValueError(f"Unknown form: {form}")
    text = word.text
    n = len(text)
    codes = np.asarray(word.codes, dtype=np.int64)
    centers = np.asarray(cmp_oracle(word, phi).entries, dtype=np.int64)
    offset = 1 if form == 'prefix' else 0
    for p in range(s + 1, n // k + 1):
        starts = np.arange(n - k * p + 1)
        if form == 'alternating':
            ok = np.ones(len(starts), dtype=bool)
            for t in range(1, k):
                ok &= centers[starts + t * p] >= p
        else:
            boundary = (k - 1) * p if form == 'suffix' else p
            ok = centers[starts + boundary] >= p
            if k > 2:
                ok &= _shift_runs(codes, p)[starts + offset * p] >= (k - 2) * p
        hits = np.flatnonzero(ok)
        if len(hits):
            start = int(hits[0])
            return start + 1, text[start + offset * p:start + (offset + 1) * p]
    return None


def check_extension_lemma(u: Word, v: Word, s: int, k: int) -> bool:
    """If mp(u) is finite then mp(uv) == mp(u)."""
    mp_u = _mp_codes(u.codes, s, k)
    if mp_u.is_infinite:
        return True
    return _mp_codes(u.codes + v.codes, s, k) == mp_u


def check_shrink_lemma(u: Word, v: Word, s: int, k: int) -> bool:
    """mp(u) == mp(uv) when |u| >= k * mp(uv), else mp(u) is INF."""
    mp_u = _mp_codes(u.codes, s, k)
    mp_uv = _mp_codes(u.codes + v.codes, s, k)
    if mp_uv.is_finite and len(u) >= k * mp_uv.value:
        return mp_u == mp_uv
    return mp_u.is_infinite
