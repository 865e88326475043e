"""Word generators shared by the test modules."""

import itertools
import random

FIG1 = "0100101001"


def all_words(alphabet, max_length, min_length=1):
    """Every word over alphabet with min_length <= length <= max_length."""
    for length in range(min_length, max_length + 1):
        for letters in itertools.product(alphabet, repeat=length):
            yield ''.join(letters)


def random_word(rng: random.Random, alphabet: str, length: int) -> str:
    return ''.join(rng.choice(alphabet) for _ in range(length))


def fibonacci_word(length: int) -> str:
    previous, current = "0", "01"
    while len(current) < length:
        previous, current = current, current + previous
    return current[:length]
