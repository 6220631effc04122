"""Shared fixtures and independent brute-force oracles for the test suite.

The oracles here deliberately avoid the package's kernels and polynomial
machinery: plain double loops and dict counting, so they can referee them.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import strategies as st

from tgv import Code


def brute_hamming(a, b) -> int:
    assert len(a) == len(b)
    return sum(x != y for x, y in zip(a, b))


def brute_pair_counts(code: Code) -> list[int]:
    """Ordered-pair distance census, diagonal included; plain double loop."""
    counts = [0] * (code.m + 1)
    for a in code.words:
        for b in code.words:
            counts[brute_hamming(a, b)] += 1
    return counts


def brute_enumerator_coeffs(code: Code) -> list[Fraction]:
    return [Fraction(c, code.size) for c in brute_pair_counts(code)]


def brute_local_counts(code: Code, center) -> list[int]:
    counts = [0] * (code.m + 1)
    for w in code.words:
        counts[brute_hamming(tuple(center), w)] += 1
    return counts


def random_code(rng: random.Random, q: int, m: int, max_size: int | None = None) -> Code:
    space = q**m
    hi = min(max_size or space, space)
    size = rng.randint(1, hi)
    cells = list(product(range(q), repeat=m))
    return Code(q, m, tuple(rng.sample(cells, size)))


def random_code_corpus(seed: int, count: int, qs=(2, 3), max_m=5, max_size=16) -> list[Code]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        q = rng.choice(qs)
        m = rng.randint(1, max_m)
        out.append(random_code(rng, q, m, max_size=max_size))
    return out


def code_strategy(max_q: int = 3, max_m: int = 4, max_size: int = 8):
    """Hypothesis strategy for small codes."""

    def build(q_and_m):
        q, m = q_and_m
        word = st.tuples(*([st.integers(0, q - 1)] * m))
        return st.sets(word, min_size=1, max_size=min(max_size, q**m)).map(
            lambda words: Code(q, m, tuple(words))
        )

    return st.tuples(st.integers(2, max_q), st.integers(1, max_m)).flatmap(build)


@pytest.fixture
def two_code() -> Code:
    return Code.from_words(2, 2, [(0, 0), (1, 1)])


@pytest.fixture
def seven_code() -> Code:
    """All nonzero binary words of length 3."""
    words = [w for w in product(range(2), repeat=3) if any(w)]
    return Code.from_words(2, 3, words)


@pytest.fixture
def full22() -> Code:
    return Code.full(2, 2)
