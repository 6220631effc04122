"""Codes over {0..q-1}^m and their exact distance enumerators.

A code is a nonempty set of distinct equal-length words. The global distance
enumerator B(x) counts ordered codeword pairs by Hamming distance, normalized
by |C| (so B_0 = 1 and B(1) = |C|); local enumerators are the unnormalized
distance census seen from one codeword. Everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from operator import index
from typing import Iterable, Sequence

from . import kernels
from .errors import InputError
from .rational import RationalPolynomial

Word = tuple[int, ...]

MAX_FORMAT_ALPHABET = 10  # the text format writes one decimal digit per symbol


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """Number of coordinates where two equal-length words differ."""
    if len(a) != len(b):
        raise InputError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x != y for x, y in zip(a, b))


@dataclass(frozen=True)
class Code:
    """Immutable q-ary code of length m, words stored sorted for determinism."""

    q: int
    m: int
    words: tuple[Word, ...]

    def __post_init__(self):
        if self.q < 2:
            raise InputError(f"alphabet size must be >= 2, got {self.q}")
        if self.q > 255:
            # Symbols are byte-packed for the distance kernels.
            raise InputError(f"alphabet size must be <= 255, got {self.q}")
        if self.m < 1:
            raise InputError(f"word length must be >= 1, got {self.m}")
        try:
            words = tuple(tuple(index(s) for s in w) for w in self.words)
        except TypeError as exc:
            raise InputError(f"symbols must be integers: {exc}") from None
        if not words:
            raise InputError("a code must contain at least one word")
        for w in words:
            if len(w) != self.m:
                raise InputError(f"word {w} has length {len(w)}, expected {self.m}")
            for s in w:
                if not 0 <= s < self.q:
                    raise InputError(f"symbol {s} in word {w} outside [0, {self.q})")
        if len(set(words)) != len(words):
            raise InputError("duplicate words in code")
        object.__setattr__(self, "words", tuple(sorted(words)))

    @classmethod
    def from_words(cls, q: int, m: int, words: Iterable[Sequence[int]]) -> "Code":
        return cls(q, m, tuple(tuple(w) for w in words))

    @classmethod
    def full(cls, q: int, m: int) -> "Code":
        """The whole space {0..q-1}^m."""
        return cls(q, m, tuple(product(range(q), repeat=m)))

    @property
    def size(self) -> int:
        return len(self.words)

    @cached_property
    def word_set(self) -> frozenset[Word]:
        return frozenset(self.words)

    @cached_property
    def blob(self) -> bytes:
        """Flat symbol buffer consumed by the distance kernels."""
        return b"".join(bytes(w) for w in self.words)

    def __contains__(self, word: Sequence[int]) -> bool:
        return tuple(word) in self.word_set

    def __repr__(self) -> str:
        return f"Code(q={self.q}, m={self.m}, size={self.size})"


@dataclass(frozen=True)
class DistanceEnumerator:
    """Normalized pair census of a code: B_j = #pairs at distance j / |C|."""

    code: Code
    polynomial: RationalPolynomial

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self.polynomial.coefficients


@dataclass(frozen=True)
class LocalDistanceEnumerator:
    """Unnormalized distance census from one codeword to the whole code."""

    code: Code
    center: Word
    counts: tuple[int, ...]

    @property
    def polynomial(self) -> RationalPolynomial:
        return RationalPolynomial(self.counts)


def distance_enumerator(code: Code) -> DistanceEnumerator:
    """Exact B(x); counts all ordered pairs including the diagonal."""
    counts = kernels.distance_census(code.blob, code.size, code.m)
    size = code.size
    coeffs = tuple(Fraction(c, size) for c in counts)
    return DistanceEnumerator(code, RationalPolynomial(coeffs))


def local_distance_enumerator(code: Code, center: Sequence[int]) -> LocalDistanceEnumerator:
    """Distance census from `center`, which must be a codeword."""
    try:
        c = tuple(index(s) for s in center)
    except TypeError as exc:
        raise InputError(f"symbols must be integers: {exc}") from None
    if c not in code:
        raise InputError(f"center {c} is not a codeword")
    counts = [0] * (code.m + 1)
    for w in code.words:
        counts[hamming_distance(c, w)] += 1
    return LocalDistanceEnumerator(code, c, tuple(counts))


def all_local_enumerators(code: Code) -> tuple[LocalDistanceEnumerator, ...]:
    """Local census for every codeword in one O(|C|^2) pass, aligned with code.words."""
    table = kernels.local_census(code.blob, code.size, code.m)
    return tuple(
        LocalDistanceEnumerator(code, w, tuple(row))
        for w, row in zip(code.words, table)
    )


def power_enumerator(enumerator: RationalPolynomial, n: int) -> RationalPolynomial:
    """Distance enumerator of the n-fold product code: the exact n-th power."""
    if not isinstance(n, int) or n < 1:
        raise InputError(f"power requires an integer n >= 1, got {n!r}")
    return enumerator**n


def product_code(code: Code, n: int) -> Code:
    """The code C^n of length m*n, words formed by concatenating n codewords."""
    if n < 1:
        raise InputError(f"product power must be >= 1, got {n}")
    words = tuple(
        sum(parts, ()) for parts in product(code.words, repeat=n)
    )
    return Code(code.q, code.m * n, words)


def parse_code(text: str) -> Code:
    """Parse the code text format: header line `q m`, then one word per line.

    Words are whitespace-free strings of base-q digits (q <= 10). Lines
    starting with `#` and blank lines are ignored. Errors carry line numbers.
    """
    header: tuple[int, int] | None = None
    words: list[Word] = []
    seen: set[Word] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2:
                raise InputError(f"line {lineno}: expected header 'q m', got {line!r}")
            try:
                q, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise InputError(f"line {lineno}: non-integer header {line!r}") from None
            if not 2 <= q <= MAX_FORMAT_ALPHABET:
                raise InputError(
                    f"line {lineno}: alphabet size {q} outside [2, {MAX_FORMAT_ALPHABET}]"
                )
            if m < 1:
                raise InputError(f"line {lineno}: word length {m} must be >= 1")
            header = (q, m)
            continue
        q, m = header
        if len(line) != m or not (line.isascii() and line.isdigit()):
            raise InputError(
                f"line {lineno}: expected {m} base-{q} digits, got {line!r}"
            )
        word = tuple(int(ch) for ch in line)
        if any(s >= q for s in word):
            raise InputError(f"line {lineno}: digit out of range for alphabet {q}")
        if word in seen:
            raise InputError(f"line {lineno}: duplicate word {line!r}")
        seen.add(word)
        words.append(word)
    if header is None:
        raise InputError("empty input: missing 'q m' header line")
    if not words:
        raise InputError("no words after the header")
    return Code(header[0], header[1], tuple(words))


def serialize_code(code: Code) -> str:
    """Canonical text form: header, then sorted words, one per line."""
    if code.q > MAX_FORMAT_ALPHABET:
        raise InputError(
            f"text format supports alphabets up to {MAX_FORMAT_ALPHABET}, got q={code.q}"
        )
    lines = [f"{code.q} {code.m}"]
    lines.extend("".join(str(s) for s in w) for w in code.words)
    return "\n".join(lines) + "\n"
