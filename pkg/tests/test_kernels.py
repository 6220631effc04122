"""Compiled and pure kernels must agree with each other and with naive loops."""

import random

import pytest

from conftest import brute_hamming, random_code
from tgv import _pykernels as pure
from tgv import kernels

try:
    from tgv import _speedups as compiled
except ImportError:
    compiled = None

IMPLS = [pure] if compiled is None else [pure, compiled]


def _instances(seed=3, count=12):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        code = random_code(rng, rng.choice((2, 3, 4)), rng.randint(1, 4), max_size=20)
        out.append(code)
    return out


def _naive_census(code):
    counts = [0] * (code.m + 1)
    for a in code.words:
        for b in code.words:
            counts[brute_hamming(a, b)] += 1
    return counts


@pytest.mark.parametrize("impl", IMPLS, ids=lambda mod: mod.__name__)
def test_distance_census_matches_naive(impl):
    for code in _instances():
        got = impl.distance_census(code.blob, code.size, code.m)
        assert got == _naive_census(code)


@pytest.mark.parametrize("impl", IMPLS, ids=lambda mod: mod.__name__)
def test_local_census_matches_naive(impl):
    for code in _instances(seed=4):
        table = impl.local_census(code.blob, code.size, code.m)
        for row, center in zip(table, code.words):
            expected = [0] * (code.m + 1)
            for w in code.words:
                expected[brute_hamming(center, w)] += 1
            assert row == expected


@pytest.mark.parametrize("impl", IMPLS, ids=lambda mod: mod.__name__)
def test_adjacency_structure(impl):
    for code in _instances(seed=5, count=8):
        for threshold in (0, 1, code.m):
            edges, degrees, rows = impl.adjacency(
                code.blob, code.size, code.m, threshold
            )
            bits = [int.from_bytes(r, "little") for r in rows]
            assert sum(degrees) == 2 * edges
            for i in range(code.size):
                assert not (bits[i] >> i) & 1  # no loops
                assert bits[i].bit_count() == degrees[i]
                for j in range(code.size):
                    expected = i != j and (
                        brute_hamming(code.words[i], code.words[j]) >= threshold
                    )
                    assert bool((bits[i] >> j) & 1) == expected
                    assert ((bits[i] >> j) & 1) == ((bits[j] >> i) & 1)


@pytest.mark.skipif(compiled is None, reason="compiled extension not built")
def test_compiled_and_pure_agree():
    for code in _instances(seed=6, count=10):
        assert pure.distance_census(code.blob, code.size, code.m) == list(
            compiled.distance_census(code.blob, code.size, code.m)
        )
        assert pure.local_census(code.blob, code.size, code.m) == [
            list(row) for row in compiled.local_census(code.blob, code.size, code.m)
        ]
        for threshold in (1, 2):
            pe, pd, pr = pure.adjacency(code.blob, code.size, code.m, threshold)
            ce, cd, cr = compiled.adjacency(code.blob, code.size, code.m, threshold)
            assert (pe, pd, pr) == (ce, list(cd), list(cr))


def test_wide_alphabet_fallback_path():
    # Symbols >= 16 exercise the non-packed branch of the pure kernels.
    blob = bytes([0, 20, 0, 21, 1, 20])
    counts = pure.distance_census(blob, 3, 2)
    assert counts == [3, 4, 2]


def test_dispatch_exposes_selection():
    assert kernels.HAVE_COMPILED == (compiled is not None)
    assert callable(kernels.distance_census)
