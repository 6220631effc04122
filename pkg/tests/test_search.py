"""Canonical forms, isomorph-folded enumeration, and the violation hunt."""

import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import code_strategy, random_code
from tgv import (
    Code,
    GuardError,
    SearchConfig,
    SearchResult,
    Strategy,
    canonical_form,
    enumerate_canonical_codes,
    lemma8_lhs,
    run_search,
)
from tgv.search import canonical_digest, group_size


class TestCanonicalForm:
    def test_symbol_swap_equivalence(self):
        a = Code.from_words(2, 2, [(0, 0), (1, 1)])
        b = Code.from_words(2, 2, [(0, 1), (1, 0)])
        assert canonical_form(a) == canonical_form(b)

    def test_global_flip_equivalence(self, seven_code):
        flipped = Code.from_words(
            2, 3, [tuple(1 - s for s in w) for w in seven_code.words]
        )
        assert canonical_form(seven_code) == canonical_form(flipped)

    @given(code_strategy(max_q=3, max_m=3, max_size=5))
    @settings(max_examples=30, deadline=None)
    def test_idempotent(self, code):
        canon = canonical_form(code)
        assert canonical_form(canon) == canon

    def test_lemma8_invariant_under_group_action(self):
        rng = random.Random(43)
        for _ in range(6):
            code = random_code(rng, 2, 3, max_size=6)
            sigma = rng.sample(range(3), 3)
            flips = [rng.randint(0, 1) for _ in range(3)]
            words = [
                tuple(w[sigma[i]] ^ flips[i] for i in range(3)) for w in code.words
            ]
            other = Code.from_words(2, 3, words)
            z = Fraction(rng.randint(1, 15), 16)
            assert lemma8_lhs(code, z) == lemma8_lhs(other, z)
            assert lemma8_lhs(code, z) == lemma8_lhs(canonical_form(code), z)

    def test_group_guard(self):
        huge = Code.from_words(2, 9, [tuple([0] * 9), tuple([1] * 9)])
        assert group_size(2, 9) > 2_000_000
        with pytest.raises(GuardError):
            canonical_form(huge)

    def test_digest_matches_for_equivalent_codes(self):
        a = Code.from_words(2, 2, [(0, 0), (1, 1)])
        b = Code.from_words(2, 2, [(0, 1), (1, 0)])
        assert canonical_digest(a) == canonical_digest(b)


class TestEnumeration:
    def test_binary_length_two_representative_count(self):
        reps = enumerate_canonical_codes(2, 2)
        assert len(reps) == 5
        assert all(canonical_form(c) == c for c in reps)

    def test_size_filter(self):
        reps = enumerate_canonical_codes(2, 2, (2, 2))
        assert sorted(c.size for c in reps) == [2, 2]

    def test_space_guard(self):
        with pytest.raises(GuardError):
            enumerate_canonical_codes(3, 3)

    def test_covers_all_codes_up_to_equivalence(self):
        reps = {c.words for c in enumerate_canonical_codes(2, 2)}
        cells = list(product(range(2), repeat=2))
        for mask in range(1, 16):
            words = tuple(cells[i] for i in range(4) if (mask >> i) & 1)
            canon = canonical_form(Code(2, 2, words))
            assert canon.words in reps


class TestRunSearch:
    def test_exhaustive_binary_length_two(self):
        result = run_search(SearchConfig(q=2, m=2, strategy=Strategy.EXHAUSTIVE))
        assert not result.violation_found
        assert result.exact_certificate is None
        assert result.best_sup <= 1.0
        assert result.candidates_examined == 5

    def test_exhaustive_binary_length_three(self):
        result = run_search(
            SearchConfig(q=2, m=3, strategy=Strategy.EXHAUSTIVE, z_grid_size=64)
        )
        assert not result.violation_found
        assert result.best_sup <= 1.0

    def test_exhaustive_guard(self):
        with pytest.raises(GuardError):
            run_search(SearchConfig(q=3, m=3, strategy=Strategy.EXHAUSTIVE))

    def test_random_deterministic(self):
        cfg = SearchConfig(
            q=2, m=3, strategy=Strategy.RANDOM, budget=12, seed=7, z_grid_size=32
        )
        assert run_search(cfg) == run_search(cfg)

    def test_random_monotone_budget(self):
        small = run_search(
            SearchConfig(q=2, m=3, strategy=Strategy.RANDOM, budget=8, seed=3, z_grid_size=32)
        )
        large = run_search(
            SearchConfig(q=2, m=3, strategy=Strategy.RANDOM, budget=16, seed=3, z_grid_size=32)
        )
        assert large.best_sup >= small.best_sup

    def test_threads_do_not_change_result(self):
        base = SearchConfig(
            q=2, m=3, strategy=Strategy.RANDOM, budget=10, seed=5, z_grid_size=32
        )
        threaded = SearchConfig(
            q=2, m=3, strategy=Strategy.RANDOM, budget=10, seed=5, z_grid_size=32, threads=4
        )
        assert run_search(base) == run_search(threaded)

    def test_local_runs_within_budget(self):
        result = run_search(
            SearchConfig(
                q=2, m=2, strategy=Strategy.LOCAL, budget=25, seed=1, z_grid_size=32
            )
        )
        assert isinstance(result, SearchResult)
        assert result.candidates_examined <= 25
        assert not result.violation_found

    def test_local_monotone_budget(self):
        def run(budget):
            return run_search(
                SearchConfig(
                    q=2, m=2, strategy=Strategy.LOCAL, budget=budget, seed=9, z_grid_size=32
                )
            )

        assert run(40).best_sup >= run(20).best_sup


class TestJournal:
    def test_written_and_resumed(self, tmp_path):
        path = tmp_path / "journal.tsv"
        cfg = SearchConfig(q=2, m=2, strategy=Strategy.EXHAUSTIVE, z_grid_size=32)
        first = run_search(cfg, journal_path=str(path))
        lines = path.read_text().strip().splitlines()
        assert len(lines) == first.candidates_examined
        for line in lines:
            digest, sup, z = line.split("\t")
            assert len(digest) == 64
            assert float(sup) <= 1.0
            assert 0 < float(z) < 1
        # Resuming re-examines the same candidates without re-evaluating.
        second = run_search(cfg, journal_path=str(path))
        assert path.read_text().strip().splitlines() == lines
        assert second.candidates_examined == first.candidates_examined
        assert second.best_sup == pytest.approx(first.best_sup, abs=1e-10)
