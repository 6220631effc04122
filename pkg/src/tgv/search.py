"""Searches code spaces for a Caro-Wei improvement witness.

The objective for a candidate code is the refined supremum of the LEMMA8
condition over z in (0, 1); a candidate wins outright when the exact LHS
exceeds 1 at a rational z, and the exact value is kept as a certificate.

Hamming distance is invariant under coordinate permutations composed with
per-coordinate symbol permutations, so the whole objective is too. Exhaustive
enumeration therefore walks orbit-minimal representatives only, and the
resume journal keys candidates by the hash of their canonical form.
"""

from __future__ import annotations

import enum
import hashlib
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterable, Sequence

from .codes import Code, Word, serialize_code
from .conditions import (
    ConditionKind,
    ConditionSweep,
    lemma8_lhs,
    snap_to_rational,
    sweep,
)
from .errors import GuardError, InputError

EXHAUSTIVE_SPACE_GUARD = 20  # max q^m for exhaustive enumeration
LOCAL_SPACE_GUARD = 4096  # max q^m for neighbourhood enumeration
CANONICAL_GROUP_LIMIT = 2_000_000  # max m! * (q!)^m for exact canonicalization
CACHED_GROUP_LIMIT = 50_000  # materialize the group below this size


class Strategy(str, enum.Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"
    LOCAL = "local"


@dataclass(frozen=True)
class SearchConfig:
    q: int
    m: int
    strategy: Strategy
    size_range: tuple[int, int] | None = None
    z_grid_size: int = 256
    budget: int = 1000
    seed: int = 0
    threads: int = 1

    def resolved_size_range(self) -> tuple[int, int]:
        space = self.q**self.m
        lo, hi = self.size_range if self.size_range is not None else (1, space)
        if not 1 <= lo <= hi <= space:
            raise InputError(f"size range [{lo}, {hi}] invalid for space {space}")
        return lo, hi


@dataclass(frozen=True)
class SearchResult:
    best_code: Code
    best_sup: float
    best_z: float
    violation_found: bool
    candidates_examined: int
    exact_certificate: Fraction | None


def group_size(q: int, m: int) -> int:
    """Order of the distance-preserving group: m! * (q!)^m."""
    return factorial(m) * factorial(q) ** m


def _encode(word: Word, q: int) -> int:
    idx = 0
    for s in word:
        idx = idx * q + s
    return idx


def _decode(idx: int, q: int, m: int) -> Word:
    digits = []
    for _ in range(m):
        idx, s = divmod(idx, q)
        digits.append(s)
    return tuple(reversed(digits))


def _iter_cell_permutations(q: int, m: int) -> Iterable[tuple[int, ...]]:
    """All group elements as permutations of cell indices of {0..q-1}^m."""
    cells = list(product(range(q), repeat=m))
    weights = [q ** (m - 1 - k) for k in range(m)]
    for sigma in permutations(range(m)):
        for pis in product(permutations(range(q)), repeat=m):
            yield tuple(
                sum(pis[i][w[sigma[i]]] * weights[i] for i in range(m)) for w in cells
            )


@lru_cache(maxsize=8)
def _cached_cell_permutations(q: int, m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_iter_cell_permutations(q, m))


def _group_elements(q: int, m: int) -> Iterable[tuple[int, ...]]:
    if group_size(q, m) <= CACHED_GROUP_LIMIT:
        return _cached_cell_permutations(q, m)
    return _iter_cell_permutations(q, m)


def canonical_form(code: Code) -> Code:
    """Lexicographically least equivalent code under the distance-preserving group.

    Idempotent, and equal for equivalent codes. Brute force over the group,
    guarded because the group order is m! * (q!)^m.
    """
    q, m = code.q, code.m
    if group_size(q, m) > CANONICAL_GROUP_LIMIT:
        raise GuardError(
            f"canonicalization group has {group_size(q, m)} elements, "
            f"above the limit {CANONICAL_GROUP_LIMIT}"
        )
    idxs = tuple(_encode(w, q) for w in code.words)
    best = idxs
    for perm in _group_elements(q, m):
        image = tuple(sorted(perm[i] for i in idxs))
        if image < best:
            best = image
    if best == idxs:
        return code
    return Code(q, m, tuple(_decode(i, q, m) for i in best))


def canonical_digest(code: Code) -> str:
    """Stable hex digest used as the journal key.

    Hashes the canonical form when the group is tractable, else the plain
    sorted serialization (still deterministic, merely without isomorph
    folding).
    """
    if group_size(code.q, code.m) <= CANONICAL_GROUP_LIMIT:
        code = canonical_form(code)
    return hashlib.sha256(serialize_code(code).encode()).hexdigest()


def enumerate_canonical_codes(
    q: int, m: int, size_range: tuple[int, int] | None = None
) -> list[Code]:
    """Orbit-minimal representatives of all codes in the size range, by
    ascending subset mask; refuses spaces with q^m above the guard."""
    space = q**m
    if space > EXHAUSTIVE_SPACE_GUARD:
        raise GuardError(
            f"exhaustive enumeration needs q^m <= {EXHAUSTIVE_SPACE_GUARD}, "
            f"got {space}"
        )
    lo, hi = size_range if size_range is not None else (1, space)
    perms = _cached_cell_permutations(q, m)
    reps = []
    for mask in range(1, 1 << space):
        size = mask.bit_count()
        if not lo <= size <= hi:
            continue
        idxs = tuple(i for i in range(space) if (mask >> i) & 1)
        minimal = True
        for perm in perms:
            image = sorted(perm[i] for i in idxs)
            if tuple(image) < idxs:
                minimal = False
                break
        if minimal:
            reps.append(Code(q, m, tuple(_decode(i, q, m) for i in idxs)))
    return reps


@dataclass(frozen=True)
class CandidateEvaluation:
    code: Code
    sup: float
    z: float
    improves: bool
    sup_exact: Fraction | None
    z_exact: Fraction | None

    def sort_key(self):
        # Higher sup wins; ties prefer smaller codes, then canonical word order.
        return (-self.sup, len(self.code.words), self.code.words)


def _evaluate(code: Code, z_grid_size: int) -> CandidateEvaluation:
    s: ConditionSweep = sweep(code, ConditionKind.LEMMA8, z_grid_size, refine=True)
    return CandidateEvaluation(
        code=code,
        sup=s.sup_estimate,
        z=s.argmax_z,
        improves=s.improves,
        sup_exact=s.sup_exact,
        z_exact=s.argmax_z_exact,
    )


class _Journal:
    """Append-only resume log: one `digest<TAB>sup<TAB>z` line per candidate."""

    def __init__(self, path: str | None):
        self.path = path
        self.known: dict[str, tuple[float, float]] = {}
        self._handle = None
        if path is None:
            return
        try:
            with open(path, "r", encoding="utf-8") as fh:
                for lineno, line in enumerate(fh, start=1):
                    line = line.strip()
                    if not line or line.startswith("#"):
                        continue
                    parts = line.split("\t")
                    try:
                        digest, sup, z = parts
                        self.known[digest] = (float(sup), float(z))
                    except ValueError:
                        raise InputError(
                            f"{path}: line {lineno}: malformed journal record"
                        ) from None
        except FileNotFoundError:
            pass
        self._handle = open(path, "a", encoding="utf-8")

    def lookup(self, digest: str) -> tuple[float, float] | None:
        return self.known.get(digest)

    def record(self, digest: str, sup: float, z: float) -> None:
        if self._handle is None:
            return
        self._handle.write(f"{digest}\t{sup:.12g}\t{z:.12g}\n")
        self._handle.flush()
        self.known[digest] = (sup, z)

    def close(self) -> None:
        if self._handle is not None:
            self._handle.close()
            self._handle = None


class _Driver:
    """Shared bookkeeping: budgeted evaluation, dedupe, journal, best tracking."""

    def __init__(self, cfg: SearchConfig, journal: _Journal):
        self.cfg = cfg
        self.journal = journal
        self.memo: dict[tuple, CandidateEvaluation] = {}
        self.best: CandidateEvaluation | None = None
        self.examined = 0
        self.executor = (
            ThreadPoolExecutor(max_workers=cfg.threads) if cfg.threads > 1 else None
        )

    def close(self) -> None:
        if self.executor is not None:
            self.executor.shutdown()

    def remaining(self) -> int:
        return self.cfg.budget - self.examined

    def _consider(self, evaluation: CandidateEvaluation) -> None:
        if self.best is None or evaluation.sort_key() < self.best.sort_key():
            self.best = evaluation

    def _from_journal(self, code: Code, sup: float, z: float) -> CandidateEvaluation:
        # Re-verify exactly only when the recorded sup flirts with 1.
        improves = False
        sup_exact = z_exact = None
        if sup >= 1 - 1e-12:
            z_exact = snap_to_rational(z)
            if 0 < z_exact < 1:
                sup_exact = lemma8_lhs(code, z_exact)
                improves = sup_exact > 1
        return CandidateEvaluation(code, sup, z, improves, sup_exact, z_exact)

    def evaluate_batch(self, codes: Sequence[Code]) -> list[CandidateEvaluation]:
        """Evaluate candidates in order, spending budget; deterministic for any
        worker count because results merge in input order."""
        batch = list(codes)
        results: list[CandidateEvaluation | None] = [None] * len(batch)
        fresh: list[tuple[int, Code, str]] = []
        for pos, code in enumerate(batch):
            key = (code.q, code.m, code.words)
            if key in self.memo:
                results[pos] = self.memo[key]
                continue
            digest = canonical_digest(code) if self.journal.path else ""
            if digest:
                recorded = self.journal.lookup(digest)
                if recorded is not None:
                    results[pos] = self._from_journal(code, *recorded)
                    continue
            fresh.append((pos, code, digest))
        grid = self.cfg.z_grid_size
        if self.executor is not None:
            evaluations = list(
                self.executor.map(
                    lambda c: _evaluate(c, grid), [c for _, c, _ in fresh]
                )
            )
        else:
            evaluations = [_evaluate(c, grid) for _, c, _ in fresh]
        for (pos, code, digest), ev in zip(fresh, evaluations):
            if digest:
                self.journal.record(digest, ev.sup, ev.z)
            results[pos] = ev
        out = []
        for pos, code in enumerate(batch):
            ev = results[pos]
            assert ev is not None
            self.memo[(code.q, code.m, code.words)] = ev
            self.examined += 1
            self._consider(ev)
            out.append(ev)
        return out


def _random_code(rng, q: int, m: int, lo: int, hi: int) -> Code:
    space = q**m
    size = rng.randint(lo, hi)
    idxs = rng.sample(range(space), size)
    return Code(q, m, tuple(_decode(i, q, m) for i in idxs))


def _local_moves(code: Code, lo: int, hi: int) -> list[Code]:
    """Deterministic neighbourhood: single-word adds, removes, replacements."""
    cells = [w for w in product(range(code.q), repeat=code.m)]
    outside = [w for w in cells if w not in code.word_set]
    moves: list[Code] = []
    if code.size < hi:
        for w in outside:
            moves.append(Code(code.q, code.m, code.words + (w,)))
    if code.size > max(lo, 1):
        for w in code.words:
            moves.append(
                Code(code.q, code.m, tuple(u for u in code.words if u != w))
            )
    for w in code.words:
        rest = tuple(u for u in code.words if u != w)
        for u in outside:
            moves.append(Code(code.q, code.m, rest + (u,)))
    return moves


def run_search(cfg: SearchConfig, journal_path: str | None = None) -> SearchResult:
    """Execute one search; deterministic for a fixed config (threads excluded).

    A journal path enables checkpoint/resume: candidates whose canonical
    digest already appears in the journal reuse the recorded sweep instead of
    re-evaluating. A violation is only ever reported with an exact rational
    certificate re-checkable via the LEMMA8 evaluator.
    """
    if cfg.q < 2 or cfg.m < 1:
        raise InputError(f"invalid space q={cfg.q}, m={cfg.m}")
    if cfg.strategy is not Strategy.EXHAUSTIVE and cfg.budget < 1:
        raise InputError(f"budget must be >= 1, got {cfg.budget}")
    if cfg.threads < 1:
        raise InputError(f"threads must be >= 1, got {cfg.threads}")
    lo, hi = cfg.resolved_size_range()
    journal = _Journal(journal_path)
    driver = _Driver(cfg, journal)
    try:
        if cfg.strategy is Strategy.EXHAUSTIVE:
            reps = enumerate_canonical_codes(cfg.q, cfg.m, (lo, hi))
            driver.evaluate_batch(reps)
        elif cfg.strategy is Strategy.RANDOM:
            rng = random.Random(cfg.seed)
            candidates = [
                _random_code(rng, cfg.q, cfg.m, lo, hi) for _ in range(cfg.budget)
            ]
            driver.evaluate_batch(candidates)
        else:
            _run_local(cfg, driver, lo, hi)
    finally:
        driver.close()
        journal.close()

    best = driver.best
    assert best is not None, "search examined no candidates"
    certificate = best.sup_exact if best.improves else None
    return SearchResult(
        best_code=best.code,
        best_sup=best.sup,
        best_z=best.z,
        violation_found=best.improves,
        candidates_examined=driver.examined,
        exact_certificate=certificate,
    )


def _run_local(cfg: SearchConfig, driver: _Driver, lo: int, hi: int) -> None:
    """Hill climbing on the sweep supremum with restarts, within budget."""
    if cfg.q**cfg.m > LOCAL_SPACE_GUARD:
        raise GuardError(
            f"local search enumerates neighbourhoods; needs q^m <= {LOCAL_SPACE_GUARD}"
        )
    rng = random.Random(cfg.seed)
    while driver.remaining() > 0:
        start = _random_code(rng, cfg.q, cfg.m, lo, hi)
        (current,) = driver.evaluate_batch([start])
        while driver.remaining() > 0:
            moves = _local_moves(current.code, lo, hi)[: driver.remaining()]
            if not moves:
                break
            evaluations = driver.evaluate_batch(moves)
            best_move = min(evaluations, key=lambda ev: ev.sort_key())
            if best_move.sort_key() < current.sort_key():
                current = best_move
            else:
                break
