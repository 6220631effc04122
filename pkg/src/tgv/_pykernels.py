"""Pure-Python distance kernels, the fallback for the compiled extension.

Words arrive as a flat bytes blob (`n_words` rows of `length` symbols each).
Each word is packed into one big integer, one-hot with a 16-symbol stride per
coordinate, so the Hamming distance of a pair is `(a ^ b).bit_count() // 2`:
a differing coordinate contributes exactly two set bits to the xor.

Symbols >= 16 (alphabets larger than the text format ever produces) fall back
to plain per-coordinate comparison.
"""

from __future__ import annotations

IS_COMPILED = False

_STRIDE_BITS = 4  # 16 symbol slots per coordinate


def _pack(blob: bytes, n_words: int, length: int) -> list[int]:
    packed = []
    for i in range(n_words):
        row = blob[i * length : (i + 1) * length]
        acc = 0
        for k, s in enumerate(row):
            acc |= 1 << ((k << _STRIDE_BITS) | s)
        packed.append(acc)
    return packed


def _packable(blob: bytes) -> bool:
    return not blob or max(blob) < (1 << _STRIDE_BITS)


def distance_census(blob: bytes, n_words: int, length: int) -> list[int]:
    """Counts of ordered word pairs at each Hamming distance, diagonal included."""
    counts = [0] * (length + 1)
    counts[0] = n_words
    if _packable(blob):
        packed = _pack(blob, n_words, length)
        for i in range(n_words):
            a = packed[i]
            for j in range(i + 1, n_words):
                counts[(a ^ packed[j]).bit_count() >> 1] += 2
    else:
        rows = [blob[i * length : (i + 1) * length] for i in range(n_words)]
        for i in range(n_words):
            a = rows[i]
            for j in range(i + 1, n_words):
                b = rows[j]
                counts[sum(x != y for x, y in zip(a, b))] += 2
    return counts


def local_census(blob: bytes, n_words: int, length: int) -> list[list[int]]:
    """Per-word distance counts over all words (self included at distance 0)."""
    table = [[0] * (length + 1) for _ in range(n_words)]
    for i in range(n_words):
        table[i][0] = 1
    if _packable(blob):
        packed = _pack(blob, n_words, length)
        for i in range(n_words):
            a = packed[i]
            row = table[i]
            for j in range(i + 1, n_words):
                d = (a ^ packed[j]).bit_count() >> 1
                row[d] += 1
                table[j][d] += 1
    else:
        rows = [blob[i * length : (i + 1) * length] for i in range(n_words)]
        for i in range(n_words):
            a = rows[i]
            row = table[i]
            for j in range(i + 1, n_words):
                d = sum(x != y for x, y in zip(a, rows[j]))
                row[d] += 1
                table[j][d] += 1
    return table


def adjacency(
    blob: bytes, n_words: int, length: int, threshold: int
) -> tuple[int, list[int], list[bytes]]:
    """Loop-free graph with edges on pairs at distance >= threshold.

    Returns (edge count, degree per vertex, adjacency rows as little-endian
    bitset bytes of width ceil(n_words / 8)).
    """
    row_bytes = (n_words + 7) >> 3
    buf = bytearray(n_words * row_bytes)
    degrees = [0] * n_words
    edges = 0
    if _packable(blob):
        packed = _pack(blob, n_words, length)

        def dist(i: int, j: int) -> int:
            return (packed[i] ^ packed[j]).bit_count() >> 1

    else:
        rows = [blob[i * length : (i + 1) * length] for i in range(n_words)]

        def dist(i: int, j: int) -> int:
            return sum(x != y for x, y in zip(rows[i], rows[j]))

    for i in range(n_words):
        base_i = i * row_bytes
        for j in range(i + 1, n_words):
            if dist(i, j) >= threshold:
                edges += 1
                degrees[i] += 1
                degrees[j] += 1
                buf[base_i + (j >> 3)] |= 1 << (j & 7)
                buf[j * row_bytes + (i >> 3)] |= 1 << (i & 7)
    out_rows = [bytes(buf[i * row_bytes : (i + 1) * row_bytes]) for i in range(n_words)]
    return edges, degrees, out_rows
