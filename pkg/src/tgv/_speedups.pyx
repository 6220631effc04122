# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled distance kernels; same contract as tgv._pykernels."""

from libc.stdlib cimport calloc, free

IS_COMPILED = True


def distance_census(const unsigned char[::1] blob, Py_ssize_t n_words, Py_ssize_t length):
    """Counts of ordered word pairs at each Hamming distance, diagonal included."""
    cdef Py_ssize_t i, j, k, d
    cdef long long* counts = <long long*> calloc(length + 1, sizeof(long long))
    if counts == NULL:
        raise MemoryError()
    cdef const unsigned char* base = NULL
    if n_words > 0 and length > 0:
        base = &blob[0]
    cdef const unsigned char* wi
    cdef const unsigned char* wj
    try:
        counts[0] = n_words
        for i in range(n_words):
            wi = base + i * length
            for j in range(i + 1, n_words):
                wj = base + j * length
                d = 0
                for k in range(length):
                    if wi[k] != wj[k]:
                        d += 1
                counts[d] += 2
        return [counts[k] for k in range(length + 1)]
    finally:
        free(counts)


def local_census(const unsigned char[::1] blob, Py_ssize_t n_words, Py_ssize_t length):
    """Per-word distance counts over all words (self included at distance 0)."""
    cdef Py_ssize_t i, j, k, d, width = length + 1
    cdef long long* table = <long long*> calloc(n_words * width, sizeof(long long))
    if table == NULL:
        raise MemoryError()
    cdef const unsigned char* base = NULL
    if n_words > 0 and length > 0:
        base = &blob[0]
    cdef const unsigned char* wi
    cdef const unsigned char* wj
    try:
        for i in range(n_words):
            table[i * width] = 1
            wi = base + i * length
            for j in range(i + 1, n_words):
                wj = base + j * length
                d = 0
                for k in range(length):
                    if wi[k] != wj[k]:
                        d += 1
                table[i * width + d] += 1
                table[j * width + d] += 1
        return [
            [table[i * width + k] for k in range(width)] for i in range(n_words)
        ]
    finally:
        free(table)


def adjacency(const unsigned char[::1] blob, Py_ssize_t n_words, Py_ssize_t length,
              Py_ssize_t threshold):
    """Loop-free graph with edges on pairs at distance >= threshold.

    Returns (edge count, degree per vertex, adjacency rows as little-endian
    bitset bytes of width ceil(n_words / 8)).
    """
    cdef Py_ssize_t i, j, k, d
    cdef Py_ssize_t row_bytes = (n_words + 7) >> 3
    cdef long long edges = 0
    cdef unsigned char* buf = <unsigned char*> calloc(n_words * row_bytes, sizeof(unsigned char))
    cdef long long* degrees = <long long*> calloc(n_words, sizeof(long long))
    if buf == NULL or degrees == NULL:
        free(buf)
        free(degrees)
        raise MemoryError()
    cdef const unsigned char* base = NULL
    if n_words > 0 and length > 0:
        base = &blob[0]
    cdef const unsigned char* wi
    cdef const unsigned char* wj
    try:
        for i in range(n_words):
            wi = base + i * length
            for j in range(i + 1, n_words):
                wj = base + j * length
                d = 0
                for k in range(length):
                    if wi[k] != wj[k]:
                        d += 1
                if d >= threshold:
                    edges += 1
                    degrees[i] += 1
                    degrees[j] += 1
                    buf[i * row_bytes + (j >> 3)] |= <unsigned char> (1 << (j & 7))
                    buf[j * row_bytes + (i >> 3)] |= <unsigned char> (1 << (i & 7))
        deg_list = [degrees[i] for i in range(n_words)]
        rows = []
        for i in range(n_words):
            rows.append(<bytes> (buf + i * row_bytes)[:row_bytes])
        return edges, deg_list, rows
    finally:
        free(buf)
        free(degrees)
