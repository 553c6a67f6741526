# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the doubling iteration and the packed-bit lattice step."""
from cpython.array cimport array, clone
from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

from .exact import ActivityOverflowError

cdef extern from *:
    """
    static inline int r150_mul_ovf(long long a, long long b, long long *out) {
        return __builtin_mul_overflow(a, b, out);
    }
    static inline int r150_add_ovf(long long a, long long b, long long *out) {
        return __builtin_add_overflow(a, b, out);
    }
    static inline int r150_popcount(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    """
    int r150_mul_ovf(long long a, long long b, long long *out) nogil
    int r150_add_ovf(long long a, long long b, long long *out) nogil
    int r150_popcount(unsigned long long x) nogil

COMPILED = True


cdef array _template = array("q", [])


def expand(seeds, program, Py_ssize_t generations, bint bounded=True, stats=None):
    """Apply a linear replication program ``generations`` times in int64.

    Same contract as the pure-Python ``expand``.  Unbounded runs fall back
    to Python ints since they cannot live in machine words.
    """
    if not bounded or stats is not None:
        from . import _fallback
        return _fallback.expand(seeds, program, generations, bounded, stats)

    cdef Py_ssize_t arity = len(seeds)
    cdef Py_ssize_t nseg = len(program[0])
    cdef Py_ssize_t length = len(seeds[0])
    cdef Py_ssize_t final_len = length
    cdef Py_ssize_t g, k, s, i, j, base
    for g in range(generations):
        final_len *= nseg

    cdef Py_ssize_t ncoef = arity * nseg * arity
    cdef long long *coef = <long long *>malloc(ncoef * sizeof(long long))
    cdef long long *cur = <long long *>malloc(arity * final_len * sizeof(long long))
    cdef long long *nxt = <long long *>malloc(arity * final_len * sizeof(long long))
    cdef long long *tmp
    cdef long long acc, term, c
    cdef int failed = 0
    if coef == NULL or cur == NULL or nxt == NULL:
        free(coef); free(cur); free(nxt)
        raise MemoryError()
    try:
        for k in range(arity):
            for s in range(nseg):
                for j in range(arity):
                    coef[(k * nseg + s) * arity + j] = program[k][s][j]
        for k in range(arity):
            for i in range(length):
                cur[k * final_len + i] = seeds[k][i]

        for g in range(1, generations + 1):
            with nogil:
                for k in range(arity):
                    for s in range(nseg):
                        base = k * final_len + s * length
                        for i in range(length):
                            acc = 0
                            for j in range(arity):
                                c = coef[(k * nseg + s) * arity + j]
                                if c == 0:
                                    continue
                                if r150_mul_ovf(c, cur[j * final_len + i], &term) or \
                                        r150_add_ovf(acc, term, &acc):
                                    failed = 1
                                    break
                            if failed:
                                break
                            nxt[base + i] = acc
                        if failed:
                            break
                    if failed:
                        break
            if failed:
                raise ActivityOverflowError(f"element overflow in generation {g}")
            tmp = cur
            cur = nxt
            nxt = tmp
            length *= nseg

        out = []
        for k in range(arity):
            buf = clone(_template, length, False)
            if length:
                memcpy(buf.data.as_voidptr, &cur[k * final_len], length * sizeof(long long))
            out.append(buf)
        return out
    finally:
        free(coef)
        free(cur)
        free(nxt)


def simulate_counts(int r, Py_ssize_t count):
    """Activities of the first ``count`` rows of single-seeded Rule 90 (r=0) or 150 (r=1).

    Row ``t`` occupies bits ``0..2t`` of a word array; bit ``i`` is cell ``i - t``.
    """
    if count <= 0:
        return []
    cdef Py_ssize_t nwords = (2 * count + 1) // 64 + 2
    cdef uint64_t *row = <uint64_t *>malloc(nwords * sizeof(uint64_t))
    if row == NULL:
        raise MemoryError()
    cdef array result = clone(array("q", []), count, False)
    cdef long long *res = result.data.as_longlongs
    cdef Py_ssize_t t, w, top
    cdef uint64_t a, b
    cdef long long pc
    try:
        with nogil:
            memset(row, 0, nwords * sizeof(uint64_t))
            row[0] = 1
            res[0] = 1
            for t in range(1, count):
                top = (2 * t) >> 6
                pc = 0
                w = top
                while w >= 0:
                    a = row[w]
                    b = row[w - 1] if w > 0 else 0
                    if r:
                        a = a ^ ((a << 1) | (b >> 63)) ^ ((a << 2) | (b >> 62))
                    else:
                        a = a ^ ((a << 2) | (b >> 62))
                    row[w] = a
                    pc += r150_popcount(a)
                    w -= 1
                res[t] = pc
        return result.tolist()
    finally:
        free(row)


def rule150_series(Py_ssize_t count):
    """X(0..count-1) in one buffer, appending ``3y`` and ``2y + z`` per doubling.

    After filling ``[0, 2L)`` the prefix splits as ``y = [0, L)``,
    ``z = [L, 2L)``; the next doubling writes ``[2L, 3L) = 3y`` and
    ``[3L, 4L) = 2y + z``.
    """
    cdef array result = clone(_template, max(count, 2), False)
    cdef long long *x = result.data.as_longlongs
    cdef Py_ssize_t half = 1, i, stop
    cdef long long v
    cdef int failed = 0
    x[0] = 1
    x[1] = 3
    with nogil:
        while 2 * half < count and not failed:
            stop = min(half, count - 2 * half)
            for i in range(stop):
                if r150_mul_ovf(3, x[i], &x[2 * half + i]):
                    failed = 1
                    break
            stop = min(half, count - 3 * half)
            for i in range(stop):
                if r150_mul_ovf(2, x[i], &v) or r150_add_ovf(v, x[half + i], &x[3 * half + i]):
                    failed = 1
                    break
            half *= 2
    if failed:
        raise ActivityOverflowError("element overflow in doubling")
    del result[count:]
    return result
