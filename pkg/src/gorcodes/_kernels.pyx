# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_fallback``."""

from libc.stdlib cimport malloc, free, qsort
from libc.stdint cimport int64_t, uint64_t

from gorcodes._fallback import BudgetExceeded


cdef inline int64_t _floordiv(int64_t a, int64_t b) noexcept nogil:
    cdef int64_t q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef struct CountState:
    int d
    int f
    int64_t *A        # f x d, row-major
    int64_t *rest     # d x f
    int64_t *lo
    int64_t *hi
    int64_t *partial  # (d + 1) x f scratch
    int64_t visited
    int64_t budget
    int64_t count
    int over


cdef void _rec(CountState *st, int m) noexcept nogil:
    cdef int j
    cdef int64_t a, s, t, y, lo_b, hi_b
    cdef int64_t *part = st.partial + m * st.f
    cdef int64_t *nxt
    st.visited += 1
    if st.visited > st.budget:
        st.over = 1
        return
    lo_b = st.lo[m]
    hi_b = st.hi[m]
    for j in range(st.f):
        a = st.A[j * st.d + m]
        s = part[j] + st.rest[m * st.f + j]
        if a > 0:
            t = -_floordiv(s, a)
            if t > lo_b:
                lo_b = t
        elif a < 0:
            t = _floordiv(s, -a)
            if t < hi_b:
                hi_b = t
        elif s < 0:
            return
    if lo_b > hi_b:
        return
    if m == st.d - 1:
        st.count += hi_b - lo_b + 1
        return
    nxt = st.partial + (m + 1) * st.f
    for y in range(lo_b, hi_b + 1):
        for j in range(st.f):
            nxt[j] = part[j] + st.A[j * st.d + m] * y
        _rec(st, m + 1)
        if st.over:
            return


def count_points(A, b, lo, hi, budget):
    cdef int d = len(lo)
    cdef int f = len(A)
    cdef CountState st
    cdef int i, j, m
    cdef int64_t av, best
    st.d = d
    st.f = f
    st.A = <int64_t *> malloc(f * d * sizeof(int64_t))
    st.rest = <int64_t *> malloc(d * f * sizeof(int64_t))
    st.lo = <int64_t *> malloc(d * sizeof(int64_t))
    st.hi = <int64_t *> malloc(d * sizeof(int64_t))
    st.partial = <int64_t *> malloc((d + 1) * f * sizeof(int64_t))
    try:
        for j in range(f):
            for i in range(d):
                st.A[j * d + i] = A[j][i]
            st.partial[j] = b[j]
        for i in range(d):
            st.lo[i] = lo[i]
            st.hi[i] = hi[i]
        for j in range(f):
            st.rest[(d - 1) * f + j] = 0
        for m in range(d - 2, -1, -1):
            i = m + 1
            for j in range(f):
                av = st.A[j * d + i]
                best = av * st.lo[i]
                if av * st.hi[i] > best:
                    best = av * st.hi[i]
                st.rest[m * f + j] = st.rest[(m + 1) * f + j] + best
        st.visited = 0
        st.budget = budget
        st.count = 0
        st.over = 0
        with nogil:
            _rec(&st, 0)
        if st.over:
            raise BudgetExceeded(f"enumeration exceeded budget of {budget} nodes")
        return st.count, st.visited
    finally:
        free(st.A)
        free(st.rest)
        free(st.lo)
        free(st.hi)
        free(st.partial)


cdef int _cmp_u64(const void *a, const void *b) noexcept nogil:
    cdef uint64_t x = (<uint64_t *> a)[0]
    cdef uint64_t y = (<uint64_t *> b)[0]
    return (x > y) - (x < y)


cdef int _next_perm(int *p, int start, int end) noexcept nogil:
    # lexicographic successor of p[start:end]; on wrap-around resets to sorted, returns 0
    cdef int i = end - 2
    cdef int j, tmp
    while i >= start and p[i] >= p[i + 1]:
        i -= 1
    if i < start:
        j = end - 1
        i = start
        while i < j:
            tmp = p[i]; p[i] = p[j]; p[j] = tmp
            i += 1
            j -= 1
        return 0
    j = end - 1
    while p[j] <= p[i]:
        j -= 1
    tmp = p[i]; p[i] = p[j]; p[j] = tmp
    i += 1
    j = end - 1
    while i < j:
        tmp = p[i]; p[i] = p[j]; p[j] = tmp
        i += 1
        j -= 1
    return 1


def lexmin_permutation(rows, base, blocks):
    cdef int N = len(rows)
    cdef int n = sum(len(bl) for bl in blocks)
    cdef int nb = len(blocks)
    cdef uint64_t *vals = <uint64_t *> malloc(max(N * n, 1) * sizeof(uint64_t))
    cdef uint64_t *keys = <uint64_t *> malloc(max(N, 1) * sizeof(uint64_t))
    cdef uint64_t *best = <uint64_t *> malloc(max(N, 1) * sizeof(uint64_t))
    cdef uint64_t *w = <uint64_t *> malloc(max(n, 1) * sizeof(uint64_t))
    cdef int *order = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *best_order = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *bstart = <int *> malloc((nb + 1) * sizeof(int))
    cdef int r, c, p, bi, have = 0, less
    cdef uint64_t k
    try:
        for r in range(N):
            row = rows[r]
            for c in range(n):
                vals[r * n + c] = row[c]
        for p in range(n):
            w[p] = base ** (n - 1 - p)
        p = 0
        for bi in range(nb):
            bstart[bi] = p
            for c in sorted(blocks[bi]):
                order[p] = c
                p += 1
        bstart[nb] = n
        with nogil:
            while True:
                for r in range(N):
                    k = 0
                    for p in range(n):
                        k += vals[r * n + order[p]] * w[p]
                    keys[r] = k
                qsort(keys, N, sizeof(uint64_t), _cmp_u64)
                less = not have
                if have:
                    for r in range(N):
                        if keys[r] != best[r]:
                            less = keys[r] < best[r]
                            break
                if less:
                    have = 1
                    for r in range(N):
                        best[r] = keys[r]
                    for p in range(n):
                        best_order[p] = order[p]
                bi = nb - 1
                while bi >= 0 and not _next_perm(order, bstart[bi], bstart[bi + 1]):
                    bi -= 1
                if bi < 0:
                    break
        return [best[r] for r in range(N)], [best_order[p] for p in range(n)]
    finally:
        free(vals)
        free(keys)
        free(best)
        free(w)
        free(order)
        free(best_order)
        free(bstart)
