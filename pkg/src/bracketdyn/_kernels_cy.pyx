# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled edit distance kernels; mirrors ``_kernels_py`` exactly."""

from libc.stdlib cimport free, malloc

BACKEND_NAME = "cython"

cdef long long _BIG = 1 << 30


def encode_paren(symbols):
    return [(s.type_id << 1) | (0 if s.is_open else 1) for s in symbols]


def ed(a, b, allow_sub):
    cdef Py_ssize_t n = len(a), m = len(b)
    if n == 0:
        return m
    if m == 0:
        return n
    cdef bint sub = bool(allow_sub)
    cdef long long *aa = <long long *> malloc(n * sizeof(long long))
    cdef long long *bb = <long long *> malloc(m * sizeof(long long))
    cdef long long *prev = <long long *> malloc((m + 1) * sizeof(long long))
    cdef long long *cur = <long long *> malloc((m + 1) * sizeof(long long))
    if aa == NULL or bb == NULL or prev == NULL or cur == NULL:
        raise MemoryError
    cdef Py_ssize_t i, j
    cdef long long best, t, ai, res
    try:
        for i in range(n):
            aa[i] = a[i]
        for j in range(m):
            bb[j] = b[j]
        for j in range(m + 1):
            prev[j] = j
        for i in range(1, n + 1):
            cur[0] = i
            ai = aa[i - 1]
            for j in range(1, m + 1):
                best = prev[j] + 1
                t = cur[j - 1] + 1
                if t < best:
                    best = t
                if ai == bb[j - 1]:
                    t = prev[j - 1]
                    if t < best:
                        best = t
                elif sub:
                    t = prev[j - 1] + 1
                    if t < best:
                        best = t
                cur[j] = best
            prev, cur = cur, prev
        res = prev[m]
    finally:
        free(aa); free(bb); free(prev); free(cur)
    return res


def banded_ed(a, b, k_in, allow_sub):
    cdef Py_ssize_t n = len(a), m = len(b)
    cdef long long k = k_in
    if n - m > k or m - n > k:
        return k + 1
    cdef bint sub = bool(allow_sub)
    cdef Py_ssize_t width = 2 * k + 3
    cdef long long *aa = <long long *> malloc(max(n, 1) * sizeof(long long))
    cdef long long *bb = <long long *> malloc(max(m, 1) * sizeof(long long))
    cdef long long *frontier = <long long *> malloc(width * sizeof(long long))
    cdef long long *nxt = <long long *> malloc(width * sizeof(long long))
    if aa == NULL or bb == NULL or frontier == NULL or nxt == NULL:
        raise MemoryError
    cdef Py_ssize_t idx
    cdef long long e, d, dd, best, i, j, lo, hi, res
    try:
        for idx in range(n):
            aa[idx] = a[idx]
        for idx in range(m):
            bb[idx] = b[idx]
        for idx in range(width):
            frontier[idx] = -1
        i = 0
        while i < n and i < m and aa[i] == bb[i]:
            i += 1
        frontier[k + 1] = i
        if i >= n and i >= m:
            return 0
        res = k + 1
        for e in range(1, k + 1):
            for idx in range(width):
                nxt[idx] = -1
            lo = k + 1 - e
            if lo < 1:
                lo = 1
            hi = k + 1 + e
            if hi > 2 * k + 1:
                hi = 2 * k + 1
            for d in range(lo, hi + 1):
                dd = d - (k + 1)
                best = -1
                if sub and frontier[d] >= 0:
                    best = frontier[d] + 1
                if frontier[d - 1] >= 0 and frontier[d - 1] + 1 > best:
                    best = frontier[d - 1] + 1
                if frontier[d + 1] >= 0 and frontier[d + 1] > best:
                    best = frontier[d + 1]
                if best < 0:
                    continue
                i = best
                if i > n:
                    i = n
                if i - dd > m:
                    i = m + dd
                j = i - dd
                if j < 0:
                    continue
                while i < n and j < m and aa[i] == bb[j]:
                    i += 1
                    j += 1
                nxt[d] = i
                if i >= n and j >= m:
                    return e
            frontier, nxt = nxt, frontier
    finally:
        free(aa); free(bb); free(frontier); free(nxt)
    return res


cdef inline long long _pair_cost(long long ci, long long cj, bint allow_sub):
    cdef bint oi = (ci & 1) == 0
    cdef bint oj = (cj & 1) == 0
    if oi and not oj:
        if (ci >> 1) == (cj >> 1):
            return 0
        return 1 if allow_sub else _BIG
    if not allow_sub:
        return _BIG
    if oi == oj:
        return 1
    return 2


def ded(codes, allow_sub):
    cdef Py_ssize_t n = len(codes)
    if n == 0:
        return 0
    cdef bint sub = bool(allow_sub)
    cdef long long *cc = <long long *> malloc(n * sizeof(long long))
    cdef long long *dp = <long long *> malloc((n + 1) * (n + 1) * sizeof(long long))
    if cc == NULL or dp == NULL:
        raise MemoryError
    cdef Py_ssize_t i, j, mid, length, stride = n + 1
    cdef long long best, t, pc, res
    try:
        for i in range(n):
            cc[i] = codes[i]
        for i in range((n + 1) * (n + 1)):
            dp[i] = 0
        for i in range(n):
            dp[i * stride + i + 1] = 1
        for length in range(2, n + 1):
            for i in range(n - length + 1):
                j = i + length
                best = dp[(i + 1) * stride + j] + 1
                t = dp[i * stride + j - 1] + 1
                if t < best:
                    best = t
                pc = _pair_cost(cc[i], cc[j - 1], sub)
                if pc < _BIG:
                    t = dp[(i + 1) * stride + j - 1] + pc
                    if t < best:
                        best = t
                for mid in range(i + 1, j):
                    t = dp[i * stride + mid] + dp[mid * stride + j]
                    if t < best:
                        best = t
                dp[i * stride + j] = best
        res = dp[n]
    finally:
        free(cc); free(dp)
    return res


def ted(lml1, labels1, keyroots1, lml2, labels2, keyroots2, allow_sub):
    cdef Py_ssize_t n1 = len(labels1), n2 = len(labels2)
    if n1 == 0:
        return n2
    if n2 == 0:
        return n1
    cdef long long sub_cost = 1 if allow_sub else _BIG
    cdef long long *l1 = <long long *> malloc(n1 * sizeof(long long))
    cdef long long *lab1 = <long long *> malloc(n1 * sizeof(long long))
    cdef long long *l2 = <long long *> malloc(n2 * sizeof(long long))
    cdef long long *lab2 = <long long *> malloc(n2 * sizeof(long long))
    cdef long long *td = <long long *> malloc((n1 + 1) * (n2 + 1) * sizeof(long long))
    cdef long long *fd = <long long *> malloc((n1 + 2) * (n2 + 2) * sizeof(long long))
    if l1 == NULL or lab1 == NULL or l2 == NULL or lab2 == NULL or td == NULL or fd == NULL:
        raise MemoryError
    cdef Py_ssize_t i, x, y, di, dj, lx, ly, ldi, st = n2 + 1, fst = n2 + 2
    cdef long long best, t, c, res
    try:
        for i in range(n1):
            l1[i] = lml1[i]
            lab1[i] = labels1[i]
        for i in range(n2):
            l2[i] = lml2[i]
            lab2[i] = labels2[i]
        for i in range((n1 + 1) * (n2 + 1)):
            td[i] = 0
        for x in keyroots1:
            lx = l1[x - 1]
            for y in keyroots2:
                ly = l2[y - 1]
                fd[(lx - 1) * fst + (ly - 1)] = 0
                for di in range(lx, x + 1):
                    fd[di * fst + (ly - 1)] = fd[(di - 1) * fst + (ly - 1)] + 1
                for dj in range(ly, y + 1):
                    fd[(lx - 1) * fst + dj] = fd[(lx - 1) * fst + dj - 1] + 1
                for di in range(lx, x + 1):
                    ldi = l1[di - 1]
                    for dj in range(ly, y + 1):
                        if ldi == lx and l2[dj - 1] == ly:
                            c = 0 if lab1[di - 1] == lab2[dj - 1] else sub_cost
                            best = fd[(di - 1) * fst + dj] + 1
                            t = fd[di * fst + dj - 1] + 1
                            if t < best:
                                best = t
                            t = fd[(di - 1) * fst + dj - 1] + c
                            if t < best:
                                best = t
                            fd[di * fst + dj] = best
                            td[di * st + dj] = best
                        else:
                            best = fd[(di - 1) * fst + dj] + 1
                            t = fd[di * fst + dj - 1] + 1
                            if t < best:
                                best = t
                            t = fd[(ldi - 1) * fst + (l2[dj - 1] - 1)] + td[di * st + dj]
                            if t < best:
                                best = t
                            fd[di * fst + dj] = best
        res = td[n1 * st + n2]
    finally:
        free(l1); free(lab1); free(l2); free(lab2); free(td); free(fd)
    return res
