# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels. Same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free


def trim(a):
    cdef Py_ssize_t n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def lex_cmp(tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, n
    cdef long long x, y
    n = na if na > nb else nb
    for i in range(n):
        x = a[i] if i < na else 0
        y = b[i] if i < nb else 0
        if x != y:
            return -1 if x < y else 1
    return 0


def add_seq(tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, n, last = 0
    cdef long long x, y
    n = na if na > nb else nb
    out = [0] * n
    for i in range(n):
        x = a[i] if i < na else 0
        y = b[i] if i < nb else 0
        out[i] = x + y
        if x + y != 0:
            last = i + 1
    return tuple(out[:last])


def merge_desc(tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), i = 0, j = 0, t = 0
    out = [0] * (na + nb)
    while i < na and j < nb:
        if <long long>a[i] >= <long long>b[j]:
            out[t] = a[i]
            i += 1
        else:
            out[t] = b[j]
            j += 1
        t += 1
    while i < na:
        out[t] = a[i]
        i += 1
        t += 1
    while j < nb:
        out[t] = b[j]
        j += 1
        t += 1
    return tuple(out)


def nat_minimal_dp(seeds, int bound):
    cdef int l = len(seeds), n, i, m
    cdef long long best, v
    m = bound if bound > l else l
    cdef long long *t = <long long *>malloc((m + 1) * sizeof(long long))
    if t == NULL:
        raise MemoryError()
    try:
        t[0] = -1
        for i in range(l):
            t[i + 1] = seeds[i]
        for n in range(l + 1, bound + 1):
            best = 0
            for i in range(1, n // 2 + 1):
                v = t[i] + t[n - i]
                if v > best:
                    best = v
            t[n] = best
        return [t[i] for i in range(min(bound, m) + 1)]
    finally:
        free(t)


def nat_enum_max(terms, int n):
    cdef int i, k, pos, last
    cdef long long best = -1, total, v, mask, top
    cdef long long *t = <long long *>malloc((n + 1) * sizeof(long long))
    if t == NULL:
        raise MemoryError()
    try:
        t[0] = -1
        for i in range(1, n):
            t[i] = terms[i]
        top = (1LL << (n - 1)) - 1
        mask = 1
        while mask < top:
            k = 1
            total = 0
            last = 0
            for pos in range(1, n):
                if (mask >> (pos - 1)) & 1:
                    total += t[pos - last]
                    last = pos
                    k += 1
            total += t[n - last]
            v = t[k] if t[k] > total else total
            if v > best:
                best = v
            mask += 1
        return best
    finally:
        free(t)


cdef int _next_colex(int *c, int k, int n):
    # Advance c[0..k-1] (parts >= 1, sum n) to the next composition in colex
    # order; returns 0 when exhausted.
    cdef int i, j, rest
    # colex: the first entries vary fastest. Find the leftmost position i >= 1
    # that can be incremented by taking from c[0..i-1].
    for i in range(1, k):
        rest = 0
        for j in range(i):
            rest += c[j]
        if rest > i:
            c[i] += 1
            rest -= 1
            for j in range(i):
                c[j] = 1
            c[0] = rest - (i - 1)
            return 1
    return 0


def nat_first_violation(terms, int bound):
    cdef int n, k, i, more
    cdef long long target, ck, total, v
    cdef long long *t = <long long *>malloc((bound + 1) * sizeof(long long))
    cdef int *c = <int *>malloc((bound + 1) * sizeof(int))
    if t == NULL or c == NULL:
        free(t)
        free(c)
        raise MemoryError()
    try:
        t[0] = -1
        for i in range(1, bound + 1):
            t[i] = terms[i]
        for n in range(1, bound + 1):
            target = t[n]
            for k in range(1, n + 1):
                ck = t[k]
                c[0] = n - k + 1
                for i in range(1, k):
                    c[i] = 1
                more = 1
                while more:
                    total = 0
                    for i in range(k):
                        total += t[c[i]]
                    v = ck if ck > total else total
                    if v > target:
                        return n, k, tuple([c[i] for i in range(k)])
                    more = _next_colex(c, k, n)
        return None
    finally:
        free(t)
        free(c)
