# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled LR tableau counter; same contract as ``_kernels_py.lr_count``."""
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, INT64_MAX

cdef struct Ctx:
    int ncell
    int m
    int *rows
    int *right
    int *above
    int *cap
    int *fill
    int *counts
    bint overflow


cdef int64_t _rec(Ctx *c, int t) nogil:
    cdef int hi, lo, letter, cnt, r, a
    cdef int64_t total = 0, sub
    if t == c.ncell:
        return 1
    hi = c.rows[t] + 1
    if hi > c.m:
        hi = c.m
    r = c.right[t]
    if r >= 0 and c.fill[r] < hi:
        hi = c.fill[r]
    a = c.above[t]
    lo = c.fill[a] + 1 if a >= 0 else 1
    for letter in range(lo, hi + 1):
        cnt = c.counts[letter]
        if cnt >= c.cap[letter] or cnt >= c.counts[letter - 1]:
            continue
        c.counts[letter] = cnt + 1
        c.fill[t] = letter
        sub = _rec(c, t + 1)
        c.counts[letter] = cnt
        if sub > INT64_MAX - total:
            c.overflow = True
            return 0
        total += sub
        if c.overflow:
            return 0
    return total


def lr_count(outer, inner, content):
    cdef int nrow = len(outer)
    cdef int ncell = 0
    cdef int i, j, t
    for i in range(nrow):
        ncell += outer[i] - inner[i]
    if ncell == 0:
        return 1
    cdef int m = len(content)
    cdef Ctx c
    c.ncell = ncell
    c.m = m
    c.overflow = False
    c.rows = <int *> malloc(ncell * sizeof(int))
    c.right = <int *> malloc(ncell * sizeof(int))
    c.above = <int *> malloc(ncell * sizeof(int))
    c.fill = <int *> malloc(ncell * sizeof(int))
    c.cap = <int *> malloc((m + 1) * sizeof(int))
    c.counts = <int *> malloc((m + 1) * sizeof(int))
    # start index of each row in reverse reading order
    cdef int *start = <int *> malloc((nrow + 1) * sizeof(int))
    cdef int64_t result
    try:
        t = 0
        for i in range(nrow):
            start[i] = t
            t += outer[i] - inner[i]
        start[nrow] = t
        for i in range(nrow):
            for j in range(outer[i] - 1, inner[i] - 1, -1):
                t = start[i] + (outer[i] - 1 - j)
                c.rows[t] = i
                c.fill[t] = 0
                c.right[t] = t - 1 if j + 1 < outer[i] else -1
                if i > 0 and inner[i - 1] <= j < outer[i - 1]:
                    c.above[t] = start[i - 1] + (outer[i - 1] - 1 - j)
                else:
                    c.above[t] = -1
        c.cap[0] = 0
        c.counts[0] = 1 << 30
        for i in range(m):
            c.cap[i + 1] = content[i]
            c.counts[i + 1] = 0
        with nogil:
            result = _rec(&c, 0)
        if c.overflow:
            raise OverflowError("LR coefficient exceeds int64")
        return result
    finally:
        free(c.rows); free(c.right); free(c.above); free(c.fill)
        free(c.cap); free(c.counts); free(start)
