# cython: boundscheck=False, wraparound=False
"""Compiled edit-distance kernels (optimal string alignment variant).

Mirrors lexigap._kernels._pyfallback exactly; the DP loop runs over C int
buffers of code points.
"""

from libc.stdlib cimport free, malloc


cdef int _dl_distance(int* a, Py_ssize_t la, int* b, Py_ssize_t lb,
                      int* prev2, int* prev, int* cur) nogil:
    cdef Py_ssize_t i, j
    cdef int cost, d
    cdef int* tmp

    if la == 0:
        return <int>lb
    if lb == 0:
        return <int>la

    for j in range(lb + 1):
        prev[j] = <int>j

    for i in range(1, la + 1):
        cur[0] = <int>i
        for j in range(1, lb + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            d = prev[j] + 1
            if cur[j - 1] + 1 < d:
                d = cur[j - 1] + 1
            if prev[j - 1] + cost < d:
                d = prev[j - 1] + cost
            if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
                if prev2[j - 2] + 1 < d:
                    d = prev2[j - 2] + 1
            cur[j] = d
        tmp = prev2
        prev2 = prev
        prev = cur
        cur = tmp

    return prev[lb]


cdef int* _to_codepoints(str s, Py_ssize_t n) except NULL:
    cdef int* buf = <int*>malloc((n if n else 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = <int>ord(s[i])
    return buf


def damerau_levenshtein(str a, str b):
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la

    cdef int* ca = _to_codepoints(a, la)
    cdef int* cb = NULL
    cdef int* rows = NULL
    cdef int result
    try:
        cb = _to_codepoints(b, lb)
        rows = <int*>malloc(3 * (lb + 1) * sizeof(int))
        if rows == NULL:
            raise MemoryError()
        result = _dl_distance(ca, la, cb, lb,
                              rows, rows + (lb + 1), rows + 2 * (lb + 1))
    finally:
        free(ca)
        free(cb)
        free(rows)
    return result


def damerau_levenshtein_many(str hint, list forms):
    cdef Py_ssize_t lh = len(hint)
    cdef int* ch = _to_codepoints(hint, lh)
    cdef list out = []
    cdef Py_ssize_t lf, maxlen = 0
    cdef int* cf = NULL
    cdef int* rows = NULL
    cdef str form

    for form in forms:
        if len(form) > maxlen:
            maxlen = len(form)

    try:
        rows = <int*>malloc(3 * (maxlen + lh + 2) * sizeof(int))
        if rows == NULL:
            raise MemoryError()
        for form in forms:
            lf = len(form)
            cf = _to_codepoints(form, lf)
            try:
                # distance rows are sized by the second argument
                out.append(_dl_distance(ch, lh, cf, lf,
                                        rows, rows + (lf + 1), rows + 2 * (lf + 1)))
            finally:
                free(cf)
                cf = NULL
    finally:
        free(ch)
        free(rows)
    return out
