# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; semantics and emission order match ``pure`` exactly.

Candidates are built in a scratch C buffer and materialized as bytes only
once per emission, which skips the slice/concat churn of the fallback.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize, PyBytes_GET_SIZE
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy


cdef inline bint _emit(char *buf, Py_ssize_t nbytes, set seen, list out, Py_ssize_t lim):
    # Returns 0 once the output cap is hit.
    cand = PyBytes_FromStringAndSize(buf, nbytes)
    if cand not in seen:
        seen.add(cand)
        out.append(cand)
        if lim >= 0 and len(out) >= lim:
            return 0
    return 1


def generate_edits1(bytes word, bytes alphabet, limit, set seen, list out):
    """Append every single-edit neighbour of ``word`` to ``out``.

    Emission order: deletes, transposes, replaces, inserts; positions left
    to right, alphabet letters in table order.  ``seen`` carries the
    already-emitted candidates and generation stops once ``out`` reaches
    ``limit`` entries.
    """
    cdef Py_ssize_t lim = -1 if limit is None else <Py_ssize_t> limit
    if lim >= 0 and len(out) >= lim:
        return
    cdef Py_ssize_t nb = PyBytes_GET_SIZE(word)
    cdef Py_ssize_t ab = PyBytes_GET_SIZE(alphabet)
    cdef const char *w = PyBytes_AS_STRING(word)
    cdef const char *al = PyBytes_AS_STRING(alphabet)
    cdef char *buf = <char *> malloc(nb + 2 if nb else 2)
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef char s0, s1
    cdef bint alive = 1
    try:
        # deletes
        for i in range(0, nb, 2):
            memcpy(buf, w, i)
            memcpy(buf + i, w + i + 2, nb - i - 2)
            if not _emit(buf, nb - 2, seen, out, lim):
                alive = 0
                break
        # transposes
        if alive and nb >= 4:
            memcpy(buf, w, nb)
            for i in range(0, nb - 2, 2):
                s0 = buf[i]
                s1 = buf[i + 1]
                buf[i] = buf[i + 2]
                buf[i + 1] = buf[i + 3]
                buf[i + 2] = s0
                buf[i + 3] = s1
                if not _emit(buf, nb, seen, out, lim):
                    alive = 0
                    break
                buf[i] = s0
                buf[i + 1] = s1
                buf[i + 2] = w[i + 2]
                buf[i + 3] = w[i + 3]
        # replaces
        if alive:
            memcpy(buf, w, nb)
            for i in range(0, nb, 2):
                for j in range(0, ab, 2):
                    buf[i] = al[j]
                    buf[i + 1] = al[j + 1]
                    if not _emit(buf, nb, seen, out, lim):
                        alive = 0
                        break
                if not alive:
                    break
                buf[i] = w[i]
                buf[i + 1] = w[i + 1]
        # inserts
        if alive:
            for i in range(0, nb + 2, 2):
                memcpy(buf, w, i)
                memcpy(buf + i + 2, w + i, nb - i)
                for j in range(0, ab, 2):
                    buf[i] = al[j]
                    buf[i + 1] = al[j + 1]
                    if not _emit(buf, nb + 2, seen, out, lim):
                        alive = 0
                        break
                if not alive:
                    break
    finally:
        free(buf)


cdef bint _subs_rec(
    char *cur,
    Py_ssize_t nb,
    Py_ssize_t n,
    Py_ssize_t start,
    int budget,
    tuple alternates,
    set seen,
    list out,
    Py_ssize_t lim,
):
    cdef Py_ssize_t p, j, na
    cdef const char *a
    cdef char s0, s1
    cdef bytes alt
    for p in range(start, n):
        alt = <bytes> alternates[p]
        na = PyBytes_GET_SIZE(alt)
        if na == 0:
            continue
        a = PyBytes_AS_STRING(alt)
        s0 = cur[2 * p]
        s1 = cur[2 * p + 1]
        for j in range(0, na, 2):
            cur[2 * p] = a[j]
            cur[2 * p + 1] = a[j + 1]
            if not _emit(cur, nb, seen, out, lim):
                cur[2 * p] = s0
                cur[2 * p + 1] = s1
                return 0
            if budget > 1:
                if not _subs_rec(cur, nb, n, p + 1, budget - 1, alternates, seen, out, lim):
                    cur[2 * p] = s0
                    cur[2 * p + 1] = s1
                    return 0
        cur[2 * p] = s0
        cur[2 * p + 1] = s1
    return 1


def generate_substitutions(bytes word, tuple alternates, int max_subs, limit, set seen, list out):
    """Append substitution patterns over per-position alternate letters.

    Depth-first: substitute position p, emit, then recurse into strictly
    later positions while the substitution budget lasts.
    """
    if max_subs < 1:
        raise ValueError("max_subs must be >= 1")
    cdef Py_ssize_t lim = -1 if limit is None else <Py_ssize_t> limit
    if lim >= 0 and len(out) >= lim:
        return
    cdef Py_ssize_t nb = PyBytes_GET_SIZE(word)
    cdef char *buf = <char *> malloc(nb if nb else 1)
    if buf == NULL:
        raise MemoryError()
    try:
        memcpy(buf, PyBytes_AS_STRING(word), nb)
        _subs_rec(buf, nb, nb // 2, 0, max_subs, alternates, seen, out, lim)
    finally:
        free(buf)
