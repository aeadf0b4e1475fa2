# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contracts as ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef int* _as_carray(object seq, Py_ssize_t size) except NULL:
    cdef int* arr = <int*> malloc(size * sizeof(int))
    cdef Py_ssize_t i
    if arr == NULL:
        raise MemoryError()
    for i in range(size):
        arr[i] = seq[i]
    return arr


cdef struct HomState:
    int n
    int* src
    int* dst
    int* smask
    int* dmask
    int* phi
    int* inv
    int* trail
    int tlen


cdef inline bint _assign(HomState* s, int x, int a) noexcept:
    if s.inv[a] != -1 or s.smask[x] != s.dmask[a]:
        return False
    s.phi[x] = a
    s.inv[a] = x
    s.trail[s.tlen] = x
    s.tlen += 1
    return True


cdef bint _propagate(HomState* s, int start) noexcept:
    cdef int q = start, k, x, y, px, py, z, t
    cdef int n = s.n
    while q < s.tlen:
        x = s.trail[q]
        px = s.phi[x]
        for k in range(q + 1):
            y = s.trail[k]
            py = s.phi[y]
            z = s.src[x * n + y]
            t = s.dst[px * n + py]
            if s.phi[z] == -1:
                if not _assign(s, z, t):
                    return False
            elif s.phi[z] != t:
                return False
            z = s.src[y * n + x]
            t = s.dst[py * n + px]
            if s.phi[z] == -1:
                if not _assign(s, z, t):
                    return False
            elif s.phi[z] != t:
                return False
        q += 1
    return True


cdef inline void _undo(HomState* s, int mark) noexcept:
    cdef int x
    while s.tlen > mark:
        s.tlen -= 1
        x = s.trail[s.tlen]
        s.inv[s.phi[x]] = -1
        s.phi[x] = -1


cdef int _dfs(HomState* s, int pos, list out, int limit) except -1:
    cdef int n = s.n, a, mark, i
    while pos < n and s.phi[pos] != -1:
        pos += 1
    if pos == n:
        out.append(tuple([s.phi[i] for i in range(n)]))
        return 1 if (limit > 0 and len(out) >= limit) else 0
    for a in range(n):
        if s.inv[a] != -1:
            continue
        mark = s.tlen
        if _assign(s, pos, a) and _propagate(s, mark):
            if _dfs(s, pos + 1, out, limit):
                return 1
        _undo(s, mark)
    return 0


def hom_search(src, dst, int n, src_mask=None, dst_mask=None, int limit=0):
    if src_mask is None:
        src_mask = [0] * n
    if dst_mask is None:
        dst_mask = [0] * n
    if sum(src_mask) != sum(dst_mask):
        return []
    cdef HomState s
    cdef int i
    cdef list out = []
    s.n = n
    s.tlen = 0
    s.src = _as_carray(src, n * n)
    s.dst = _as_carray(dst, n * n)
    s.smask = _as_carray(src_mask, n)
    s.dmask = _as_carray(dst_mask, n)
    s.phi = <int*> malloc(n * sizeof(int))
    s.inv = <int*> malloc(n * sizeof(int))
    s.trail = <int*> malloc(n * sizeof(int))
    try:
        for i in range(n):
            s.phi[i] = -1
            s.inv[i] = -1
        _dfs(&s, 0, out, limit)
    finally:
        free(s.src)
        free(s.dst)
        free(s.smask)
        free(s.dmask)
        free(s.phi)
        free(s.inv)
        free(s.trail)
    return out


cdef bint _next_perm(int* p, int n) noexcept:
    cdef int i = n - 2, j, tmp
    while i >= 0 and p[i] >= p[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while p[j] <= p[i]:
        j -= 1
    tmp = p[i]; p[i] = p[j]; p[j] = tmp
    i += 1
    j = n - 1
    while i < j:
        tmp = p[i]; p[i] = p[j]; p[j] = tmp
        i += 1
        j -= 1
    return True


def autotopisms(table, int n):
    cdef int* t = _as_carray(table, n * n)
    cdef int* rdiv = <int*> malloc(n * n * sizeof(int))
    cdef int* U = <int*> malloc(n * sizeof(int))
    cdef int* V = <int*> malloc(n * sizeof(int))
    cdef int* W = <int*> malloc(n * sizeof(int))
    cdef int u, x, y, v, u0, ux
    cdef bint ok
    cdef list out = []
    try:
        for u in range(n):
            for y in range(n):
                rdiv[u * n + t[u * n + y]] = y
        for x in range(n):
            U[x] = x
        while True:
            u0 = U[0]
            for v in range(n):
                for x in range(n):
                    W[t[x * n]] = t[U[x] * n + v]
                for y in range(n):
                    V[y] = rdiv[u0 * n + W[t[y]]]
                ok = True
                for x in range(n):
                    ux = U[x] * n
                    for y in range(n):
                        if t[ux + V[y]] != W[t[x * n + y]]:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    out.append((
                        tuple([U[x] for x in range(n)]),
                        tuple([V[x] for x in range(n)]),
                        tuple([W[x] for x in range(n)]),
                    ))
            if not _next_perm(U, n):
                break
    finally:
        free(t)
        free(rdiv)
        free(U)
        free(V)
        free(W)
    out.sort()
    return out


def first_nonassociative(table, int n):
    cdef int* t = _as_carray(table, n * n)
    cdef int x, y, z, xy
    try:
        for x in range(n):
            for y in range(n):
                xy = t[x * n + y]
                for z in range(n):
                    if t[xy * n + z] != t[x * n + t[y * n + z]]:
                        return (x, y, z)
    finally:
        free(t)
    return None
