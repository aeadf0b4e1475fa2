"""Pure-Python search kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors it line for
line. Tables are flat row-major sequences (``t[x * n + y] == x·y``).
"""

import itertools


def hom_search(src, dst, n, src_mask=None, dst_mask=None, limit=0):
    """Bijections ``phi`` with ``phi[x·y] == phi[x] ∘ phi[y]``.

    Solutions come out in lexicographic order of their image tuples; ``limit``
    stops after that many (0 means all).  With masks, ``x`` in the source
    subset iff ``phi[x]`` in the target subset.
    """
    if src_mask is None:
        src_mask = [0] * n
    if dst_mask is None:
        dst_mask = [0] * n
    if sum(src_mask) != sum(dst_mask):
        return []
    phi = [-1] * n
    inv = [-1] * n
    trail = []
    out = []

    def assign(x, a):
        if inv[a] != -1 or src_mask[x] != dst_mask[a]:
            return False
        phi[x] = a
        inv[a] = x
        trail.append(x)
        return True

    def propagate(start):
        q = start
        while q < len(trail):
            x = trail[q]
            px = phi[x]
            for k in range(q + 1):
                y = trail[k]
                py = phi[y]
                z = src[x * n + y]
                t = dst[px * n + py]
                if phi[z] == -1:
                    if not assign(z, t):
                        return False
                elif phi[z] != t:
                    return False
                z = src[y * n + x]
                t = dst[py * n + px]
                if phi[z] == -1:
                    if not assign(z, t):
                        return False
                elif phi[z] != t:
                    return False
            q += 1
        return True

    def undo(mark):
        while len(trail) > mark:
            x = trail.pop()
            inv[phi[x]] = -1
            phi[x] = -1

    def dfs(pos):
        while pos < n and phi[pos] != -1:
            pos += 1
        if pos == n:
            out.append(tuple(phi))
            return limit > 0 and len(out) >= limit
        for a in range(n):
            if inv[a] != -1:
                continue
            mark = len(trail)
            if assign(pos, a) and propagate(mark):
                if dfs(pos + 1):
                    return True
            undo(mark)
        return False

    dfs(0)
    return out


def autotopisms(table, n):
    """All triples ``(U, V, W)`` with ``xU·yV == (x·y)W`` on a quasigroup table.

    ``U`` runs over all permutations and ``v = 0V`` over all symbols; column 0
    then forces ``W`` and row ``0U`` forces ``V``, so each candidate costs one
    cell sweep.  Returned sorted.
    """
    # rdiv[u * n + c] = the y with u·y == c
    rdiv = [0] * (n * n)
    for u in range(n):
        for y in range(n):
            rdiv[u * n + table[u * n + y]] = y
    col0 = [table[x * n] for x in range(n)]
    row0 = [table[y] for y in range(n)]
    out = []
    for U in itertools.permutations(range(n)):
        u0 = U[0]
        for v in range(n):
            W = [-1] * n
            ok = True
            for x in range(n):
                c = col0[x]
                w = table[U[x] * n + v]
                if W[c] != -1:
                    ok = False
                    break
                W[c] = w
            if not ok or len(set(W)) != n:
                continue
            V = [rdiv[u0 * n + W[row0[y]]] for y in range(n)]
            if V[0] != v:
                continue
            for x in range(n):
                ux = U[x] * n
                for y in range(n):
                    if table[ux + V[y]] != W[table[x * n + y]]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append((tuple(U), tuple(V), tuple(W)))
    out.sort()
    return out


def first_nonassociative(table, n):
    """Least ``(x, y, z)`` with ``(x·y)·z != x·(y·z)``, or None."""
    for x in range(n):
        for y in range(n):
            xy = table[x * n + y]
            for z in range(n):
                if table[xy * n + z] != table[x * n + table[y * n + z]]:
                    return (x, y, z)
    return None
