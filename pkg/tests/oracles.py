"""Brute-force reference implementations.

These share no code with the library beyond the table container: each one
enumerates the whole search space straight from the definitions.
"""

from __future__ import annotations

import itertools


def rows_of(table):
    return [list(r) for r in table.rows]


def is_latin(rows):
    n = len(rows)
    full = set(range(n))
    return all(set(r) == full for r in rows) and all({rows[x][y] for x in range(n)} == full for y in range(n))


def is_associative(rows):
    n = len(rows)
    return all(
        rows[rows[x][y]][z] == rows[x][rows[y][z]]
        for x in range(n) for y in range(n) for z in range(n)
    )


def two_sided_identity(rows):
    n = len(rows)
    for e in range(n):
        if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
            return e
    return None


def is_group(rows):
    return bool(rows) and is_latin(rows) and is_associative(rows) and two_sided_identity(rows) is not None


def sub_rows(rows, elements):
    idx = {x: i for i, x in enumerate(elements)}
    return [[idx[rows[a][b]] for b in elements] for a in elements]


def closed(rows, elements):
    s = set(elements)
    return all(rows[a][b] in s for a in elements for b in elements)


def powerset_substructures(table, want):
    """Every non-empty subset passing ``want`` (closed / semigroup / group), sorted by size then lex."""
    rows = rows_of(table)
    n = len(rows)
    out = []
    for k in range(1, n + 1):
        for subset in itertools.combinations(range(n), k):
            if not closed(rows, subset):
                continue
            sr = sub_rows(rows, subset)
            if want == "closed":
                ok = True
            elif want == "semigroup":
                ok = is_associative(sr)
            elif want == "group":
                ok = is_group(sr)
            elif want == "quasigroup":
                ok = is_latin(sr)
            elif want == "loop":
                ok = is_latin(sr) and two_sided_identity(sr) is not None
            else:
                raise ValueError(want)
            if ok:
                out.append(subset)
    return out


def all_automorphisms(table):
    rows = rows_of(table)
    n = len(rows)
    return sorted(
        p for p in itertools.permutations(range(n))
        if all(p[rows[x][y]] == rows[p[x]][p[y]] for x in range(n) for y in range(n))
    )


def all_isomorphisms(src, dst, src_subset=None, dst_subset=None):
    a, b = rows_of(src), rows_of(dst)
    n = len(a)
    if len(b) != n:
        return []
    out = []
    for p in itertools.permutations(range(n)):
        if src_subset is not None and {p[x] for x in src_subset} != set(dst_subset):
            continue
        if all(p[a[x][y]] == b[p[x]][p[y]] for x in range(n) for y in range(n)):
            out.append(p)
    return out


def all_autotopisms(table):
    """(U, V, W) with (x·y)W = xU·yV, by n!² enumeration with W read off."""
    rows = rows_of(table)
    n = len(rows)
    perms = list(itertools.permutations(range(n)))
    out = []
    for u in perms:
        for v in perms:
            w = [None] * n
            ok = True
            for x in range(n):
                for y in range(n):
                    src, img = rows[x][y], rows[u[x]][v[y]]
                    if w[src] is None:
                        w[src] = img
                    elif w[src] != img:
                        ok = False
                        break
                if not ok:
                    break
            if ok and sorted(w) == list(range(n)):
                out.append((u, v, tuple(w)))
    return sorted(out)


def isotope(rows, u, v, w):
    """x∘y = W(T(U⁻¹x, V⁻¹y)) straight from the definition (x·y)W = xU ∘ yV."""
    n = len(rows)
    out = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            out[u[x]][v[y]] = w[rows[x][y]]
    return out


def compose(p, q):
    """Left-to-right product: apply p, then q."""
    return tuple(q[p[x]] for x in range(len(p)))


def invert(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)
