"""Closed subsets and Smarandache structures.

A table is Smarandache when some proper subset of at least two elements is a
subgroup (for quasigroups, semigroups and loops) or a subsemigroup (for bare
groupoids) under the inherited operation.  Every S-computation downstream is
relative to one designated subset, carried by :class:`SPair`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import SPairError
from .tables import CayleyTable, StructureClass, classify, restrict

FILTERS = ("closed", "semigroup", "quasigroup", "loop", "group")


@dataclass(frozen=True)
class SubStructure:
    elements: tuple[int, ...]
    kind: StructureClass

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class SPair:
    table: CayleyTable
    sub: SubStructure

    @property
    def subset(self) -> tuple[int, ...]:
        return self.sub.elements

    @property
    def order(self) -> int:
        return self.table.order

    def mask(self) -> list[int]:
        inside = set(self.sub.elements)
        return [1 if x in inside else 0 for x in range(self.table.order)]


def closure(table: CayleyTable, seed: Iterable[int]) -> frozenset[int]:
    """Smallest superset of ``seed`` closed under the table's operation."""
    members = set(seed)
    if not members:
        raise ValueError("closure needs a non-empty seed")
    n = table.order
    if any(not 0 <= x < n for x in members):
        raise ValueError(f"seed elements must lie in 0..{n - 1}")
    rows = table.rows
    frontier = list(members)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(members):
                for c in (rows[a][b], rows[b][a]):
                    if c not in members:
                        members.add(c)
                        fresh.append(c)
        frontier = fresh
    return frozenset(members)


def substructure(table: CayleyTable, elements: Iterable[int]) -> SubStructure:
    elems = tuple(sorted(set(elements)))
    return SubStructure(elems, classify(restrict(table, elems)))


def _matches(kind: StructureClass, want: str) -> bool:
    if want == "closed":
        return True
    if want == "semigroup":
        return kind.is_semigroup
    if want == "quasigroup":
        return kind.is_quasigroup
    if want == "loop":
        return kind.is_loop
    if want == "group":
        return kind.is_group
    raise ValueError(f"unknown filter {want!r}; choose from {', '.join(FILTERS)}")


def closed_subsets(table: CayleyTable, max_size: int | None = None) -> list[frozenset[int]]:
    """All non-empty closed subsets, from joins of single-element closures.

    Every closed set is the closure of its own elements, so repeatedly joining
    found sets with singleton closures reaches all of them.  Pair seeds are
    added up front so two-generated subsets appear in the first round.
    """
    n = table.order
    limit = n if max_size is None else max_size
    singles = {closure(table, (x,)) for x in range(n)}
    found = {s for s in singles if len(s) <= limit}
    for x in range(n):
        for y in range(x + 1, n):
            c = closure(table, (x, y))
            if len(c) <= limit:
                found.add(c)
    frontier = list(found)
    while frontier:
        fresh = []
        for a in frontier:
            for s in singles:
                if s <= a:
                    continue
                c = closure(table, a | s)
                if len(c) <= limit and c not in found:
                    found.add(c)
                    fresh.append(c)
        frontier = fresh
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def enumerate_substructures(
    table: CayleyTable, want: str = "closed", max_size: int | None = None
) -> list[SubStructure]:
    """Closed subsets whose restricted table passes ``want``.

    ``want`` is one of ``closed``, ``semigroup``, ``quasigroup``, ``loop`` or
    ``group``.  Output is sorted by size, then lexicographically.
    """
    if want not in FILTERS:
        raise ValueError(f"unknown filter {want!r}; choose from {', '.join(FILTERS)}")
    out = []
    for s in closed_subsets(table, max_size):
        sub = substructure(table, s)
        if _matches(sub.kind, want):
            out.append(sub)
    return out


def required_kind(parent: StructureClass) -> str:
    """What the designated subset must be for a parent of this class."""
    if parent.is_quasigroup or parent.is_semigroup or parent.is_loop:
        return "group"
    return "semigroup"


def make_spair(table: CayleyTable, subset: Iterable[int]) -> SPair:
    elems = tuple(sorted(set(subset)))
    n = table.order
    if any(not 0 <= x < n for x in elems):
        raise SPairError(f"subset elements must lie in 0..{n - 1}")
    if not 2 <= len(elems) < n:
        raise SPairError(
            f"subset {list(elems)} is trivial: need 2 <= size < {n} (proper, non-singleton)"
        )
    if closure(table, elems) != frozenset(elems):
        raise SPairError(f"subset {list(elems)} is not closed")
    sub = substructure(table, elems)
    need = required_kind(classify(table))
    if not _matches(sub.kind, need):
        raise SPairError(
            f"subset {list(elems)} is a {sub.kind.kind()}, but a {classify(table).kind()} "
            f"needs a sub{need}"
        )
    return SPair(table, sub)


def smarandache_subsets(table: CayleyTable) -> list[SubStructure]:
    """Every subset that can be designated, in deterministic order."""
    need = required_kind(classify(table))
    n = table.order
    if n < 3:
        return []
    return [
        s
        for s in enumerate_substructures(table, need, max_size=n - 1)
        if s.size >= 2
    ]


def is_smarandache(table: CayleyTable) -> tuple[bool, tuple[int, ...] | None]:
    """Return ``(True, witness)`` for the first valid S-subset, else ``(False, None)``."""
    subs = smarandache_subsets(table)
    if not subs:
        return False, None
    return True, subs[0].elements
