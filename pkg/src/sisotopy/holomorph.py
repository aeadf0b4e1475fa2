"""Holomorphs over the automorphism group and its subset-preserving subgroup.

Elements are pairs ``(alpha, x)`` with product
``(alpha, x) ∘ (beta, y) = (alpha beta, (x beta)·y)``, encoded as
``n * a + x`` where ``a`` indexes ``alpha`` in the group's sorted order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotQuasigroupError, SisotopyError
from .morphisms import AUTOMORPHISM_BOUND, PermGroup, automorphism_group, saum
from .perm import Perm
from .substructure import SPair, make_spair
from .tables import CayleyTable, classify, restrict, table_to_json


class HolomorphError(SisotopyError):
    """A constructed holomorph failed one of its structural checks."""


@dataclass(frozen=True)
class HolomorphTable:
    base: CayleyTable
    group: PermGroup
    table: CayleyTable
    mode: str
    designated: tuple[int, ...] | None = None

    @property
    def order(self) -> int:
        return self.table.order

    def encode(self, a: int, x: int) -> int:
        return self.base.order * a + x

    def decode(self, h: int) -> tuple[int, int]:
        return divmod(h, self.base.order)

    def encoding(self) -> list[tuple[int, int]]:
        return [self.decode(h) for h in range(self.order)]

    def to_json(self) -> dict:
        doc = table_to_json(self.table, self.designated)
        doc["encoding"] = [list(p) for p in self.encoding()]
        doc["group"] = self.group.to_json()
        doc["mode"] = self.mode
        return doc


def holomorph_table(base: CayleyTable, group: PermGroup) -> CayleyTable:
    n = base.order
    elems = group.elements
    index = {p: i for i, p in enumerate(elems)}
    m = len(elems)
    mult = [[index[elems[a] * elems[b]] for b in range(m)] for a in range(m)]
    rows = []
    for a in range(m):
        for x in range(n):
            row = []
            for b in range(m):
                beta = elems[b].images
                ab = mult[a][b] * n
                xb_row = base.rows[beta[x]]
                row.extend(ab + xb_row[y] for y in range(n))
            rows.append(tuple(row))
    return CayleyTable(tuple(rows))


def build_holomorph(
    base: CayleyTable,
    mode: str = "full",
    pair: SPair | None = None,
    max_order: int = AUTOMORPHISM_BOUND,
) -> HolomorphTable:
    """``mode="full"`` uses AUM; ``mode="smarandache"`` uses SAUM of ``pair``
    and designates ``L' x SAUM``, which is checked to be a group."""
    cls = classify(base)
    if not cls.is_quasigroup:
        raise NotQuasigroupError("holomorph needs a quasigroup base")
    if mode == "full":
        group = automorphism_group(base, max_order)
        designated = None
    elif mode == "smarandache":
        if pair is None:
            raise ValueError("smarandache mode needs an SPair")
        if pair.table != base:
            raise ValueError("SPair must be over the base table")
        group = saum(pair, max_order)
        n = base.order
        designated = tuple(sorted(n * a + x for a in range(group.order) for x in pair.subset))
    else:
        raise ValueError(f"mode must be 'full' or 'smarandache', not {mode!r}")

    table = holomorph_table(base, group)
    hcls = classify(table)
    if not hcls.is_quasigroup:
        raise HolomorphError("holomorph product table is not a Latin square")
    if cls.is_loop:
        e = group.elements.index(Perm.identity(base.order)) * base.order + cls.identity
        if not hcls.is_loop or hcls.identity != e:
            raise HolomorphError(f"holomorph of a loop lacks identity {e}")
    if designated is not None:
        sub = classify(restrict(table, designated))
        if not sub.is_group:
            raise HolomorphError("designated subset L' x SAUM is not a group")
    return HolomorphTable(base, group, table, mode, designated)


def holomorph_s_pair(h: HolomorphTable) -> SPair:
    if h.mode != "smarandache" or h.designated is None:
        raise ValueError("holomorph was not built in smarandache mode")
    return make_spair(h.table, h.designated)
