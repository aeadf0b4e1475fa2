"""Finite binary systems given by Cayley tables.

Elements are the integers ``0..n-1`` and ``T.op(x, y)`` is the entry in row
``x``, column ``y``.  Tables are immutable and hashable, so search results
keyed on them can be cached.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Sequence

from . import _kernels
from .errors import NotLoopError, NotQuasigroupError, TableError
from .perm import Perm


@dataclass(frozen=True)
class CayleyTable:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        n = len(rows)
        if n < 1:
            raise TableError("table order must be at least 1")
        for r, row in enumerate(rows):
            if len(row) != n:
                raise TableError(f"expected {n} entries, got {len(row)}", row=r)
            for c, v in enumerate(row):
                if not isinstance(v, int) or isinstance(v, bool):
                    raise TableError(f"non-integer entry {v!r}", row=r, col=c)
                if not 0 <= v < n:
                    raise TableError(f"entry {v} out of range 0..{n - 1}", row=r, col=c)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_function(cls, n: int, op: Callable[[int, int], int]) -> CayleyTable:
        return cls(tuple(tuple(op(x, y) for y in range(n)) for x in range(n)))

    @property
    def order(self) -> int:
        return len(self.rows)

    def op(self, x: int, y: int) -> int:
        return self.rows[x][y]

    @cached_property
    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def column(self, y: int) -> tuple[int, ...]:
        return tuple(row[y] for row in self.rows)

    def classify(self) -> StructureClass:
        return classify(self)

    def __str__(self) -> str:
        return format_table(self)


@dataclass(frozen=True)
class StructureClass:
    is_quasigroup: bool
    is_semigroup: bool
    is_loop: bool
    is_group: bool
    identity: int | None

    def kind(self) -> str:
        """Most specific name among group, loop, quasigroup, semigroup, groupoid."""
        if self.is_group:
            return "group"
        if self.is_loop:
            return "loop"
        if self.is_quasigroup:
            return "quasigroup"
        if self.is_semigroup:
            return "semigroup"
        return "groupoid"


# ---------------------------------------------------------------- parsing


def parse_table(source: str) -> CayleyTable:
    """Parse the plain-text or JSON table format.

    Text: first line ``n``, then ``n`` rows of ``n`` whitespace-separated
    integers.  JSON: ``{"n": ..., "table": [[...], ...]}``; an optional
    ``"s_subset"`` key is ignored here (see :func:`parse_table_document`).
    """
    return parse_table_document(source)[0]


def parse_table_document(source: str) -> tuple[CayleyTable, tuple[int, ...] | None]:
    """Like :func:`parse_table` but also returns the JSON ``s_subset`` if given."""
    if source.lstrip().startswith("{"):
        return _parse_json(source)
    return _parse_text(source), None


def _parse_int(tok, row, col):
    try:
        return int(tok)
    except (TypeError, ValueError):
        raise TableError(f"non-integer token {tok!r}", row=row, col=col) from None


def _parse_text(source: str) -> CayleyTable:
    lines = [ln for ln in source.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise TableError("empty table source")
    header = lines[0].split()
    if len(header) != 1:
        raise TableError("first line must hold the order n alone")
    n = _parse_int(header[0], None, None)
    if n < 1:
        raise TableError(f"order must be positive, got {n}")
    body = lines[1:]
    if len(body) != n:
        raise TableError(f"expected {n} rows, got {len(body)}")
    rows = []
    for r, line in enumerate(body):
        toks = line.split()
        if len(toks) != n:
            raise TableError(f"expected {n} entries, got {len(toks)}", row=r)
        rows.append(tuple(_parse_int(t, r, c) for c, t in enumerate(toks)))
    return CayleyTable(tuple(rows))


def _parse_json(source: str):
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise TableError(f"invalid JSON: {exc.msg} at line {exc.lineno}") from None
    if not isinstance(doc, dict) or "n" not in doc or "table" not in doc:
        raise TableError('JSON table needs keys "n" and "table"')
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise TableError(f'"n" must be a positive integer, got {n!r}')
    table = doc["table"]
    if not isinstance(table, list) or len(table) != n:
        raise TableError(f'"table" must be a list of {n} rows')
    rows = []
    for r, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise TableError(f"expected {n} entries", row=r)
        for c, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise TableError(f"non-integer entry {v!r}", row=r, col=c)
        rows.append(tuple(row))
    subset = doc.get("s_subset")
    if subset is not None:
        if not isinstance(subset, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) and 0 <= v < n for v in subset
        ):
            raise TableError(f'"s_subset" must list elements in 0..{n - 1}')
        subset = tuple(sorted(set(subset)))
    return CayleyTable(tuple(rows)), subset


def format_table(table: CayleyTable) -> str:
    lines = [str(table.order)]
    lines.extend(" ".join(map(str, row)) for row in table.rows)
    return "\n".join(lines) + "\n"


def table_to_json(table: CayleyTable, s_subset: Iterable[int] | None = None) -> dict:
    doc = {"n": table.order, "table": [list(row) for row in table.rows]}
    if s_subset is not None:
        doc["s_subset"] = sorted(s_subset)
    return doc


# ---------------------------------------------------------------- classification


def _is_latin(table: CayleyTable) -> bool:
    full = set(range(table.order))
    if any(set(row) != full for row in table.rows):
        return False
    return all(set(table.column(y)) == full for y in range(table.order))


def find_identity(table: CayleyTable) -> int | None:
    # a two-sided identity is unique in any groupoid (e = e·f = f)
    n = table.order
    for e in range(n):
        if table.rows[e] == tuple(range(n)) and table.column(e) == tuple(range(n)):
            return e
    return None


@lru_cache(maxsize=4096)
def classify(table: CayleyTable) -> StructureClass:
    quasi = _is_latin(table)
    semi = _kernels.first_nonassociative(table.flat, table.order) is None
    e = find_identity(table)
    loop = quasi and e is not None
    return StructureClass(
        is_quasigroup=quasi,
        is_semigroup=semi,
        is_loop=loop,
        is_group=loop and semi,
        identity=e,
    )


def translation(table: CayleyTable, x: int, side: str = "left") -> Perm:
    """``L_x: y -> x·y`` (``side="left"``) or ``R_x: y -> y·x`` (``"right"``)."""
    if side == "left":
        images = table.rows[x]
    elif side == "right":
        images = table.column(x)
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if len(set(images)) != table.order:
        raise NotQuasigroupError(f"{side} translation by {x} is not a bijection")
    return Perm(images)


def inverse_elements(table: CayleyTable, x: int) -> tuple[int, int]:
    """Return ``(x^λ, x^ρ)`` with ``x^λ·x == e`` and ``x·x^ρ == e``."""
    cls = classify(table)
    if not cls.is_loop:
        raise NotLoopError("inverse elements need a loop")
    left, right = _inverse_maps(table)
    return left[x], right[x]


@lru_cache(maxsize=1024)
def _inverse_maps(table: CayleyTable) -> tuple[tuple[int, ...], tuple[int, ...]]:
    e = classify(table).identity
    n = table.order
    left = [0] * n
    right = [0] * n
    for x in range(n):
        for y in range(n):
            if table.rows[x][y] == e:
                right[x] = y
                left[y] = x
    return tuple(left), tuple(right)


def restrict(table: CayleyTable, elements: Sequence[int]) -> CayleyTable:
    """The table of a closed subset, re-indexed by position in sorted order."""
    elems = sorted(elements)
    index = {x: i for i, x in enumerate(elems)}
    try:
        return CayleyTable(tuple(tuple(index[table.rows[x][y]] for y in elems) for x in elems))
    except KeyError:
        raise ValueError(f"subset {elems} is not closed") from None


# ---------------------------------------------------------------- small families


def cyclic_group(n: int) -> CayleyTable:
    return CayleyTable.from_function(n, lambda x, y: (x + y) % n)


def multiplication_mod(n: int) -> CayleyTable:
    return CayleyTable.from_function(n, lambda x, y: (x * y) % n)


def klein_four() -> CayleyTable:
    return CayleyTable.from_function(4, lambda x, y: x ^ y)


def symmetric_group(k: int) -> CayleyTable:
    """Table of all permutations of degree ``k`` (sorted) under composition."""
    from .perm import all_perms

    elems = list(all_perms(k))
    index = {p: i for i, p in enumerate(elems)}
    return CayleyTable.from_function(len(elems), lambda x, y: index[elems[x] * elems[y]])


def direct_product(a: CayleyTable, b: CayleyTable) -> CayleyTable:
    m = b.order

    def op(x, y):
        return a.op(x // m, y // m) * m + b.op(x % m, y % m)

    return CayleyTable.from_function(a.order * m, op)
