"""Isotopisms, automorphisms, autotopisms and the searches behind them.

Searches are exhaustive backtracking (see ``_kernels``) and refuse orders above
a bound instead of truncating.  Any "find one" operation returns the
lexicographically least witness by image sequence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Union

from . import _kernels
from .errors import NotQuasigroupError, SearchBoundError, TableError
from .perm import Perm, setwise_stabilizer
from .substructure import SPair
from .tables import CayleyTable, classify

AUTOMORPHISM_BOUND = 8
AUTOTOPISM_BOUND = 6
ISOMORPHISM_BOUND = 64
SSYM_BOUND = 9

TableLike = Union[CayleyTable, SPair]


@dataclass(frozen=True, order=True)
class Isotopism:
    U: Perm
    V: Perm
    W: Perm

    def __post_init__(self):
        if not self.U.degree == self.V.degree == self.W.degree:
            raise ValueError("isotopism components must share a degree")

    @classmethod
    def identity(cls, n: int) -> Isotopism:
        i = Perm.identity(n)
        return cls(i, i, i)

    @property
    def degree(self) -> int:
        return self.U.degree

    def components(self) -> dict[str, Perm]:
        return {"U": self.U, "V": self.V, "W": self.W}

    def __mul__(self, other: Isotopism) -> Isotopism:
        return Isotopism(self.U * other.U, self.V * other.V, self.W * other.W)

    def inverse(self) -> Isotopism:
        return Isotopism(self.U.inverse(), self.V.inverse(), self.W.inverse())

    def preserves(self, subset: Iterable[int]) -> bool:
        subset = frozenset(subset)
        return all(p.preserves(subset) for p in (self.U, self.V, self.W))

    def format(self) -> str:
        return f"U= {self.U}\nV= {self.V}\nW= {self.W}\n"

    def to_json(self) -> dict:
        return {k: list(p.images) for k, p in self.components().items()}


def parse_isotopism(source: str) -> Isotopism:
    """Read ``U=``/``V=``/``W=`` lines or the JSON object with those keys."""
    if source.lstrip().startswith("{"):
        try:
            doc = json.loads(source)
        except json.JSONDecodeError as exc:
            raise TableError(f"invalid JSON: {exc.msg} at line {exc.lineno}") from None
        missing = [k for k in "UVW" if k not in doc]
        if missing:
            raise TableError(f"isotopism JSON missing keys {missing}")
        comps = {}
        for k in "UVW":
            if not isinstance(doc[k], list):
                raise TableError(f"{k} must be a list of images")
            comps[k] = Perm(tuple(doc[k]))
    else:
        comps = {}
        for r, line in enumerate(source.splitlines()):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            label, sep, rest = line.partition("=")
            label = label.strip()
            if not sep or label not in ("U", "V", "W"):
                raise TableError(f"expected a line 'U= ...', 'V= ...' or 'W= ...', got {line!r}", row=r)
            if label in comps:
                raise TableError(f"component {label} given twice", row=r)
            comps[label] = Perm.parse(rest)
        missing = [k for k in "UVW" if k not in comps]
        if missing:
            raise TableError(f"isotopism missing components {missing}")
    try:
        return Isotopism(comps["U"], comps["V"], comps["W"])
    except ValueError as exc:
        raise TableError(str(exc)) from None


@dataclass(frozen=True)
class PermGroup:
    """An explicit, sorted list of permutations closed under composition."""

    degree: int
    elements: tuple[Perm, ...]

    @classmethod
    def of(cls, degree: int, elements: Iterable[Perm]) -> PermGroup:
        return cls(degree, tuple(sorted(set(elements))))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self._members

    @cached_property
    def _members(self) -> frozenset[Perm]:
        return frozenset(self.elements)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self._members <= other._members

    def audit(self) -> list[str]:
        """Group-law violations (empty list when the set is a group)."""
        problems = []
        members = self._members
        if Perm.identity(self.degree) not in members:
            problems.append("identity missing")
        for p in self.elements:
            if p.inverse() not in members:
                problems.append(f"inverse of {p} missing")
            for q in self.elements:
                if p * q not in members:
                    problems.append(f"{p} * {q} not in set")
                    return problems
        return problems

    def is_boolean(self) -> bool:
        """Every element squares to the identity."""
        return all((p * p).is_identity() for p in self.elements)

    def conjugate(self, psi: Perm) -> frozenset[Perm]:
        return frozenset(p.conjugate_by(psi) for p in self.elements)

    def to_json(self) -> list[list[int]]:
        return [list(p.images) for p in self.elements]


@dataclass(frozen=True)
class AutotopismSet:
    degree: int
    triples: tuple[Isotopism, ...]

    @property
    def order(self) -> int:
        return len(self.triples)

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self):
        return iter(self.triples)

    def __contains__(self, t: Isotopism) -> bool:
        return t in self._members

    @cached_property
    def _members(self) -> frozenset[Isotopism]:
        return frozenset(self.triples)

    def audit(self) -> list[str]:
        problems = []
        members = self._members
        if Isotopism.identity(self.degree) not in members:
            problems.append("identity triple missing")
        for a in self.triples:
            if a.inverse() not in members:
                problems.append(f"inverse of {a.to_json()} missing")
            for b in self.triples:
                if a * b not in members:
                    problems.append("not closed under composition")
                    return problems
        return problems

    def to_json(self) -> list[dict]:
        return [t.to_json() for t in self.triples]


@dataclass(frozen=True)
class IsotopismVerdict:
    is_isotopism: bool
    failing_cells: tuple[tuple[int, int], ...]
    s_checked: bool = False
    is_s_isotopism: bool | None = None
    failing_components: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        doc = {
            "isotopism": self.is_isotopism,
            "failing_cells": [list(c) for c in self.failing_cells],
        }
        if self.s_checked:
            doc["s_isotopism"] = self.is_s_isotopism
            doc["failing_components"] = list(self.failing_components)
        return doc


def _split(obj: TableLike) -> tuple[CayleyTable, tuple[int, ...] | None]:
    if isinstance(obj, SPair):
        return obj.table, obj.subset
    return obj, None


def apply_isotopism(table: CayleyTable, iso: Isotopism) -> CayleyTable:
    """The table ``G`` making ``iso`` an isotopism from ``table`` onto ``G``.

    ``a ∘ b = ((a U^-1)·(b V^-1)) W``.
    """
    n = table.order
    if iso.degree != n:
        raise ValueError(f"isotopism degree {iso.degree} does not match order {n}")
    ui, vi, w = iso.U.inverse().images, iso.V.inverse().images, iso.W.images
    rows = table.rows
    return CayleyTable(tuple(tuple(w[rows[ui[a]][vi[b]]] for b in range(n)) for a in range(n)))


def verify_isotopism(src: TableLike, dst: TableLike, iso: Isotopism) -> IsotopismVerdict:
    """Check ``xU ∘ yV == (x·y)W`` cell by cell; with two SPairs also check
    that each component maps the source subset onto the target subset."""
    s_table, s_sub = _split(src)
    d_table, d_sub = _split(dst)
    n = s_table.order
    if d_table.order != n or iso.degree != n:
        raise ValueError("degree mismatch between tables and isotopism")
    U, V, W = iso.U.images, iso.V.images, iso.W.images
    failing = tuple(
        (x, y)
        for x in range(n)
        for y in range(n)
        if d_table.rows[U[x]][V[y]] != W[s_table.rows[x][y]]
    )
    if s_sub is None or d_sub is None:
        return IsotopismVerdict(not failing, failing)
    target = frozenset(d_sub)
    bad = tuple(k for k, p in iso.components().items() if p.image_of(s_sub) != target)
    return IsotopismVerdict(
        is_isotopism=not failing,
        failing_cells=failing,
        s_checked=True,
        is_s_isotopism=not failing and not bad,
        failing_components=bad,
    )


def _check_bound(what, n, bound):
    if n > bound:
        raise SearchBoundError(what, n, bound)


@lru_cache(maxsize=2048)
def _automorphisms(table: CayleyTable) -> tuple[Perm, ...]:
    flat = table.flat
    return tuple(Perm(p) for p in _kernels.hom_search(flat, flat, table.order))


def automorphism_group(table: CayleyTable, max_order: int = AUTOMORPHISM_BOUND) -> PermGroup:
    _check_bound("automorphism search", table.order, max_order)
    return PermGroup(table.order, _automorphisms(table))


def saum(pair: SPair, max_order: int = AUTOMORPHISM_BOUND) -> PermGroup:
    """Automorphisms that map the designated subset onto itself."""
    aum = automorphism_group(pair.table, max_order)
    return PermGroup(aum.degree, tuple(a for a in aum if a.preserves(pair.subset)))


def ssym(pair: SPair, max_order: int = SSYM_BOUND) -> PermGroup:
    """All permutations mapping the designated subset onto itself."""
    _check_bound("SSYM enumeration", pair.order, max_order)
    return PermGroup(pair.order, tuple(setwise_stabilizer(pair.order, pair.subset)))


@lru_cache(maxsize=1024)
def _autotopisms(table: CayleyTable) -> tuple[Isotopism, ...]:
    return tuple(
        Isotopism(Perm(u), Perm(v), Perm(w))
        for u, v, w in _kernels.autotopisms(table.flat, table.order)
    )


def autotopism_set(
    table: CayleyTable, smarandache: SPair | None = None, max_order: int = AUTOTOPISM_BOUND
) -> AutotopismSet:
    """AUT of a quasigroup, or SAUT when an SPair over the same table is given."""
    if not classify(table).is_quasigroup:
        raise NotQuasigroupError("autotopism search needs a quasigroup")
    _check_bound("autotopism search", table.order, max_order)
    triples = _autotopisms(table)
    if smarandache is not None:
        if smarandache.table != table:
            raise ValueError("SPair must be over the same table")
        triples = tuple(t for t in triples if t.preserves(smarandache.subset))
    return AutotopismSet(table.order, triples)


def find_isomorphism(
    src: TableLike, dst: TableLike, max_order: int = ISOMORPHISM_BOUND
) -> Perm | None:
    """Least ``phi`` with ``(x·y)phi == xphi ∘ yphi``; with SPairs, also
    ``phi`` maps the source subset onto the target subset."""
    s_table, s_sub = _split(src)
    d_table, d_sub = _split(dst)
    n = s_table.order
    if d_table.order != n:
        return None
    _check_bound("isomorphism search", n, max_order)
    s_mask = d_mask = None
    if s_sub is not None and d_sub is not None:
        s_mask = [1 if x in set(s_sub) else 0 for x in range(n)]
        d_mask = [1 if x in set(d_sub) else 0 for x in range(n)]
    found = _kernels.hom_search(s_table.flat, d_table.flat, n, s_mask, d_mask, 1)
    return Perm(found[0]) if found else None


def is_isomorphism(src: CayleyTable, dst: CayleyTable, phi: Perm) -> bool:
    return verify_isotopism(src, dst, Isotopism(phi, phi, phi)).is_isotopism


def find_conjugator(a: PermGroup, b: PermGroup, ambient: PermGroup) -> Perm | None:
    """Least ``psi`` in ``ambient`` with ``psi^-1 A psi == B`` as sets."""
    if not a.degree == b.degree == ambient.degree:
        raise ValueError("groups must share a degree")
    if a.order != b.order:
        return None
    target = frozenset(b.elements)
    for psi in ambient.elements:
        if a.conjugate(psi) == target:
            return psi
    return None


def symmetric_perm_group(n: int) -> PermGroup:
    return PermGroup(n, tuple(setwise_stabilizer(n, ())))


__all__ = [
    "AUTOMORPHISM_BOUND",
    "AUTOTOPISM_BOUND",
    "ISOMORPHISM_BOUND",
    "AutotopismSet",
    "Isotopism",
    "IsotopismVerdict",
    "PermGroup",
    "apply_isotopism",
    "automorphism_group",
    "autotopism_set",
    "find_conjugator",
    "find_isomorphism",
    "is_isomorphism",
    "parse_isotopism",
    "saum",
    "ssym",
    "verify_isotopism",
]
