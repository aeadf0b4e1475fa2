"""Identities of quasigroups and loops, checked by exhaustive assignment.

Terms are written in prefix notation::

    (mul (mul x y) (rinv x))

with ``mul``, ``linv`` (left inverse ``x^λ``), ``rinv`` (right inverse ``x^ρ``)
and the unit constant ``e``; any other symbol is a variable.  Variables are
numbered in alphabetical order of their names, so counterexamples are reported
with ``x`` before ``y`` before ``z``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence, Union

from .errors import NotApplicableError
from .substructure import SPair
from .tables import CayleyTable, _inverse_maps, classify, restrict


@dataclass(frozen=True)
class Var:
    index: int
    name: str = ""


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class LeftInverse:
    child: "Term"


@dataclass(frozen=True)
class RightInverse:
    child: "Term"


@dataclass(frozen=True)
class Unit:
    pass


Term = Union[Var, Mul, LeftInverse, RightInverse, Unit]


def uses_loop(term: Term) -> bool:
    if isinstance(term, (LeftInverse, RightInverse, Unit)):
        return True
    if isinstance(term, Mul):
        return uses_loop(term.left) or uses_loop(term.right)
    return False


def term_vars(term: Term) -> set[int]:
    if isinstance(term, Var):
        return {term.index}
    if isinstance(term, Mul):
        return term_vars(term.left) | term_vars(term.right)
    if isinstance(term, (LeftInverse, RightInverse)):
        return term_vars(term.child)
    return set()


def render(term: Term) -> str:
    if isinstance(term, Var):
        return term.name or f"x{term.index}"
    if isinstance(term, Mul):
        return f"(mul {render(term.left)} {render(term.right)})"
    if isinstance(term, LeftInverse):
        return f"(linv {render(term.child)})"
    if isinstance(term, RightInverse):
        return f"(rinv {render(term.child)})"
    return "e"


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(\(|\)|[^\s()]+)")
_OPS = {"mul": 2, "linv": 1, "rinv": 1}


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot tokenize term at {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def _parse_sexpr(tokens: list[str], pos: int):
    if pos >= len(tokens):
        raise ValueError("unexpected end of term")
    tok = tokens[pos]
    if tok == ")":
        raise ValueError("unexpected ')'")
    if tok != "(":
        return tok, pos + 1
    items = []
    pos += 1
    while pos < len(tokens) and tokens[pos] != ")":
        item, pos = _parse_sexpr(tokens, pos)
        items.append(item)
    if pos >= len(tokens):
        raise ValueError("missing ')'")
    return items, pos + 1


def _build(node, names: Mapping[str, int]) -> Term:
    if isinstance(node, str):
        if node == "e":
            return Unit()
        if node in _OPS:
            raise ValueError(f"operator {node!r} used as a variable")
        return Var(names[node], node)
    if not node or not isinstance(node[0], str) or node[0] not in _OPS:
        raise ValueError(f"expected (mul a b), (linv a) or (rinv a), got {node!r}")
    op, args = node[0], node[1:]
    if len(args) != _OPS[op]:
        raise ValueError(f"{op} takes {_OPS[op]} argument(s), got {len(args)}")
    if op == "mul":
        return Mul(_build(args[0], names), _build(args[1], names))
    child = _build(args[0], names)
    return LeftInverse(child) if op == "linv" else RightInverse(child)


def _symbols(node) -> set[str]:
    if isinstance(node, str):
        return set() if node in _OPS or node == "e" else {node}
    return set().union(*(_symbols(n) for n in node)) if node else set()


def _read(text: str):
    tokens = _tokenize(text)
    node, pos = _parse_sexpr(tokens, 0)
    if pos != len(tokens):
        raise ValueError(f"trailing tokens after term: {tokens[pos:]}")
    return node


def parse_term(text: str, names: Mapping[str, int] | None = None) -> Term:
    node = _read(text)
    if names is None:
        names = {s: i for i, s in enumerate(sorted(_symbols(node)))}
    return _build(node, names)


# ---------------------------------------------------------------- varieties


@dataclass(frozen=True)
class VarietyDef:
    name: str
    lhs: Term
    rhs: Term
    variables: tuple[str, ...]

    @property
    def requires_loop(self) -> bool:
        return uses_loop(self.lhs) or uses_loop(self.rhs)

    @property
    def arity(self) -> int:
        return len(self.variables)

    def format(self) -> str:
        return f"{render(self.lhs)} = {render(self.rhs)}"


def parse_identity(text: str, name: str | None = None) -> VarietyDef:
    """Parse ``"<term> = <term>"``.

    Variables range over the union of both sides, so ``y`` in the cross inverse
    identity ``(mul (mul x y) (rinv x)) = y`` is quantified even though the
    right side mentions only ``y``.
    """
    left, sep, right = text.partition("=")
    if not sep:
        raise ValueError("identity needs the form '<term> = <term>'")
    lnode, rnode = _read(left), _read(right)
    variables = tuple(sorted(_symbols(lnode) | _symbols(rnode)))
    names = {s: i for i, s in enumerate(variables)}
    return VarietyDef(name or text.strip(), _build(lnode, names), _build(rnode, names), variables)


_CATALOG_SOURCE = {
    "bol.left": "(mul x (mul y (mul x z))) = (mul (mul x (mul y x)) z)",
    "bol.right": "(mul (mul (mul z x) y) x) = (mul z (mul (mul x y) x))",
    "moufang": "(mul (mul x y) (mul z x)) = (mul (mul x (mul y z)) x)",
    "extra": "(mul x (mul y (mul z x))) = (mul (mul (mul x y) z) x)",
    "alt.left": "(mul x (mul x y)) = (mul (mul x x) y)",
    "alt.right": "(mul (mul y x) x) = (mul y (mul x x))",
    "flexible": "(mul (mul x y) x) = (mul x (mul y x))",
    "lc": "(mul (mul x x) (mul y z)) = (mul (mul x (mul x y)) z)",
    "rc": "(mul (mul y z) (mul x x)) = (mul y (mul (mul z x) x))",
    "c": "(mul y (mul x (mul x z))) = (mul (mul (mul y x) x) z)",
    "ip.left": "(mul (linv x) (mul x y)) = y",
    "ip.right": "(mul (mul y x) (rinv x)) = y",
    "wip": "(mul y (rinv (mul x y))) = (rinv x)",
    "cip": "(mul (mul x y) (rinv x)) = y",
    "aip": "(rinv (mul x y)) = (mul (rinv x) (rinv y))",
}

CATALOG: dict[str, VarietyDef] = {
    name: parse_identity(src, name) for name, src in _CATALOG_SOURCE.items()
}


def catalog_names() -> list[str]:
    return list(CATALOG)


def resolve_varieties(selection: str | Sequence[str] | None) -> list[VarietyDef]:
    """``None`` or ``"all"`` gives the whole catalog; otherwise comma-separated
    catalog names or ``"<term> = <term>"`` identities."""
    if selection is None or selection == "all":
        return list(CATALOG.values())
    if isinstance(selection, str):
        items = [selection] if "=" in selection else selection.split(",")
    else:
        items = list(selection)
    out = []
    for item in items:
        item = item.strip()
        if item in CATALOG:
            out.append(CATALOG[item])
        elif "=" in item:
            out.append(parse_identity(item))
        else:
            raise ValueError(f"unknown variety {item!r}; catalog: {', '.join(CATALOG)}")
    return out


# ---------------------------------------------------------------- evaluation


def _loop_parts(table: CayleyTable):
    cls = classify(table)
    if not cls.is_loop:
        return None
    left, right = _inverse_maps(table)
    return cls.identity, left, right


def _compile(term: Term, table: CayleyTable, parts) -> Callable[[Sequence[int]], int]:
    rows = table.rows
    if isinstance(term, Var):
        i = term.index
        return lambda a: a[i]
    if isinstance(term, Mul):
        f, g = _compile(term.left, table, parts), _compile(term.right, table, parts)
        return lambda a: rows[f(a)][g(a)]
    if parts is None:
        raise NotApplicableError("inverse or unit node needs a loop")
    e, left, right = parts
    if isinstance(term, Unit):
        return lambda a: e
    f = _compile(term.child, table, parts)
    inv = left if isinstance(term, LeftInverse) else right
    return lambda a: inv[f(a)]


def eval_term(table: CayleyTable, term: Term, assignment: Sequence[int] | Mapping[int, int]) -> int:
    needed = term_vars(term)
    if isinstance(assignment, Mapping):
        missing = needed - set(assignment)
        if missing:
            raise KeyError(f"unassigned variable(s) {sorted(missing)}")
        values = [assignment.get(i, 0) for i in range(max(needed, default=-1) + 1)]
    else:
        values = list(assignment)
        if needed and max(needed) >= len(values):
            raise KeyError(f"unassigned variable {max(needed)}")
    parts = _loop_parts(table) if uses_loop(term) else None
    return _compile(term, table, parts)(values)


def holds_identity(table: CayleyTable, v: VarietyDef) -> tuple[bool, dict[str, int] | None]:
    """Exhaustive check over all ``n^k`` assignments.

    Returns ``(True, None)`` or ``(False, least counterexample)``; raises
    :class:`NotApplicableError` when the identity needs a loop and ``table``
    is not one.
    """
    parts = None
    if v.requires_loop:
        parts = _loop_parts(table)
        if parts is None:
            raise NotApplicableError(f"{v.name} needs a loop")
    lhs = _compile(v.lhs, table, parts)
    rhs = _compile(v.rhs, table, parts)
    for a in itertools.product(range(table.order), repeat=v.arity):
        if lhs(a) != rhs(a):
            return False, dict(zip(v.variables, a))
    return True, None


def variety_profile(
    table: CayleyTable, varieties: Sequence[VarietyDef] | None = None
) -> dict[str, str]:
    """Map each variety name to ``holds``, ``fails`` or ``not_applicable``."""
    out = {}
    for v in varieties if varieties is not None else CATALOG.values():
        try:
            ok, _ = holds_identity(table, v)
        except NotApplicableError:
            out[v.name] = "not_applicable"
        else:
            out[v.name] = "holds" if ok else "fails"
    return out


def smarandache_variety_check(pair: SPair, v: VarietyDef) -> tuple[bool, dict[str, int] | None]:
    """Check ``v`` on the designated substructure; counterexamples are given
    in the parent's element labels."""
    sub = restrict(pair.table, pair.subset)
    ok, cex = holds_identity(sub, v)
    if cex is not None:
        cex = {k: pair.subset[i] for k, i in cex.items()}
    return ok, cex
