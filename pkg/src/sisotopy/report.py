"""Canonical rendering of results as JSON or plain text.

Output is deterministic: JSON keys are sorted, sets become sorted lists and
every stream ends with exactly one newline.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Any

from .morphisms import AutotopismSet, Isotopism, IsotopismVerdict, PermGroup
from .perm import Perm
from .substructure import SPair, SubStructure
from .tables import CayleyTable, StructureClass, format_table


def to_jsonable(obj: Any) -> Any:
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Perm):
        return list(obj.images)
    if isinstance(obj, CayleyTable):
        return [list(r) for r in obj.rows]
    if isinstance(obj, SPair):
        return {"table": to_jsonable(obj.table), "s_subset": list(obj.subset)}
    if isinstance(obj, SubStructure):
        return {"elements": list(obj.elements), "kind": obj.kind.kind()}
    if isinstance(obj, StructureClass):
        return {
            "group": obj.is_group,
            "identity": obj.identity,
            "loop": obj.is_loop,
            "quasigroup": obj.is_quasigroup,
            "semigroup": obj.is_semigroup,
        }
    if isinstance(obj, (Isotopism, PermGroup, AutotopismSet, IsotopismVerdict)):
        return obj.to_json()
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _text_value(v: Any) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "none"
    if isinstance(v, Perm):
        return v.format()
    if isinstance(v, (list, tuple)) and all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        return "{" + ",".join(map(str, v)) + "}"
    return json.dumps(to_jsonable(v), sort_keys=True, separators=(",", ":"))


def render_text(obj: Any) -> str:
    """Human-readable rendering; mirrors the JSON structure one key per line."""
    if isinstance(obj, str):
        return obj if obj.endswith("\n") else obj + "\n"
    if isinstance(obj, CayleyTable):
        return format_table(obj)
    if isinstance(obj, Isotopism):
        return obj.format()
    if isinstance(obj, PermGroup):
        lines = [f"order: {obj.order}"] + [p.format() for p in obj]
        return "\n".join(lines) + "\n"
    if isinstance(obj, dict):
        return "".join(f"{k}: {_text_value(v)}\n" for k, v in sorted(obj.items()))
    return _text_value(obj) + "\n"


def emit_report(result: Any, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(to_jsonable(result), sort_keys=True, separators=(",", ":")) + "\n"
    if fmt == "text":
        return render_text(result)
    raise ValueError(f"format must be 'text' or 'json', not {fmt!r}")
