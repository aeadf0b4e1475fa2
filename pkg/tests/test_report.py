import json

from sisotopy.morphisms import Isotopism, PermGroup
from sisotopy.perm import Perm
from sisotopy.report import emit_report, to_jsonable
from sisotopy.tables import format_table


def test_verdict_json():
    assert emit_report({"verdict": True}, "json") == '{"verdict":true}\n'


def test_permgroup_json_identity_first():
    g = PermGroup.of(3, [Perm((1, 0, 2)), Perm.identity(3)])
    assert emit_report(g, "json") == "[[0,1,2],[1,0,2]]\n"


def test_sorted_keys_and_sets():
    out = emit_report({"b": {3, 1, 2}, "a": Perm((1, 0))}, "json")
    assert out == '{"a":[1,0],"b":[1,2,3]}\n'


def test_table_text(star6):
    assert emit_report(star6, "text") == format_table(star6)
    assert emit_report(star6, "text").splitlines()[2] == "4 1 1 4 4 1"


def test_isotopism_round_trip():
    iso = Isotopism(Perm((1, 0)), Perm((0, 1)), Perm((1, 0)))
    assert json.loads(emit_report(iso, "json")) == {"U": [1, 0], "V": [0, 1], "W": [1, 0]}
    assert emit_report(iso, "text") == "U= 1 0\nV= 0 1\nW= 1 0\n"


def test_text_dict_is_sorted_one_key_per_line():
    assert emit_report({"z": False, "a": [0, 1]}, "text") == "a: {0,1}\nz: no\n"


def test_unknown_type():
    import pytest

    with pytest.raises(TypeError):
        to_jsonable(object())
    with pytest.raises(ValueError):
        emit_report({}, "xml")
