import json
import pathlib

import pytest

from semisep.errors import LawViolation, ParseError, UnknownReference
from semisep.modalg import AlgebraMorphism, check_algebra
from semisep.workspace import parse_workspace, parse_workspace_text

ROOT = pathlib.Path(__file__).resolve().parent.parent
WORKSPACES = sorted((ROOT / "workspaces").glob("*.work"))


def ws(doc, field=None):
    return parse_workspace_text(json.dumps(doc, indent=1), "t.work", field=field)


KG = {"carrier": 2, "mul": [[1, 0, 0, 1], [0, 1, 1, 0]], "unit": [[1], [0]]}


def test_empty_workspace():
    w = ws({})
    assert w.tasks == [] and w.field == "Q"


def test_group_algebra_from_structure_constants():
    w = ws({"algebras": {"kG": KG}})
    assert check_algebra(w.algebras["kG"]).ok


def test_wrong_unit_names_the_unit_law():
    bad = dict(KG, unit=[[0], [1]])
    with pytest.raises(LawViolation) as exc:
        ws({"algebras": {"kG": bad}})
    assert "unit" in exc.value.law
    assert "t.work:3" in str(exc.value)


def test_floats_are_rejected():
    with pytest.raises(ParseError, match="integers or 'a/b'"):
        ws({"algebras": {"kG": dict(KG, unit=[[1.0], [0]])}})


def test_rational_strings_accepted():
    w = ws({"algebras": {"A": {"carrier": 2, "mul": [[1, 0, 0, "1/2"], [0, 1, 1, 0]], "unit": [[1], [0]]}}})
    assert check_algebra(w.algebras["A"]).ok


def test_json_syntax_error_has_position():
    with pytest.raises(ParseError, match=r"x\.work:3:1"):
        parse_workspace_text('{\n "algebras": [1,\n}', "x.work")


def test_unknown_reference():
    with pytest.raises(UnknownReference, match="morphisms.f"):
        ws({"morphisms": {"f": {"src": "nowhere", "dst": "nowhere", "matrix": [[1]]}}})


def test_cycle_is_a_parse_error():
    with pytest.raises(ParseError, match="depends on itself"):
        ws({"morphisms": {"a": {"compose": ["b"]}, "b": {"compose": ["a"]}}})


def test_order_does_not_matter():
    doc = {"morphisms": {"id": {"src": "kG", "dst": "kG", "matrix": [[1, 0], [0, 1]]}}, "algebras": {"kG": KG}}
    assert isinstance(ws(doc).morphisms["id"], AlgebraMorphism)


def test_bad_task_and_top_level_keys():
    with pytest.raises(ParseError, match="unknown op"):
        ws({"tasks": [{"op": "nope"}]})
    with pytest.raises(ParseError, match="duplicate task id"):
        ws({"tasks": [{"id": "a", "op": "check"}, {"id": "a", "op": "check"}]})
    with pytest.raises(ParseError, match="unknown top-level"):
        ws({"algebra": {}})
    with pytest.raises(ParseError, match="reserved"):
        ws({"backends": {"vec": {"kind": "matn"}}})


def test_field_override_reduces_entries():
    w = ws({"algebras": {"kG": KG}}, field="Fp:2")
    assert w.field == "Fp:2"
    assert w.algebras["kG"].backend.field.characteristic == 2


def test_bimodule_workspace_has_three_tasks():
    w = parse_workspace(ROOT / "workspaces" / "kG_bimodule.work")
    assert len(w.tasks) == 3


def test_missing_file():
    with pytest.raises(ParseError, match="cannot read"):
        parse_workspace(ROOT / "workspaces" / "absent.work")


@pytest.mark.parametrize("path", WORKSPACES, ids=lambda p: p.name)
def test_shipped_workspaces_load(path):
    w = parse_workspace(path)
    assert w.tasks
