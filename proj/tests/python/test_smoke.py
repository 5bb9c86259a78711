import json
import os
import pathlib

import jsonschema
import pytest

import ctcsa

ROOT = pathlib.Path(os.environ.get("CTCSA_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))


def test_group_basics():
    g = ctcsa.Group("psl2:4")
    assert g.order == 60 == len(g)
    assert not g.is_abelian()
    assert g.is_ct()["verdict"]
    assert not g.is_csa()["verdict"]
    wu = g.wu_class()
    assert (wu["kind"], wu["f"]) == ("SimpleCT", 2)


def test_ct_methods_agree():
    for recipe in ["symmetric:4", "dihedral:5", "frobenius:3,7", "psl2:3"]:
        g = ctcsa.Group(recipe)
        verdicts = {g.is_ct(m)["verdict"] for m in ("centralizer", "triple-scan", "maximal-abelian")}
        assert len(verdicts) == 1, recipe


def test_ct_witness():
    r = ctcsa.Group("psl2:7").is_ct()
    assert not r["verdict"]
    assert len(r["witness"]["elements"]) == 3


def test_abelian_normal_extraction():
    t = ctcsa.Group("frobenius:3,7").extract_abelian_normal()
    assert len(t["g0"]) == 21
    assert len(t["a"]) == 7


def test_group_info():
    info = ctcsa.group_info("frobenius:3,7")
    assert info["order"] == 21 and info["solvable"] and info["ct"] and not info["csa"]
    assert ctcsa.group_info("cyclic:1")["order"] == 1


def test_evaluate():
    s3 = ctcsa.Group("symmetric:3")
    assert ctcsa.evaluate(ctcsa.builtin_text("CT"), s3)["verdict"]
    r = ctcsa.evaluate(ctcsa.builtin_text("MAL"), s3)
    assert not r["verdict"]
    assert set(r["assignment"]) == {"x", "y", "z"}
    text = ctcsa.normalize_sentence(ctcsa.builtin_text("CT"))
    assert ctcsa.normalize_sentence(text) == text


def test_errors_carry_codes():
    with pytest.raises(ctcsa.CtcsaError) as e:
        ctcsa.Group("nope:3")
    assert ctcsa.error_code(e.value) == "RecipeError"
    with pytest.raises(ctcsa.CtcsaError) as e:
        ctcsa.evaluate("forall x (y = 1)", ctcsa.Group("cyclic:2"))
    assert ctcsa.error_code(e.value) == "UnboundVariable"


def test_psl2_order():
    assert [ctcsa.psl2_order(q) for q in (2, 3, 4, 5, 7)] == [6, 12, 60, 60, 168]


def test_report_validates_against_schema():
    schema = json.loads((ROOT / "schema" / "report.schema.json").read_text())
    report = ctcsa.run_suite("all")
    jsonschema.validate(report, schema)
    assert report["summary"]["failed"] == 0
    assert report["summary"]["refutations"] == 2
    assert all(row["anchor"] for row in report["suites"])


def test_reports_are_deterministic():
    a = ctcsa.run_suite("psl2-ct", timestamp=False)
    b = ctcsa.run_suite("psl2-ct", timestamp=False)
    assert a == b


def test_shipped_config_matches_default():
    shipped = json.loads((ROOT / "config" / "default.json").read_text())
    report = ctcsa.run_suite("pq-example", config=shipped, timestamp=False)
    default = ctcsa.run_suite("pq-example", timestamp=False)
    assert report == default
