import json

from qlhopf.cli import main
from qlhopf.qldata import cached_builtin, datum_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_validate_builtin_ok(capsys):
    code, out = run(capsys, "validate", "--builtin", "Q3_minus", "--lambda", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["valid"] is True and doc["failures"] == []


def test_validate_bad_override_exits_1(tmp_path, capsys):
    doc = datum_to_json(cached_builtin("Q3_minus", lam=1))
    doc["lambda"]["(12),(12)"] = "1"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out = run(capsys, "validate", "--datum", str(path))
    assert code == 1
    assert json.loads(out)["valid"] is False


def test_malformed_json_exits_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    code, _ = run(capsys, "validate", "--datum", str(path))
    assert code == 2


def test_missing_datum_exits_2(capsys):
    code, _ = run(capsys, "validate")
    assert code == 2


def test_quiver_deterministic(tmp_path, capsys):
    code1, out1 = run(capsys, "quiver", "--builtin", "Q3_minus", "--lambda", "1",
                      "--dot", str(tmp_path / "q.dot"))
    code2, out2 = run(capsys, "quiver", "--builtin", "Q3_minus", "--lambda", "1",
                      "--dot", str(tmp_path / "q2.dot"))
    assert code1 == code2 == 0
    assert out1 == out2
    assert (tmp_path / "q.dot").read_text() == (tmp_path / "q2.dot").read_text()
    doc = json.loads(out1)
    assert doc["arrow_count"] == 10
    assert all("affine D5~" == c["class"] for c in doc["separation_components"]
               if c["edges"])


def test_ext_subcommand(capsys):
    code, out = run(capsys, "ext", "--builtin", "Q3_minus", "--lambda", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["ext"]["S_eps->S_st(i)"] == 1
    assert doc["ext"]["S_st(i)->S_st(-i)"] == 0


def test_onedim_subcommand(capsys):
    code, out = run(capsys, "onedim", "--builtin", "Qn_chi", "--n", "4",
                    "--lambda", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["ext"]["eps->sg"]["dim"] == 0
    code, out = run(capsys, "onedim", "--builtin", "Qn_minus", "--n", "4",
                    "--Lambda", "1", "--Gamma", "1")
    doc = json.loads(out)
    assert doc["ext"]["eps->sg"]["dim"] == 1
    assert doc["ext"]["eps->sg"]["representative_f"] == ["1"] * 6


def test_report_graded_lifting(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, _ = run(capsys, "report", "--builtin", "Q3_minus", "--lambda", "0",
                  "--json", str(out_path))
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["algebra"] == {
        "dimension": 72, "radical_dimension": 66, "semisimple_dimension": 6,
    }
    assert len(doc["simples"]) == 3
    assert doc["projective_covers"]["dimension_audit"] == 72
    assert doc["separation_diagram"]["verdict"]["square_zero_quotient"] == "wild"


def test_report_n4_one_dimensional_only(capsys):
    code, out = run(capsys, "report", "--builtin", "Qn_minus", "--n", "4",
                    "--Lambda", "1", "--Gamma", "1")
    assert code == 0
    doc = json.loads(out)
    assert "one_dimensional" in doc and "algebra" not in doc


def test_fusion_subcommand(capsys):
    code, out = run(capsys, "fusion", "--builtin", "Q3_minus", "--lambda", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["fusion"]["S_st(i) (x) S_st(i)"] == {
        "target": "M(0,2i,1,1,0,0)[-i]", "verified": True,
    }


def test_catalog_subcommand(capsys):
    code, out = run(capsys, "catalog", "--lambda", "0")
    assert code == 0
    doc = json.loads(out)
    names = [e["name"] for e in doc["entries"]]
    assert names[:3] == ["S_eps", "S_sg", "S_st"]
    assert len(names) == 7


def test_dump_table(tmp_path, capsys):
    out_path = tmp_path / "table.json"
    code, _ = run(capsys, "report", "--builtin", "Q3_minus", "--lambda", "0",
                  "--json", str(tmp_path / "r.json"), "--dump-table", str(out_path))
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["dim"] == 72 and doc["basis"][doc["unit"]] == "1|e"
