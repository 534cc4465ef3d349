import json

import pytest

from ocgroups import analysis as an
from ocgroups.cli import main

SCHEMA_KEYS = ["label", "order", "center_order", "nilpotent", "abelian", "class_sizes",
               "order_spectrum", "rational", "oc", "odd_order_conjugate", "all_order_conjugate"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def strip_timing(doc):
    if isinstance(doc, dict):
        return {k: strip_timing(v) for k, v in doc.items() if k != "elapsed_ms"}
    if isinstance(doc, list):
        return [strip_timing(v) for v in doc]
    return doc


def test_analyze_s3(capsys):
    code, out, _ = run(capsys, "analyze", "builtin:s3")
    assert code == 0
    assert "order: 6" in out and "OC-group: yes" in out and "rational: yes" in out


def test_analyze_q8_json(capsys):
    code, out, _ = run(capsys, "analyze", "builtin:q8", "--json", "--chartab")
    doc = json.loads(out)
    assert code == 0
    assert list(doc)[:4] == ["version", "command", "groups", "counterexamples"]
    assert "elapsed_ms" in doc
    g = doc["groups"][0]
    assert list(g) == SCHEMA_KEYS
    assert g["oc"] is False and g["rational"] is True and g["center_order"] == 2
    assert [c["degree"] for c in doc["character_table"]["characters"]] == [1, 1, 1, 1, 2]


def test_analyze_l34b(capsys):
    code, out, _ = run(capsys, "analyze", "builtin:l34b", "--json")
    g = json.loads(out)["groups"][0]
    assert code == 0 and g["order"] == 40320 and g["odd_order_conjugate"] is True


def test_analyze_text_and_json_agree(capsys):
    _, text, _ = run(capsys, "analyze", "builtin:gl23")
    _, js, _ = run(capsys, "analyze", "builtin:gl23", "--json")
    g = json.loads(js)["groups"][0]
    assert f"order: {g['order']}" in text
    assert f"classes: {len(g['class_sizes'])}" in text
    assert "element orders: " + " ".join(map(str, g["order_spectrum"])) in text


def test_analyze_group_file(capsys, tmp_path):
    path = tmp_path / "s3.txt"
    path.write_text("degree 3\n2 3 1\n2 1 3\n")
    code, out, _ = run(capsys, "analyze", str(path))
    assert code == 0 and "order: 6" in out


@pytest.mark.parametrize("argv", [
    ["analyze", "builtin:nope"],
    ["analyze", "/does/not/exist"],
    ["analyze", "builtin:l34", "--chartab"],
    ["analyze", "builtin:s5", "--max-order", "50"],
    ["verify", "nonsense"],
    ["verify", "theorem-a", "--scan-degree", "9"],
    ["verify", "theorem-a", "--seed-catalog", "/does/not/exist"],
])
def test_configuration_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_bad_group_file_reports_line(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("degree 3\n1 2 2\n")
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 2 and "line 2" in err


def test_verify_lemma_2_4(capsys):
    code, out, _ = run(capsys, "verify", "lemma-2-4")
    assert code == 0 and "PASS" in out
    assert "17 admissible (q, r) pairs" in out
    code, out, _ = run(capsys, "verify", "lemma-2-4", "--json")
    doc = json.loads(out)
    assert len(doc["campaigns"][0]["pairs"]) == 17


def test_verify_theorem_b(capsys):
    code, out, _ = run(capsys, "verify", "theorem-b")
    assert code == 0 and out.startswith("theorem-b: PASS")


def test_verify_theorem_a_small_scan(capsys):
    code, out, _ = run(capsys, "verify", "theorem-a", "--scan-degree", "4", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["counterexamples"] == []
    camp = doc["campaigns"][0]
    assert camp["scope"] == "desk-scale verification"
    assert sum(v["label"].startswith("S4:") for v in camp["verdicts"]) == 30


def test_counterexample_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(an, "is_oc_group", lambda G: True)
    code, out, _ = run(capsys, "verify", "theorem-a", "--scan-degree", "3", "--max-order", "200",
                       "--json")
    doc = json.loads(out)
    assert code == 1
    assert doc["counterexamples"] and doc["groups"]
    assert all(list(g) == SCHEMA_KEYS for g in doc["groups"])


def test_json_is_deterministic(capsys):
    argv = ["verify", "syskin", "--scan-degree", "4", "--max-order", "1000", "--json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert strip_timing(json.loads(a)) == strip_timing(json.loads(b))


def test_text_and_json_verdicts_agree(capsys):
    argv = ["verify", "lemma-2-5", "--scan-degree", "4", "--max-order", "1000"]
    _, text, _ = run(capsys, *argv)
    _, js, _ = run(capsys, *argv, "--json")
    camp = json.loads(js)["campaigns"][0]
    assert f"({camp['checked']} checked, {len(json.loads(js)['counterexamples'])} counterexamples" in text


def test_seed_catalog(capsys, tmp_path):
    (tmp_path / "c4.txt").write_text("degree 4\n2 3 4 1\n")
    (tmp_path / "seeds.txt").write_text("# extra groups\nc4.txt\n")
    code, out, _ = run(capsys, "verify", "theorem-a", "--scan-degree", "0", "--max-order", "200",
                       "--seed-catalog", str(tmp_path / "seeds.txt"), "-v")
    assert code == 0 and "c4.txt (order 4): OC, abelian" in out
