import json

import pytest

from artin_ah import batch
from artin_ah.cli import main
from artin_ah.generators import catalog, cycle, wheel
from artin_ah.graph import serialize_graph, serialize_json_graph


@pytest.fixture
def files(tmp_path):
    (tmp_path / "wheel6.artin").write_text(serialize_graph(wheel(6)))
    (tmp_path / "c4-all2.artin").write_text(serialize_graph(cycle(4, 2)))
    (tmp_path / "k3.artin").write_text("vertices: a b c\nedge a b 3\nedge b c 3\nedge a c 3\n")
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_certify_wheel(files, capsys):
    code, out, _ = run(capsys, "certify", "ah", files / "wheel6.artin")
    assert code == 0 and "ah:2dim" in out
    code, out, _ = run(capsys, "certify", "ah", files / "wheel6.artin", "--format", "json",
                       "--disable-rule", "P1,P2,P3", "--disable-rule", "P4", "--disable-rule", "P5,P6")
    doc = json.loads(out)
    assert code == 0 and doc["rule"] == "P7" and doc["verdict"] == "Proven"


def test_certify_c4(files, capsys):
    code, out, _ = run(capsys, "certify", "ah", files / "c4-all2.artin", "--format", "json")
    doc = json.loads(out)
    assert code == 1 and doc["rule"] == "R1"
    assert doc["witnesses"]["factors"] == [["v1", "v3"], ["v2", "v4"]]


def test_certify_wm_subset(files, capsys):
    code, out, _ = run(capsys, "certify", "wm", files / "c4-all2.artin", "--subset", "v1,v3")
    assert code == 1 and "S-refute" in out
    code, _, _ = run(capsys, "certify", "ic", files / "k3.artin")
    assert code == 0


def test_unknown_exit(tmp_path, capsys):
    p = tmp_path / "stuck.json"
    p.write_text(json.dumps({"vertices": ["v1", "v2", "v3", "v4"], "edges": [
        ["v1", "v2", 5], ["v1", "v3", 2], ["v1", "v4", 3], ["v2", "v3", 4], ["v2", "v4", 5], ["v3", "v4", 2]]}))
    code, out, _ = run(capsys, "certify", "ah", p)
    assert code == 2 and "attempted" in out


def test_hollow_cover(files, capsys):
    code, out, _ = run(capsys, "cover", "check", files / "k3.artin", "--explicit", "hollow")
    assert code == 0 and "not flag" in out and "{a,b,c}" in out
    code, out, _ = run(capsys, "cover", "check", files / "k3.artin", "--explicit", "cliques")
    assert code == 0 and "not flag" not in out


def test_cover_from_file(files, capsys):
    (files / "cov.json").write_text(json.dumps({"cover": [["a", "b", "c"]]}))
    code, out, _ = run(capsys, "cover", "check", files / "k3.artin", "--explicit", files / "cov.json",
                       "--format", "json")
    assert code == 0 and json.loads(out)["flag"] is True


def test_classify_splittings_convex(files, capsys):
    code, out, _ = run(capsys, "classify", files / "k3.artin", "--format", "json")
    assert code == 0 and json.loads(out)["components"] == [{"vertices": ["a", "b", "c"], "type": "~A2"}]
    code, out, _ = run(capsys, "splittings", files / "wheel6.artin", "--mode", "pairs", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 9
    code, out, _ = run(capsys, "convex", files / "wheel6.artin", "--omega", "v1,h,v4")
    assert code == 0 and "is 2-convex" in out


def test_gen(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "wheel", "6")
    assert code == 0 and out == serialize_graph(wheel(6))
    code, out, _ = run(capsys, "gen", "catalog", "E8", "--format", "json")
    assert out == serialize_json_graph(catalog("E8"))
    code, out, _ = run(capsys, "gen", "random", "5", "--seed", "42", "--choices", "2,3,inf")
    assert code == 0 and out == run(capsys, "gen", "random", "5", "--seed", "42", "--choices", "2,3,inf")[1]
    assert run(capsys, "gen", "random", "5")[0] == 64
    assert run(capsys, "gen", "wheel", "2")[0] == 64


def exit_code(argv):
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code


@pytest.mark.parametrize("argv, code", [
    (["certify", "xx", "f"], 64),
    (["splittings", "f", "--mode", "nope"], 64),
    ([], 64),
    (["convex", "f"], 64),
    (["certify", "ah", "missing.artin"], 65),
    (["certify", "ah", "missing.artin", "--disable-rule", "P99"], 64),
])
def test_usage_and_input_errors(capsys, argv, code):
    assert exit_code(argv) == code
    assert capsys.readouterr().err


def test_parse_error_exit(files, capsys):
    bad = files / "bad.artin"
    bad.write_text("vertices: a\nedge a a 3\n")
    code, _, err = run(capsys, "certify", "ah", bad)
    assert code == 65 and "line 2" in err


def test_batch(files, capsys):
    (files / "notes.txt").write_text("ignored")
    (files / "broken.artin").write_text("edge x y 3\n")
    code, out, _ = run(capsys, "batch", files, "--format", "json")
    rows = json.loads(out)
    assert code == 0
    assert [r["name"] for r in rows] == ["broken.artin", "c4-all2.artin", "k3.artin", "wheel6.artin"]
    assert [r["verdict"] for r in rows] == ["error", "Refuted", "Proven", "Proven"]
    assert (files / "wheel6.ah.cert.json").exists() and not (files / "broken.ah.cert.json").exists()
    # certificates written by the first run are not picked up as inputs
    code, out2, _ = run(capsys, "batch", files, "--format", "json")
    assert out2 == out


def test_batch_parallel_matches_serial(files):
    serial = batch.batch_certify(files, "ah", write_certificates=False)
    parallel = batch.batch_certify(files, "ah", jobs=2, write_certificates=False)
    assert serial == parallel


def test_batch_empty(tmp_path, capsys):
    code, out, _ = run(capsys, "batch", tmp_path)
    assert code == 0 and out.splitlines() == ["file  |V|  verdict  rule  flags"]
    assert run(capsys, "batch", tmp_path / "nope")[0] == 65


def test_batch_wheel_corpus(tmp_path):
    for n in range(6, 11):
        (tmp_path / f"w{n}.artin").write_text(serialize_graph(wheel(n)))
    rows = batch.batch_certify(tmp_path, "ah")
    assert len(rows) == 5 and {r.verdict for r in rows} == {"Proven"}


def test_batch_spherical_catalog(tmp_path):
    names = ["A3", "B4", "D5", "E6", "F4", "H3", "I2(5)"]
    for name in names:
        (tmp_path / f"{name}.json").write_text(serialize_json_graph(catalog(name)))
    rows = batch.batch_certify(tmp_path, "ah")
    assert [r.verdict for r in rows] == ["Refuted"] * len(names)
    for name in names:
        doc = json.loads((tmp_path / f"{name}.ah.cert.json").read_text())
        assert doc["rule"] == "R2" and any("central quotient" in n for n in doc["notes"])
