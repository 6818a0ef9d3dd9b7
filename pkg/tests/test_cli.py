import json

import pytest

from pyramidal import cli
from pyramidal.families import REFERENCE_NAMES, symmetric_group
from pyramidal.kernel import load_permgroup, save_permgroup


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_files(tmp_path, capsys):
    from pyramidal.families import alternating_group, dihedral_group
    for name, g, verdict in [("s3", symmetric_group(3), "Case1"),
                             ("d4", dihedral_group(4), "NotPyramidal"),
                             ("a4", alternating_group(4), "Case3")]:
        p = tmp_path / f"{name}.json"
        save_permgroup(g, p)
        code, out, _ = run(capsys, "analyze", str(p), "--json")
        doc = json.loads(out)
        assert code == 0 and doc["verdict"] == verdict
    assert json.loads(run(capsys, "analyze", str(tmp_path / "a4.json"), "--json")[1])["params"] == {"n": 1}
    code, out, _ = run(capsys, "analyze", str(tmp_path / "d4.json"))
    assert "5 involutions" in out


def test_make_and_reload(tmp_path, capsys):
    for args, order, verdict in [(["homocyclic", "n=2"], 48, "Case3"),
                                 (["s3xh", "h=cyclic:7"], 42, "Case1"),
                                 (["suzuki64", "a=15"], 960, "Case2"),
                                 (["homocyclic", "n=1", "y=cyclic:9"], 36, "Case3")]:
        out = tmp_path / "g.json"
        code, _, _ = run(capsys, "make", *args, "--out", str(out))
        assert code == 0
        assert load_permgroup(out).order == order
        code, text, _ = run(capsys, "analyze", str(out), "--json")
        assert json.loads(text)["verdict"] == verdict


def test_bad_input_exit_code(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"degree": 3, "generators": [[0, 0, 1]]}))
    assert run(capsys, "analyze", str(p))[0] == 2
    p.write_text("garbage")
    assert run(capsys, "analyze", str(p))[0] == 2
    assert run(capsys, "make", "s3xh", "h=cyclic:2", "--out", str(p))[0] == 2


def test_cap_exit_code(capsys):
    code, _, err = run(capsys, "analyze", "--spec", "symmetric:6", "--cap", "100")
    assert code == 4 and "CapExceeded" in err


def test_corpus_small_passes(tmp_path, capsys):
    code, out, _ = run(capsys, "corpus", "--profile", "small", "--json",
                       "--report-dir", str(tmp_path / "rep"))
    doc = json.loads(out)
    assert code == 0
    assert doc["summary"]["disagreements"] == 0
    assert doc["summary"]["groups"] == len(doc["entries"])
    files = sorted(p.name for p in (tmp_path / "rep").iterdir())
    assert files == ["corpus_small.csv", "corpus_small_timings.png", "corpus_small_verdicts.png"]
    header = (tmp_path / "rep" / "corpus_small.csv").read_text().splitlines()[0]
    assert header.startswith("index,name,expected,order")


def test_corpus_manifest_roundtrip_and_wrong_tag(tmp_path, capsys):
    m = tmp_path / "corpus.json"
    assert run(capsys, "corpus", "--write-manifest", str(m))[0] == 0
    doc = json.loads(m.read_text())
    doc["entries"] = doc["entries"][:5] + [{"name": "S3", "spec": "symmetric:3",
                                            "expected": "negative"}]
    m.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "corpus", "--manifest", str(m))
    assert code == 3 and "BAD" in out


def test_corpus_detects_a_broken_classifier(monkeypatch, capsys):
    import pyramidal.classification as classify_mod
    monkeypatch.setattr(classify_mod, "structural_case", lambda *a, **k: (None, "broken"))
    code, out, _ = run(capsys, "corpus", "--profile", "small")
    assert code == 3
    assert "inconsistency" not in out or "BAD" in out


def test_corpus_with_corrupt_reference(tmp_path, capsys):
    import shutil
    from pyramidal import __path__ as pkg_path
    d = tmp_path / "ref"
    shutil.copytree(pkg_path[0] + "/data", d)
    doc = json.loads((d / "suzuki64.json").read_text())
    doc["generators"] = doc["generators"][:1]
    (d / "suzuki64.json").write_text(json.dumps(doc))
    code, _, err = run(capsys, "corpus", "--reference-dir", str(d))
    assert code == 2 and "ValidationFailed" in err


def test_jobs_give_identical_results(capsys, tmp_path):
    m = tmp_path / "c.json"
    run(capsys, "corpus", "--write-manifest", str(m))
    doc = json.loads(m.read_text())
    doc["entries"] = doc["entries"][30:42]
    m.write_text(json.dumps(doc))
    a = json.loads(run(capsys, "corpus", "--manifest", str(m), "--json")[1])
    b = json.loads(run(capsys, "corpus", "--manifest", str(m), "--json", "--jobs", "2")[1])
    strip = lambda d: [{k: v for k, v in e.items() if k != "seconds"} for e in d["entries"]]
    assert strip(a) == strip(b)
