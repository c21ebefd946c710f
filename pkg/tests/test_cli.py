import csv
import io
import json
import subprocess
import sys

import pytest

from verbalis.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def ok(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    data = json.loads(out)
    assert data["schema"] == "verbalis/1"
    return data


def test_group_commands():
    info = ok("group", "info", "--g", "S3")
    assert info["order"] == 6 and not info["abelian"] and info["class_sizes"] == [1, 2, 3]
    subs = ok("group", "subgroups", "--g", "S3")
    assert subs["count"] == 6 and [s["order"] for s in subs["subgroups"]] == [1, 2, 2, 2, 3, 6]
    assert ok("group", "normal", "--g", "Q8")["count"] == 6
    assert ok("group", "series", "--g", "S3")["orders"] == [1, 3, 6]
    assert ok("group", "iso", "--a", "C6", "--b", "C2 x C3")["isomorphic"]
    assert not ok("group", "iso", "--a", "C4", "--b", "C2^2")["isomorphic"]
    assert ok("group", "mingen", "--g", "C2^4")["min_generators"] == 4
    assert ok("group", "count-index", "--g", "S3", "--n", "3")["count"] == 3
    assert ok("group", "core", "--g", "S3", "--h", "[0, 1]")["core"]["order"] == 1


def test_word_commands():
    assert ok("word", "eval", "--g", "C4", "--w", "x^2", "--assign", "x=1")["value"] == 2
    v = ok("word", "verbal", "--g", "S3", "--w", "[x1,x2]")
    assert v["subgroup_order"] == 3 and v["width"] == 1
    assert ok("word", "width", "--g", "S3", "--w", "x^3")["width"] == 2
    laws = ok("word", "laws", "--a", "C2", "--vars", "1", "--length", "2")
    assert laws["laws"] == ["x1^2", "x1^-2"]
    comb = ok("word", "combine", "--w", "x^2", "--w", "[y1,y2]", "--g", "Q8")
    assert comb["variables"] == ["x1", "x2", "x3"] and comb["equal"]
    vv = ok("word", "variety-verbal", "--g", "S3", "--a", "C2", "--vars", "2", "--length", "4")
    assert vv["order"] == 3 and vv["agree"]


def test_srank_and_frattini_commands():
    assert ok("srank", "--g", "C2^2", "--s", "C2")["s_rank"] == {"rank": 2, "witnesses": 3, "M_order": 1}
    assert ok("srank", "--g", "S3", "--s", "C3")["s_rank"]["rank"] == 0
    both = ok("count-quotients", "--g", "C2^2 x S3", "--f", "C2", "--method", "both")
    assert both["series"] == both["brute"] == 7 and both["agree"]
    assert ok("frattini", "--g", "C4")["frattini"]["elements"] == [0, 2]
    cov = ok("frattini-cover", "--source", "C4", "--target", "C2", "--map", "canonical")
    assert cov["frattini_cover"]["is_cover"] and cov["min_generators"] == [1, 1]
    cov = ok("frattini-cover", "--source", "C2^2", "--target", "C2", "--map", "[0, 1, 0, 1]")
    assert not cov["frattini_cover"]["is_cover"] and cov["min_generators"] == [2, 1]


def test_fo_commands():
    assert ok("fo", "eval", "--g", "C2", "--phi", "forall x. x*x = e")["value"]
    assert not ok("fo", "eval", "--g", "S3", "--phi", "forall x. forall y. [x,y] = e")["value"]
    sat = ok("fo", "eval", "--g", "C4", "--phi", "exists h. y = h^2")
    assert sat["satisfying"] == [[0], [2]]
    mem = ok("fo", "membership", "--w", "x^2", "--r", "1", "--g", "C4")
    assert mem["satisfying"] == [0, 2] and mem["defines_verbal"]
    ls = ok("fo", "length-sentence", "--w", "x^3", "--r", "1", "--s", "2", "--g", "S3")
    assert ls["value"] is False
    ls = ok("fo", "length-sentence", "--w", "[x1,x2]", "--r", "1", "--s", "2", "--delta", "+,-", "--g", "S3")
    assert ls["value"] is True
    rel = ok("fo", "relativize", "--phi", "forall y. y = e", "--w", "x^2", "--g", "C4")
    assert rel["r"] == 1 and rel["formula"].startswith("forall y. exists h1.")
    assert not ok("fo", "equiv", "--a", "C4", "--b", "C2^2", "--depth", "2")["equivalent"]
    assert ok("fo", "equiv", "--a", "C6", "--b", "C2 x C3", "--depth", "3")["equivalent"]


def test_tower_commands():
    t = ok("tower", "build", "--spec", '{"family": "Zp", "p": 2}', "--depth", "3")
    assert t["orders"] == [2, 4, 8]
    fp = ok("tower", "fingerprint", "--t", '{"family": "Zp", "p": 2, "depth": 3}', "--bound", "8")
    assert [e["order"] for e in fp["entries"]] == [1, 2, 4, 8]
    cmp = ok("tower", "compare", "--a", '{"family": "Zp", "p": 2, "depth": 3}',
             "--b", '{"family": "Zp", "p": 3, "depth": 3}', "--bound", "9")
    assert cmp["equal"] is False
    prod = ok("tower", "product", "--factors", '[{"family": "constant", "group": "S3"}, {"family": "Zp", "p": 2}]',
              "--depth", "2")
    assert prod["orders"] == [12, 24]
    sup = ok("tower", "support-check", "--factors", '["S3", {"family": "Zp", "p": "all", "power": "p"}]')
    assert sup["pass"] and sup["primes"]["5"] == ["1[p=5]"]
    dc = ok("tower", "decomp-check", "--k0", "C5", "--kn", "S3", "--n", "3")
    assert dc["holds"] and dc["subgroups_checked"] == 3


def test_exit_codes():
    code, out, err = call("group", "info", "--g", "G7")
    assert code == 1 and json.loads(out)["error"] == "UnknownName" and "UnknownName" in err
    code, out, err = call("word", "eval", "--g", "C4", "--w", "x*")
    assert code == 1 and json.loads(out)["error"] == "WordSyntaxError"
    code, _, _ = call("group", "subgroups", "--g", "C12", "--enumeration", "5")
    assert code == 1
    code, _, _ = call("group", "info")
    assert code == 2
    code, _, _ = call("group", "bogus")
    assert code == 2
    code, _, err = call("fo", "membership", "--w", "x^2")
    assert code == 2 and "usage" in err
    code, _, _ = call("tower", "support-check", "--factors", '[{"family": "mystery"}]')
    assert code == 1


def test_text_format():
    code, out, _ = call("group", "mingen", "--g", "S3", "--format", "text")
    assert code == 0 and out == "min_generators: 2\n"


def test_output_is_deterministic():
    argv = ["group", "subgroups", "--g", "A4"]
    assert call(*argv)[1] == call(*argv)[1]
    argv = ["tower", "fingerprint", "--t", '{"family": "product", "factors": ["S3", {"family": "Zp", "p": 2}], "depth": 3}',
            "--bound", "12"]
    assert call(*argv)[1] == call(*argv)[1]


def test_figures_are_written(tmp_path):
    for argv, name in [
        (["group", "subgroups", "--g", "S3"], "lattice.png"),
        (["word", "verbal", "--g", "S3", "--w", "x^3"], "layers.png"),
        (["word", "width", "--g", "A4", "--w", "x^2"], "width.png"),
        (["tower", "fingerprint", "--t", '{"family": "Zp", "p": 2, "depth": 3}', "--bound", "8"], "counts.png"),
    ]:
        path = tmp_path / name
        data = ok(*argv, "--figure", str(path))
        assert data["figure"] == str(path)
        assert path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_report_writes_csv_and_figure(tmp_path):
    data = ok("report", "--out", str(tmp_path), "--max-order", "8")
    with open(tmp_path / "corpus.csv", newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == data["rows"] > 5
    s3 = next(r for r in rows if r["label"] == "S3")
    assert s3["subgroups"] == "6" and s3["commutator_order"] == "3" and s3["frattini_order"] == "1"
    assert (tmp_path / "corpus.png").stat().st_size > 1000


@pytest.mark.parametrize("argv", [["-m", "verbalis", "group", "mingen", "--g", "Q8"]])
def test_module_entry_point(argv):
    proc = subprocess.run([sys.executable, *argv], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["min_generators"] == 2
