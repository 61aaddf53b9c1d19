import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from crownfree.cli import run

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_color_c5_json():
    code, out, _ = call("color", "--scheme", "crown-p5", "--in", str(FIXTURES / "c5.g6"), "--json")
    doc = json.loads(out)
    assert code == 0 and doc["palette_size"] == 3 and doc["bound"] == 3 and doc["problems"] == []


def test_verify_k33_fork_structure():
    code, out, _ = call("verify", "--scheme", "fork-structure", "--in", str(FIXTURES / "k33.g6"))
    assert code == 0 and "FAIL" not in out and "ok" in out


def test_sweep_builtin_six():
    code, out, _ = call("sweep", "--builtin", "6", "--class", "crown-p5", "--scheme", "crown-p5", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["violations"] == [] and doc["in_class"] > 0


def test_sweep_writes_log(tmp_path):
    log = tmp_path / "s.jsonl"
    code, out, _ = call("sweep", "--builtin", "4", "--class", "claw-free", "--scheme", "claw-free", "--out", str(log))
    assert code == 0 and "violations: 0" in out
    assert json.loads(log.read_text().splitlines()[0])["schema"] == "crownfree.sweep"


def test_json_mode_one_document_per_graph():
    code, out, _ = call("classify", "--json", stdin="Dhc\nA_\n@\n")
    docs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [d["graph6"] for d in docs] == ["Dhc", "A_", "@"]
    assert docs[0]["classes"]["claw-free"]


def test_json_output_is_deterministic():
    args = ("color", "--scheme", "crown-p3p2", "--in", str(FIXTURES / "grotzsch.g6"), "--json")
    assert call(*args)[1] == call(*args)[1]


def test_grotzsch_colour_and_classify():
    code, out, _ = call("color", "--scheme", "crown-p3p2", "--in", str(FIXTURES / "grotzsch.g6"), "--json")
    assert code == 0 and json.loads(out)["palette_size"] <= 6
    code, out, _ = call("classify", "--in", str(FIXTURES / "grotzsch.g6"), "--json")
    assert json.loads(out)["classes"]["crown-p3p2"]


def test_detect_and_perfect():
    code, out, _ = call("detect", "--pattern", "claw", "--json", stdin="Cs\n")
    assert code == 0 and json.loads(out)["embedding"] == [0, 1, 2, 3]
    code, out, _ = call("detect", "--pattern", "claw", "--all", "--json", stdin="Cs\n")
    assert json.loads(out)["count"] == 6
    code, out, _ = call("perfect", "--in", str(FIXTURES / "c7-complement.g6"), "--json")
    doc = json.loads(out)
    assert code == 0 and not doc["perfect"] and doc["witness"]["kind"] == "antihole"


def test_layered_colour():
    code, out, _ = call("color", "--scheme", "layered", "--h", "claw", "--json", stdin="Cs\n")
    assert code == 0 and json.loads(out)["problems"] == []


def test_hole_attachment_verify():
    # C7 plus u on edge {3,4} plus pendant v
    from crownfree.families import cycle
    from crownfree.graph import Graph, write_graph6

    g = Graph.from_edges(9, cycle(7).edges() + [(7, 3), (7, 4), (7, 8)])
    code, out, _ = call("verify", "--scheme", "hole-attachment", "--json", stdin=write_graph6(g) + "\n")
    inst = json.loads(out)["instances"]
    assert code == 0 and any(i.get("branch") == "bad-edge" for i in inst)


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("bogus",),
        ("color",),
        ("color", "--scheme", "nope"),
        ("detect", "--pattern", "claw", "--frobnicate"),
        ("color", "--scheme", "layered"),
        ("detect", "--pattern", "notapattern"),
        ("sweep", "--builtin", "9"),
        ("sweep", "--random", "1,2"),
    ],
)
def test_usage_errors_exit_one(argv):
    code, out, err = call(*argv, stdin="Cs\n")
    assert code == 1 and out == "" and err


def test_format_error_exit_one():
    code, _, err = call("classify", stdin="@\nD!!\n")
    assert code == 1 and "line 2" in err


def test_not_in_class_exit_one():
    # C5 then P5; P5 is outside the class
    code, out, err = call("color", "--scheme", "crown-p5", stdin="Dhc\nDhC\n")
    assert code == 1 and "NotInClass" in err


def test_failed_claim_exits_two(monkeypatch):
    import crownfree.cli as cli
    from crownfree.structure import StructureReport

    def failing(g, claw=None, check_class=True):
        rep = StructureReport(claw.image)
        rep.add("t2-1", False, "planted", [("adjacent", claw.image[0], claw.image[1], True)])
        return rep

    monkeypatch.setattr(cli, "verify_structure_fork", failing)
    code, out, _ = call("verify", "--scheme", "fork-structure", "--in", str(FIXTURES / "k33.g6"))
    assert code == 2 and "FAIL t2-1" in out


def test_sweep_violation_exits_two(monkeypatch):
    import crownfree.harness as harness
    from crownfree.certificate import BoundFunction

    monkeypatch.setattr(harness, "CROWN_P3P2_CONJECTURED", BoundFunction("zero", "0", lambda w: 0))
    code, out, _ = call("sweep", "--builtin", "3", "--class", "crown-p3p2", "--scheme", "p3p2-conjecture", "--json")
    doc = json.loads(out)
    assert code == 2 and len(doc["violations"]) == doc["checked"] > 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "crownfree", "classify", "--json"], input="Dhc\n", capture_output=True, text=True
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["graph6"] == "Dhc"
