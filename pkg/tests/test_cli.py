import io
import json
import subprocess
import sys

import pytest

from hexachrome import atlas
from hexachrome.cli import main
from hexachrome.formats import write_edge_list, write_graph6


def run(argv, stdin="", monkeypatch=None):
    out = io.StringIO()
    if monkeypatch is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out=out)
    text = out.getvalue()
    return code, (json.loads(text) if text.strip().startswith("{") else text)


@pytest.fixture
def cli(monkeypatch):
    def call(argv, stdin=""):
        return run(argv, stdin, monkeypatch)
    return call


def test_classify_k4(cli):
    code, rep = cli(["classify"], "C~\n")
    assert code == 0
    assert rep["schema_version"] == 1
    assert rep["k4_free"] is False and rep["witnesses"]["k4_free"] == [0, 1, 2, 3]


def test_classify_grotzsch_from_file(cli, tmp_path):
    p = tmp_path / "g.txt"
    p.write_text(write_edge_list(atlas.grotzsch()))
    code, rep = cli(["classify", str(p)])
    assert code == 0 and rep["n"] == 11
    assert all(rep[f] for f in ("p6_free", "p2up3_free", "diamond_free", "k4_free", "bull_free"))


@pytest.mark.parametrize("stdin", ["", "   \n"])
def test_empty_input_is_usage_error(cli, stdin):
    assert cli(["classify"], stdin)[0] == 2


def test_parse_error_exit_2(cli, capsys):
    code, _ = cli(["classify", "--format", "g6"], "C\n")
    assert code == 2
    assert "hexachrome:" in capsys.readouterr().err
    assert cli(["classify"], "3\n0 5\n")[0] == 2
    assert cli(["classify", "/nonexistent/file"])[0] == 2


def test_color_auto_schlafli(cli):
    code, rep = cli(["color"], write_graph6(atlas.schlafli_complement()))
    assert code == 0
    assert rep["colors_used"] <= 6 and rep["verified"] is True
    assert rep["trace"][0]["theorem"] == "thm5"
    assert {c["color"] for c in rep["trace"][0]["classes"]} == set(range(1, 7))


def test_color_thm4_clebsch_with_verify(cli):
    code, rep = cli(["color", "--method", "thm4", "--verify"], write_graph6(atlas.clebsch()))
    assert code == 0 and rep["colors_used"] <= 4 and rep["chi"] == 4 and rep["sandwich"]


def test_color_other_methods(cli):
    g6 = write_graph6(atlas.schlafli_complement())
    assert cli(["color", "--method", "thm3"], g6)[1]["trace"][0]["theorem"] == "thm2"
    assert cli(["color", "--method", "thm5"], g6)[1]["colors_used"] == 6
    code, rep = cli(["color", "--method", "oracle"], write_graph6(atlas.petersen()))
    assert code == 0 and rep["colors_used"] == 3 == rep["bound"]


def test_color_class_violation(cli):
    code, rep = cli(["color"], write_graph6(atlas.path(6)))
    assert code == 3
    assert rep["error"] == "class_violation" and len(rep["witness"]) == 6
    assert cli(["color", "--method", "thm4"], write_graph6(atlas.bull()))[0] == 3
    assert cli(["color", "--method", "thm5"], write_graph6(atlas.cycle(5)))[0] == 3


def test_color_trust_reaches_hypothesis_violation(cli):
    # K4 plus a pendant vertex: unchecked, the bull-free procedure finds no 5-hole and
    # then fails to 3-color it
    code, rep = cli(["color", "--trust", "--method", "thm4"], "DJ{\n")
    assert code == 4
    assert rep["error"] == "hypothesis_violation" and rep["graph6"] == "DJ{"
    assert rep["vertices"] == [0, 1, 2, 3, 4]
    assert cli(["color", "--method", "thm4"], "DJ{\n")[0] == 3


def test_chi_grotzsch(cli):
    code, rep = cli(["chi"], write_graph6(atlas.grotzsch()))
    assert code == 0 and rep["chi"] == 4 and rep["omega"] == 2 and len(rep["coloring"]) == 11


def test_chi_budget_exit_5(cli, monkeypatch):
    monkeypatch.setenv("HEXACHROME_BUDGET_MS", "0")
    code, rep = cli(["chi"], write_graph6(atlas.schlafli_complement()))
    assert code == 5 and rep["error"] == "oracle_undecided" and rep["budget_ms"] == 0


def test_gen(cli):
    assert cli(["gen", "diamond"])[1] == write_graph6(atlas.diamond()) + "\n"
    assert cli(["gen", "cycle", "5"])[1].strip() == write_graph6(atlas.cycle(5))
    assert cli(["gen", "nosuch"])[0] == 2


def test_verify(cli, tmp_path):
    g = tmp_path / "k3.g6"
    g.write_text("Bw\n")
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"coloring": [1, 2, 3]}))
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2, 1]")
    code, rep = cli(["verify", str(g), str(good)])
    assert code == 0 and rep["valid"] is True
    code, rep = cli(["verify", str(g), str(bad)])
    assert code == 1 and rep["valid"] is False and rep["edge"] == [0, 2]
    short = tmp_path / "short.json"
    short.write_text("[1]")
    assert cli(["verify", str(g), str(short)])[0] == 2


def test_verify_accepts_color_report(cli, tmp_path):
    g = tmp_path / "s.g6"
    g.write_text(write_graph6(atlas.schlafli_complement()))
    _, rep = cli(["color", str(g)])
    c = tmp_path / "c.json"
    c.write_text(json.dumps(rep))
    assert cli(["verify", str(g), str(c)])[0] == 0
    rep["coloring"][0] = rep["coloring"][next(iter(atlas.schlafli_complement().neighbors(0)))]
    c.write_text(json.dumps(rep))
    assert cli(["verify", str(g), str(c)])[0] == 1


def test_fuzz_zero_trials(cli):
    code, rep = cli(["fuzz", "--trials", "0"])
    assert code == 0 and rep["trials"] == 0 and rep["violation_count"] == 0


def test_fuzz_small_run_is_clean_and_reproducible(cli):
    argv = ["fuzz", "--seed", "1", "--n-max", "10", "--samples", "12"]
    code, rep = cli(argv)
    assert code == 0 and rep["violation_count"] == 0
    assert rep["max_colors"]["p6"] <= 6 and rep["max_colors"]["p6_bull_free"] <= 4
    assert cli(argv)[1] == rep


def test_fuzz_jobs_preserve_order(cli):
    argv = ["fuzz", "--seed", "2", "--n-max", "6", "--samples", "0"]
    assert cli(argv + ["--jobs", "2"])[1] == cli(argv)[1]


def test_reports_are_byte_identical():
    g6 = write_graph6(atlas.clebsch())
    outs = [subprocess.run([sys.executable, "-m", "hexachrome", "color"], input=g6, text=True,
                           capture_output=True, check=True).stdout for _ in range(2)]
    assert outs[0] == outs[1]


def test_gen_pipe_classify():
    gen = subprocess.run([sys.executable, "-m", "hexachrome", "gen", "diamond"], text=True,
                         capture_output=True, check=True)
    cls = subprocess.run([sys.executable, "-m", "hexachrome", "classify"], input=gen.stdout,
                         text=True, capture_output=True)
    assert cls.returncode == 0 and json.loads(cls.stdout)["diamond_free"] is False


def test_usage_errors_exit_2():
    r = subprocess.run([sys.executable, "-m", "hexachrome", "color", "--method", "bogus"],
                       input="C~", text=True, capture_output=True)
    assert r.returncode == 2
