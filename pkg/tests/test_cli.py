import io
import json
import subprocess
import sys
from pathlib import Path
from xml.etree import ElementTree

import pytest

from examples_data import LUK5_21, MOTZKIN_25, TANDEM5_21, YAMANOUCHI_25
from tandemwalks import oracle
from tandemwalks.cli import run_cli

GOLDEN = Path(__file__).parent / "golden"


def cli(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_transform_three_step_example():
    code, out, _ = cli(["transform", "--three-step", "--forward"], MOTZKIN_25 + "\n")
    assert code == 0 and out == YAMANOUCHI_25 + "\n"
    code, out, _ = cli(["transform", "--three-step", "--backward"], YAMANOUCHI_25 + "\n")
    assert code == 0 and out == MOTZKIN_25 + "\n"


def test_backward_three_step_accepts_compass_names():
    code, out, _ = cli(["transform", "--three-step", "--backward"], "N SE W\n")
    assert out == "U L D\n"


def test_transform_p5_backward():
    code, out, _ = cli(["transform", "--p", "5", "--backward"], TANDEM5_21 + "\n")
    assert code == 0 and out == LUK5_21 + "\n"


def test_transform_error_names_position():
    code, out, err = cli(["transform", "--three-step", "--forward"], "D\n")
    assert code == 1
    assert "DE at position 1" in err


def test_transform_non_member_warning_and_strict():
    code, out, err = cli(["transform", "--p", "2", "--forward"], "2\n")
    assert code == 0 and "warning" in err and out == "2\n"
    code, _, err = cli(["transform", "--p", "2", "--forward", "--strict"], "2\n")
    assert code == 1


def test_transform_bad_token():
    code, _, err = cli(["transform", "--p", "2"], "3\n")
    assert code == 1 and "position 1" in err


@pytest.mark.parametrize("argv", [
    ["transform"],
    ["transform", "--p", "2", "--sym"],
    ["transform", "--p", "0"],
    ["transform", "--p", "2", "--forward", "--backward"],
    ["frobnicate"],
    [],
    ["trace", "--sym", "--augmented", "u", "d"],
])
def test_bad_invocation(argv):
    code, _, err = cli(argv)
    assert code == 2 and "usage error" in err


@pytest.mark.parametrize("corpus,model", [
    ("corpus_motzkin.txt", ["--three-step"]),
    ("corpus_motzkin.txt", ["--p", "1"]),
    ("corpus_bicol.txt", ["--sym"]),
    ("corpus_luk3.txt", ["--p", "3"]),
])
def test_pipe_identity(corpus, model):
    text = (GOLDEN / corpus).read_text()
    code, mid, err = cli(["transform", *model, "--forward"], text)
    assert code == 0 and not err
    code, back, err = cli(["transform", *model, "--backward"], mid)
    assert code == 0 and not err
    assert back == text


def test_trace_golden_p5():
    code, out, _ = cli(["trace", "--p", "5", "--augmented", "--tsv", *LUK5_21.split()])
    assert code == 0
    assert out.encode() == (GOLDEN / "trace_p5_augmented.tsv").read_bytes()


def test_trace_backward_has_same_counters():
    _, fwd, _ = cli(["trace", "--p", "5", *LUK5_21.split()])
    _, bwd, _ = cli(["trace", "--p", "5", "--backward", *TANDEM5_21.split()])
    def cols(text, in_col, out_col):
        rows = [line.split("\t") for line in text.splitlines()[1:]]
        return [(r[in_col], r[2], r[3], r[4], r[out_col]) for r in rows]
    # the backward table swaps the in/out columns only
    assert cols(fwd, 1, 5) == cols(bwd, 5, 1)


def test_trace_json_and_params():
    code, out, _ = cli(["trace", "--p", "2", "--json", "--params", "lambda,ybar", "2", "D", "D"])
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 4
    assert rows[1]["tr"] == "T1" and rows[1]["v"] == 2 and rows[1]["H"] == []
    assert [r["ybar"] for r in rows] == [0, 2, 1, 0]
    code, _, err = cli(["trace", "--p", "2", "--params", "bogus", "2", "D", "D"])
    assert code == 2


def test_trace_sym_and_stdin():
    code, out, _ = cli(["trace", "--sym"], "# comment\nu d\n")
    lines = out.splitlines()
    assert lines[0] == "i\tin\ttr\th\tv\tout"
    assert lines[2].split("\t")[2] == "U1'"


def test_raise_general_trace():
    code, out, _ = cli(["raise", "--algo", "general", "--p", "5", "--trace"], TANDEM5_21 + "\n")
    lines = out.splitlines()
    assert lines[0] == "1\ta\t0^5_0"
    assert lines[-1] == LUK5_21


def test_raise_eu_and_errors():
    code, out, _ = cli(["raise", "--algo", "eu"], "N N SE N N SE W W SE\n")
    assert out == "L U L U U L D D D\n"
    code, _, err = cli(["raise", "--algo", "raising"], "SE\n")
    assert code == 1 and "position 1" in err
    code, _, _ = cli(["raise", "--algo", "eu", "--sym"], "N\n")
    assert code == 2


def test_raise_sym():
    code, out, _ = cli(["raise", "--algo", "raising", "--sym"], "E NW\n")
    assert out == "u d\n"


def test_check_and_count():
    code, out, _ = cli(["check", "--alphabet", "luk", "--p", "1"], "U D\nD U\n")
    assert out.splitlines() == ["U D\tlukasiewicz(1)=yes motzkin=yes",
                                "D U\tlukasiewicz(1)=no motzkin=no"]
    code, out, _ = cli(["count", "--n", "4", "--sym"])
    assert out.splitlines()[-1] == "4\t9\t144\t9\t144"
    code, out, _ = cli(["count", "--n", "3", "--p", "3"])
    assert out.splitlines()[-1] == "3\t5\t5"


def test_pda_dump_and_run():
    code, out, _ = cli(["pda", "dump", "--three-step"])
    assert len(out.splitlines()) == 11
    code, out, _ = cli(["pda", "run", "--three-step"], "U D\nU\nD\n")
    assert out.splitlines() == ["N SE\taccepted", "N\tnot accepted", "D\trejected at position 1"]
    code, out, _ = cli(["pda", "dump", "--sym"])
    assert len(out.splitlines()) == 22
    code, _, _ = cli(["pda", "dump"])
    assert code == 2


def test_verify_exit_codes(monkeypatch):
    code, out, _ = cli(["verify", "--suite", "suffix", "--p", "2", "--n-max", "5"])
    assert code == 0 and "PASS" in out

    def broken(p, n_max):
        report = oracle.VerificationReport("broken")
        report.fail("w", "x", "y")
        return report
    monkeypatch.setattr(oracle, "verify_suffix_bounds", broken)
    code, out, _ = cli(["verify", "--suite", "suffix", "--p", "2"])
    assert code == 3 and "FAIL" in out


def test_render_svg_is_well_formed():
    code, out, _ = cli(["render", "--alphabet", "yam", "--svg", *YAMANOUCHI_25.split()])
    root = ElementTree.fromstring(out)
    ns = "{http://www.w3.org/2000/svg}"
    lines = root.findall(f"{ns}line")
    arrows = [l for l in lines if l.get("marker-end")]
    assert len(arrows) == 25
    assert root.find(f"{ns}circle") is not None
    assert int(root.get("width")) % 24 == 0


def test_render_ascii():
    code, out, _ = cli(["render", "--alphabet", "tandem", "--ascii", "N", "SE"])
    assert out == "* .\no @\n"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tandemwalks", "transform", "--p", "5"],
                          input=LUK5_21 + "\n", capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == TANDEM5_21 + "\n"
