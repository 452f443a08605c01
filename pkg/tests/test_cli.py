import io
import subprocess
import sys
import xml.etree.ElementTree as ET
from fractions import Fraction as F
from importlib import resources

import pytest

from pedalwords import __version__
from pedalwords.cli import main

PERIOD_2 = {
    "3/5,1/5,1/5", "9/13,3/13,1/13", "11/15,3/15,1/15", "8/15,5/15,2/15", "16/21,4/21,1/21",
    "2/5,2/5,1/5", "6/13,5/13,2/13", "10/15,4/15,1/15", "7/15,6/15,2/15", "11/21,8/21,2/21",
}


def run(*argv):
    out = io.StringIO()
    try:
        code = main(list(argv), out=out)
    except SystemExit as exc:
        code = exc.code
    return code, out.getvalue()


def fields(record):
    return dict(part.split("=", 1) for part in record.strip().split("\t"))


class TestCount:
    @pytest.mark.parametrize("argv, expected", [
        (["--k", "2", "--m", "2", "--n", "6"], "3966"),
        (["--m", "2", "--n", "6"], "3966"),
        (["--chi", "8"], "65040"),
        (["--chi", "8", "--method", "inclusion-exclusion"], "65040"),
        (["--phi", "3"], "56"),
        (["--k", "3", "--m", "1", "--n", "2"], "6"),
    ])
    def test_values(self, argv, expected):
        assert run("count", *argv) == (0, expected + "\n")

    @pytest.mark.parametrize("argv", [
        [], ["--chi", "3", "--phi", "3"], ["--m", "2"], ["--chi", "0"], ["--chi", "x"],
        ["--m", "2", "--n", "2", "--chi", "2"], ["--bogus"],
    ])
    def test_usage_errors(self, argv, capsys):
        code, _ = run("count", *argv)
        assert code == 2
        assert "usage" in capsys.readouterr().err


class TestEnumerate:
    def test_period_one(self):
        code, out = run("enumerate", "--n", "1")
        lines = out.splitlines()
        assert code == 0 and len(lines) == 2
        assert fields(lines[-1])["triple"] == "4/7,2/7,1/7"
        assert fields(lines[0]) == {"n": "1", "itinerary": "0", "word": "0/1", "triple": "1/3,1/3,1/3"}

    def test_period_two(self, capsys):
        code, out = run("enumerate", "--n", "2", "--format", "triples")
        assert code == 0
        assert set(out.split()) == PERIOD_2
        assert "n=2: 10 triangles" in capsys.readouterr().err

    @pytest.mark.parametrize("n", range(1, 6))
    def test_line_count_matches_count(self, n):
        _, counted = run("count", "--chi", str(n))
        code, out = run("enumerate", "--n", str(n), "--format", "words")
        assert code == 0
        assert len(out.splitlines()) == int(counted)

    def test_period_five(self):
        code, out = run("enumerate", "--n", "5")
        assert code == 0 and len(out.splitlines()) == 990

    def test_limit(self):
        code, out = run("enumerate", "--n", "4", "--limit", "3", "--format", "words")
        # itineraries 0001, 0002, 0003 through the column substitution
        assert code == 0 and out.splitlines() == ["0000/1110", "0001/1111", "0001/1110"]

    def test_bound(self):
        assert run("enumerate", "--n", "13")[0] == 2
        assert run("enumerate")[0] == 2
        assert run("enumerate", "--n", "3", "--format", "xml")[0] == 2


class TestMap:
    def test_heptacycle_triple(self):
        code, out = run("map", "--triple", "44/129,43/129,42/129", "--n", "7")
        assert code == 0
        assert fields(out) == {
            "n": "7", "itinerary": "0000032", "word": "0000011/1111101", "triple": "44/129,43/129,42/129",
        }

    def test_unsorted_triple_is_sorted(self):
        code, out = run("map", "--triple", "1/7,4/7,2/7", "--n", "1")
        assert code == 0 and fields(out)["itinerary"] == "3"

    def test_word(self):
        code, out = run("map", "--word", "01/10")
        assert code == 0
        rec = fields(out)
        assert rec["itinerary"] == "03"
        assert rec["triple"] in PERIOD_2

    def test_itinerary(self):
        code, out = run("map", "--itinerary", "0000032")
        assert code == 0 and fields(out)["word"] == "0000011/1111101"

    @pytest.mark.parametrize("argv, reason", [
        (["--word", "01/01"], "NotPrimitive"),
        (["--itinerary", "12"], "NotPrimitive"),
        (["--itinerary", "0303"], "NotPrimitive"),
        (["--triple", "44/129,43/129,42/129", "--n", "6"], "NotPeriodic"),
        (["--triple", "4/10,3/10,3/10", "--n", "3"], "NotPeriodic"),
        (["--triple", "1/2,1/4,1/4", "--n", "1"], "Degenerate"),
        (["--triple", "3/4,1/8,1/8", "--n", "2"], "Degenerate"),
        (["--triple", "1/2,1/2,0", "--n", "1"], "Degenerate"),
    ])
    def test_domain_rejections(self, argv, reason, capsys):
        code, _ = run("map", *argv)
        assert code == 1
        assert reason in capsys.readouterr().err

    @pytest.mark.parametrize("argv", [
        [],
        ["--word", "01/10", "--itinerary", "03"],
        ["--triple", "1/3,1/3,1/3"],
        ["--word", "012/101"],
        ["--word", "01/1"],
        ["--itinerary", "04"],
        ["--triple", "1/3,1/3", "--n", "1"],
        ["--triple", "1/2,1/2,1/2", "--n", "1"],
        ["--triple", "a,b,c", "--n", "1"],
    ])
    def test_usage_errors(self, argv):
        assert run("map", *argv)[0] == 2

    @pytest.mark.parametrize("n", range(1, 5))
    def test_records_roundtrip(self, n):
        _, out = run("enumerate", "--n", str(n))
        for line in out.splitlines():
            rec = fields(line)
            _, by_word = run("map", "--word", rec["word"])
            _, by_triple = run("map", "--triple", rec["triple"], "--n", str(n))
            assert fields(by_word) == rec == fields(by_triple)


class TestVerify:
    def test_builtin(self):
        code, out = run("verify", "--max-n", "10", "--expected", "builtin")
        assert code == 0
        assert out.splitlines()[-1] == "PASS: 10/10 rows"

    def test_fixture_file(self):
        path = resources.files("pedalwords").joinpath("data/tables.tsv")
        code, out = run("verify", "--max-n", "10", "--expected", str(path))
        assert code == 0 and "PASS: 10/10 rows" in out

    def test_deep(self):
        code, out = run("verify", "--max-n", "6", "--deep")
        assert code == 0
        row6 = [line.split() for line in out.splitlines() if line.split()[:1] == ["6"]][0]
        assert "3966" in row6 and row6[-1] == "PASS"

    def test_failing_fixture(self, tmp_path):
        path = tmp_path / "bad.tsv"
        path.write_text("chi\t3\t55\n")
        code, out = run("verify", "--max-n", "3", "--expected", str(path))
        assert code == 1 and "FAIL" in out

    def test_malformed_fixture(self, tmp_path):
        path = tmp_path / "bad.tsv"
        path.write_text("chi\tthree\t54\n")
        assert run("verify", "--max-n", "3", "--expected", str(path))[0] == 2
        assert run("verify", "--max-n", "3", "--expected", str(tmp_path / "missing"))[0] == 2
        assert run("verify")[0] == 2


class TestRender:
    def test_equilateral(self, tmp_path):
        path = tmp_path / "eq.svg"
        assert run("render", "--triple", "1/3,1/3,1/3", "--iterations", "3", "--out", str(path))[0] == 0
        root = ET.parse(path).getroot()
        polys = list(root.iter("{http://www.w3.org/2000/svg}polygon"))
        assert len(polys) == 4

    def test_heptacycle_stdout(self):
        code, out = run("render", "--triple", "44/129,43/129,42/129", "--iterations", "7")
        assert code == 0
        root = ET.fromstring(out)
        assert len(list(root.iter("{http://www.w3.org/2000/svg}polygon"))) == 8
        texts = [t.text for t in root.iter("{http://www.w3.org/2000/svg}text")]
        assert texts[0] == "T0 = (44/129,43/129,42/129)"
        assert texts[7] == "T7 = (44/129,43/129,42/129)"

    def test_right_triangle(self, capsys):
        assert run("render", "--triple", "1/2,1/4,1/4", "--iterations", "1")[0] == 1
        assert "iterate 0" in capsys.readouterr().err

    @pytest.mark.parametrize("argv", [
        ["--triple", "1/3,1/3,1/3"],
        ["--triple", "1/3,1/3,1/3", "--iterations", "17"],
        ["--triple", "1/2,1/2,0", "--iterations", "1"],
        ["--triple", "1/3,1/3,1/3", "--iterations", "-1"],
    ])
    def test_usage_errors(self, argv):
        assert run("render", *argv)[0] == 2


def test_no_command():
    assert run()[0] == 2


def test_version(capsys):
    assert run("--version")[0] == 0
    assert __version__ in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pedalwords.cli", "count", "--chi", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "54\n"
