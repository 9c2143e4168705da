import json
import subprocess
import sys

import pytest

from redclass import __version__, cli
from redclass.errors import ConsistencyError


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "D4", "sc", "S3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["version"] == __version__
    assert doc["summary"]["total"] == 4 and len(doc["rows"]) == 3


def test_classify_flags_match_positionals(capsys):
    a = run(capsys, "classify", "D4", "sc", "S3", "--format", "json")[1]
    b = run(capsys, "classify", "--type", "D4", "--lattice", "sc", "--group", "S3",
            "--format", "json")[1]
    assert a == b


@pytest.mark.parametrize("fmt,marker", [("csv", "# total,4"), ("md", "|")])
def test_other_formats(capsys, fmt, marker):
    code, out, _ = run(capsys, "classify", "D4", "sc", "S3", "--format", fmt)
    assert code == 0 and marker in out


def test_deterministic_output(capsys):
    argv = ("classify", "A1*A1*A1", "sc", "S4", "--format", "json")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_out_file(capsys, tmp_path):
    target = tmp_path / "h2.json"
    code, out, _ = run(capsys, "h2", "--group", "S4", "--module", "C2^3",
                       "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["summary"]["h2"] == "C2^6"


def test_parse_error_exit_1(capsys):
    code, _, err = run(capsys, "classify", "D4x", "sc", "S3")
    assert code == 1 and "^" in err


def test_scope_error_exit_2(capsys):
    code, _, err = run(capsys, "classify", "A1*T1", "sc", "C2")
    assert code == 2 and "error" in err


def test_cap_exit_3(capsys):
    code, _, err = run(capsys, "classify", "A1", "sc", "S6")
    assert code == 3 and "cap" in err


def test_consistency_exit_4(capsys, monkeypatch):
    def boom(a, cfg):
        raise ConsistencyError("two counts disagree")
    monkeypatch.setitem(cli._DISPATCH, "classify", boom)
    assert run(capsys, "classify", "D4", "sc", "S3")[0] == 4


def test_bad_char_and_jobs(capsys):
    assert run(capsys, "classify", "D4", "sc", "S3", "--char", "4")[0] == 1
    assert run(capsys, "classify", "D4", "sc", "S3", "--jobs", "0")[0] == 1


def test_oracle_compare(capsys):
    code, out, _ = run(capsys, "oracle", "C2xC2", "S3", "--compare", "--format", "json")
    s = json.loads(out)["summary"]
    assert code == 0 and s["agrees_with_classify"] and s["classify_total"] == 4
    assert s["virtual_total"] == 4


def test_knutson_inverse_and_bound(capsys):
    code, out, _ = run(capsys, "knutson", "inverse", "--type", "A1", "--module", "[1]",
                       "--cutoff", "7", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["summary"]["passed"]
    code, out, _ = run(capsys, "knutson", "bound", "--type", "D4", "--group", "S3",
                       "--format", "json")
    assert code == 0 and json.loads(out)["summary"]["bound"] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "redclass", "h2", "--group", "C2",
                          "--module", "C2", "--format", "json"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["summary"]["h2"] == "C2"


def test_parsers():
    assert cli.parse_weight("[1,0,2]") == (1, 0, 2)
    assert cli.parse_module_char("[1,0]+2*[0,1]") == {(1, 0): 1, (0, 1): 2}
