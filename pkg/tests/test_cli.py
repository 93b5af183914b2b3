import io
import json
import subprocess
import sys

import pytest

from giftex.cli import main, read_table
from giftex.core import build_e_table, g_sequence


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_table_g():
    code, text = run("table", "--kind", "G", "--sigma", "2", "--nmax", "5")
    assert code == 0
    assert [line.split(",")[1] for line in text.splitlines()[1:]] == ["1", "3", "31", "842", "45296", "4061871"]


def test_table_e_rows():
    code, text = run("table", "--kind", "E", "--sigma", "1", "--nmax", "2")
    vals = read_table(text, "csv")
    rows = [[vals.get((n, k), 0) for k in range(2 * n + 1)] for n in range(3)]
    assert rows == [[1], [0, 1, 1], [0, 0, 1, 3, 3]]
    assert text.splitlines()[0] == "n,k,value"


def test_table_h():
    code, text = run("table", "--kind", "H", "--sigma", "1", "--nmax", "3")
    assert read_table(text, "csv") == {(1,): 1, (2,): 4, (3,): 42}


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_table_round_trip(fmt):
    code, text = run("table", "--kind", "E", "--sigma", "3", "--nmax", "7", "--format", fmt)
    t = build_e_table(3, 7)
    assert read_table(text, fmt) == {(n, k): v for n, k, v in t.items()}
    code, text = run("table", "--kind", "G", "--sigma", "8", "--nmax", "6", "--format", fmt)
    assert read_table(text, fmt) == {(n,): v for n, v in enumerate(g_sequence(8, 6))}


def test_json_numbers_are_strings():
    code, text = run("table", "--kind", "G", "--sigma", "8", "--nmax", "5", "--format", "json")
    doc = json.loads(text)
    assert doc["kind"] == "G" and doc["sigma"] == "8"
    assert doc["entries"][5]["value"] == "476872353039366288373555323"
    assert all(isinstance(v, str) for e in doc["entries"] for v in e.values())


def test_deterministic_output():
    assert run("table", "--kind", "E", "--sigma", "2", "--nmax", "6") == run("table", "--kind", "E", "--sigma", "2",
                                                                             "--nmax", "6")


def test_usage_errors():
    assert run("table", "--kind", "X", "--sigma", "1", "--nmax", "2")[0] == 2
    assert run("table", "--kind", "G", "--sigma", "-1", "--nmax", "2")[0] == 2
    assert run("verify", "--name", "nope")[0] == 2
    assert run("verify", "--name", "G3e", "--nmax", "3")[0] == 2
    assert run("oracle", "--sigma", "1", "--gifts", "0")[0] == 2
    assert run()[0] == 2


def test_verify_pass_and_fail():
    code, text = run("verify", "--name", "G1d", "--nmax", "200")
    assert code == 0 and "PASS" in text
    code, text = run("verify", "--name", "E3app", "--nmax", "20")
    assert code == 0
    code, text = run("verify", "--name", "G4e", "--nmax", "30", "--format", "json")
    assert code == 1
    assert json.loads(text) == {"name": "G4e", "range": ["11", "30"], "pass": False, "first_failure": ["11"],
                                "residual": "3011671/243"}


def test_oracle():
    code, text = run("oracle", "--sigma", "1", "--gifts", "3")
    assert code == 0 and "count 7" in text and "match" in text
    code, text = run("oracle", "--sigma", "2", "--gifts", "4")
    assert code == 0 and "count 842" in text
    code, text = run("oracle", "--sigma", "0", "--gifts", "5")
    assert code == 0 and "count 1\n" in text


def test_oracle_emits_sequences():
    code, text = run("oracle", "--sigma", "1", "--gifts", "3", "--emit-sequences")
    lines = text.splitlines()
    assert "1213  ->  13, 2" in lines
    assert sum(1 for line in lines if "->" in line) == 7


def test_oracle_budget():
    assert run("oracle", "--sigma", "2", "--gifts", "6", "--budget", "1000")[0] == 3


def test_mine():
    code, text = run("mine", "--target", "G", "--sigma", "1", "--depth", "2", "--degree", "1")
    doc = json.loads(text)
    assert code == 0 and doc["shifts"] == ["1", "2"]
    assert doc["coefficients"][0] == {"numerators": ["-1", "2"], "denominator": "1"}
    code, text = run("mine", "--target", "G", "--sigma", "0", "--depth", "1", "--degree", "0")
    assert json.loads(text)["coefficients"] == [{"numerators": ["1"], "denominator": "1"}]
    code, text = run("mine", "--target", "E", "--sigma", "2", "--depth", "4", "--degree", "2")
    assert code == 0 and len(json.loads(text)["shifts"]) == 8


def test_mine_outcomes():
    assert run("mine", "--target", "G", "--sigma", "2", "--depth", "3", "--degree", "2") == (1, "none\n")
    code, text = run("mine", "--target", "G", "--sigma", "1", "--depth", "4", "--degree", "1")
    assert code == 1 and text.startswith("non-unique")
    assert run("mine", "--target", "E", "--sigma", "2", "--depth", "4", "--degree", "2", "--train", "4:4")[0] == 2
    assert run("mine", "--target", "E", "--sigma", "3", "--depth", "7", "--degree", "3")[0] == 3
    assert run("mine", "--target", "E", "--sigma", "1", "--depth", "2", "--degree", "1", "--train", "5:2")[0] == 2


def test_fixtures_command(tmp_path):
    code, text = run("fixtures")
    assert code == 1
    (line,) = [x for x in text.splitlines() if x.startswith("- ")]
    assert line.startswith("- E_1(8,13)") and line.endswith("printed 945945, computed 270270")
    assert "684/685 fixture values match; 0 cross-check failures" in text
    snap = tmp_path / "g1.txt"
    snap.write_text("0 1\n1 2\n2 7\n3 37\n")
    code, text = run("fixtures", "--oeis-snapshot", str(snap), "--sigma", "1")
    assert "snapshot: 4/4 values match G_1" in text
    assert run("fixtures", "--oeis-snapshot", str(snap))[0] == 2
    assert run("fixtures", "--oeis-snapshot", str(tmp_path / "missing"), "--sigma", "1")[0] == 2


def test_check_commands():
    assert run("celine", "--nmax", "8", "--collapse-nmax", "10")[0] == 0
    assert run("phi", "--nmax", "4")[0] == 0
    assert run("structure")[0] == 0
    assert run("structure", "--name", "G2d")[0] == 2
    code, text = run("asym", "--sigma", "1", "--n", "4", "--precision", "5")
    assert text == "sigma=1 n=4 ratio=2.53333\n"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "giftex", "table", "--kind", "G", "--sigma", "1", "--nmax", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "n,value\n0,1\n1,2\n2,7\n3,37\n"
