import json

import pytest

from cccodes import codefile
from cccodes.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_then_verify_gf9(tmp_path, capsys):
    out = tmp_path / "gf9.txt"
    code, stdout, _ = run(capsys, "construct", "--p", 3, "--k", 2, "--q", 3, "--d0", 3,
                          "--composition", "3,3,3", "--out", out)
    assert code == 0
    assert "r=9" in stdout and "guaranteed_d=5" in stdout and "pigeonhole_bound=21" in stdout
    cf = codefile.read(out)
    assert len(cf.words) >= 21 and cf.guaranteed_d == 5 and cf.field == (3, 2) and cf.d0 == 3
    code, stdout, _ = run(capsys, "verify", "--code", out, "--expect-d", 5)
    assert code == 0 and "PASS" in stdout


def test_construct_gf8(tmp_path, capsys):
    out = tmp_path / "gf8.txt"
    code, stdout, _ = run(capsys, "construct", "--p", 2, "--k", 3, "--q", 3, "--d0", 2,
                          "--composition", "3,3,2", "--out", out)
    assert code == 0
    assert len(codefile.read(out).words) >= 70
    assert "guaranteed_d=none" in stdout


@pytest.mark.parametrize("argv,needle", [
    (["--p", 3, "--k", 1, "--q", 5, "--d0", 1, "--composition", "1,1,1,0,0"], "q <= r"),
    (["--p", 3, "--k", 2, "--q", 3, "--d0", 8, "--composition", "3,3,3"], "d0 must satisfy"),
    (["--p", 4, "--k", 1, "--q", 3, "--d0", 1, "--composition", "2,1,1"], "not prime"),
    (["--p", 3, "--k", 2, "--q", 3, "--d0", 2, "--composition", "3,3,3", "--modulus", "2,0,1"], "reducible"),
    (["--p", 3, "--k", 2, "--q", 3, "--d0", 2, "--composition", "3,3"], "entries"),
])
def test_construct_bad_input(tmp_path, capsys, argv, needle):
    code, _, err = run(capsys, "construct", *argv, "--out", tmp_path / "x.txt")
    assert code == 2 and needle in err


def test_construct_with_modulus(tmp_path, capsys):
    out = tmp_path / "m.txt"
    code, stdout, _ = run(capsys, "construct", "--p", 3, "--k", 2, "--q", 3, "--d0", 2,
                          "--composition", "3,3,3", "--modulus", "2,1,1", "--out", out)
    assert code == 0 and "modulus=2,1,1" in stdout


def test_bounds_outputs(capsys):
    code, stdout, _ = run(capsys, "bounds", "--q", 3, "--n", 9, "--d", 5, "--composition", "3,3,3",
                          "--field", "3^2", "--d0", 3)
    assert code == 0
    assert "lower theorem1 applicable=yes rational=560/27 value=21" in stdout
    assert "upper lemma4 applicable=yes rational=84 value=84" in stdout
    code, stdout, _ = run(capsys, "bounds", "--q", 3, "--n", 8, "--d", 3, "--composition", "3,3,2")
    assert "lower lemma1 applicable=yes rational=560/9 value=62" in stdout
    assert "lower lemma3 applicable=yes rational=560/9 value=62" in stdout
    code, stdout, _ = run(capsys, "bounds", "--q", 3, "--n", 7, "--d", 3, "--composition", "3,2,2",
                          "--format", "structured")
    data = json.loads(stdout)
    lemma2 = next(b for b in data["lower_bounds"] if b["name"] == "lemma2")
    assert lemma2["value"] == 30 and lemma2["rational"] == "30"


def test_bounds_inconsistent(capsys):
    code, _, err = run(capsys, "bounds", "--q", 3, "--n", 9, "--d", 3, "--composition", "3,3,2")
    assert code == 2 and "sums to 8" in err


def test_verify_failures(tmp_path, capsys):
    dup = tmp_path / "dup.txt"
    dup.write_text("# q=3\n# n=3\n# composition=1,1,1\n012\n012\n")
    assert run(capsys, "verify", "--code", dup)[0] == 2
    pair = tmp_path / "pair.txt"
    pair.write_text("# q=3\n# n=3\n# composition=1,1,1\n012\n021\n")
    code, stdout, _ = run(capsys, "verify", "--code", pair, "--expect-d", 3)
    assert code == 1 and "min_distance=2" in stdout
    wrong = tmp_path / "wrong.txt"
    wrong.write_text("# q=3\n# n=3\n# composition=1,1,1\n001\n")
    assert run(capsys, "verify", "--code", wrong)[0] == 2
    assert run(capsys, "verify", "--code", tmp_path / "missing.txt")[0] == 2


def test_oracle(tmp_path, capsys):
    out = tmp_path / "w.txt"
    code, stdout, _ = run(capsys, "oracle", "--q", 3, "--d", 3, "--composition", "1,1,1", "--out", out)
    assert code == 0 and stdout.startswith("A_3(3,3,[1,1,1])=3")
    assert len(codefile.read(out).words) == 3
    assert run(capsys, "verify", "--code", out, "--expect-d", 3)[0] == 0
    code, stdout, _ = run(capsys, "oracle", "--q", 2, "--d", 1, "--composition", "2,2")
    assert code == 0 and "=6" in stdout
    code, _, err = run(capsys, "oracle", "--q", 3, "--d", 3, "--composition", "4,4,4", "--cap", 100)
    assert code == 3 and "34650" in err


@pytest.mark.parametrize("p,k,d0,w", [(5, 1, 2, "2,2,1"), (7, 1, 3, "3,2,2"), (3, 2, 3, "3,3,3"), (3, 2, 2, "4,3,2")])
def test_construct_verify_expect_guarantee(tmp_path, capsys, p, k, d0, w):
    out = tmp_path / "c.txt"
    assert run(capsys, "construct", "--p", p, "--k", k, "--q", 3, "--d0", d0, "--composition", w, "--out", out)[0] == 0
    g = codefile.read(out).guaranteed_d
    assert run(capsys, "verify", "--code", out, "--expect-d", g)[0] == 0


def test_module_entry_point():
    import subprocess
    import sys
    res = subprocess.run([sys.executable, "-m", "cccodes", "oracle", "--q", "3", "--d", "3",
                          "--composition", "1,1,1"], capture_output=True, text=True)
    assert res.returncode == 0 and "=3" in res.stdout
