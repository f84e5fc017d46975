from __future__ import annotations

import json
import subprocess
import sys

import pytest

from nckoszul.cli import main

from conftest import DATA


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_betti_z4_csv(capsys):
    code, out, err = run(capsys, "betti", DATA / "z4.pres")
    assert code == 0
    assert out.splitlines() == ["i,j,dim,certified", "0,0,1,true", "1,1,1,true", "2,4,1,true",
                                "3,5,1,true", "4,8,1,true", "5,9,1,true", "6,12,1,true"]
    assert "imax=6 jmax=12" in err and "field=32003" in err


def test_betti_json_has_bounds(capsys):
    code, out, _ = run(capsys, "betti", DATA / "z4.pres", "--json", "--imax", "3", "--jmax", "6", "--field", "QQ")
    data = json.loads(out)
    assert code == 0 and data["field"] == "QQ"
    assert data["bounds"] == {"imax": 3, "jmax": 6, "certified_degree": 6}
    assert [(e["i"], e["j"]) for e in data["entries"]] == [(0, 0), (1, 1), (2, 4), (3, 5)]


@pytest.mark.parametrize("method", ["linear", "scalar", "cobar"])
def test_betti_methods_agree(capsys, method):
    base = run(capsys, "betti", DATA / "xyx.pres", "--imax", "4", "--jmax", "8")[1]
    assert run(capsys, "betti", DATA / "xyx.pres", "--imax", "4", "--jmax", "8", "--method", method)[1] == base


def test_check_2d_quartic_fails(capsys):
    code, out, _ = run(capsys, "check", "2d", DATA / "quartic.pres", "--d", "4")
    data = json.loads(out)
    assert code == 1
    assert data["witness"] == {"i": 3, "j": 6}
    assert data["bounds"] == {"imax": 6, "jmax": 12} and data["field"] == "32003"


def test_check_refusal_exit_code(capsys):
    code, out, _ = run(capsys, "check", "dkoszul", DATA / "comm_xyx.pres", "--d", "3")
    assert code == 2 and json.loads(out)["result"] == "refused"


def test_check_holds(capsys):
    assert run(capsys, "check", "koszul", DATA / "comm.pres")[0] == 0
    assert run(capsys, "check", "dkoszul", DATA / "z4.pres")[0] == 0


def test_gb_quartic(capsys):
    code, out, _ = run(capsys, "gb", DATA / "quartic.pres", "--json")
    data = json.loads(out)
    assert code == 0 and data["complete"]
    assert sorted(data["basis"]) == sorted(["x*a", "a*z", "a*y", "y^2*z^2", "x^2*y^2 + a^4"])


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", DATA / "comm.pres", "--jmax", "3")
    assert code == 0 and out.splitlines() == ["j,dim", "0,1", "1,2", "2,3", "3,4"]


def test_gr_and_anngraph(capsys, tmp_path):
    code, out, _ = run(capsys, "gr", DATA / "nfg_A.pres")
    assert code == 0 and "a*b*c" in out and "c*d*a" in out
    dot = tmp_path / "g.dot"
    code, out, _ = run(capsys, "anngraph", DATA / "nfg_A.pres", "--gr", "--dot", dot)
    assert code == 0 and '"cd" -> "ab" [style=dotted];' in dot.read_text()
    code, _, err = run(capsys, "anngraph", DATA / "nfg_A.pres")
    assert code == 2 and "monomial" in err


def test_modres_methods_agree(capsys, tmp_path):
    a = run(capsys, "modres", DATA / "quartic.pres", "--imax", "3", "--jmax", "8")
    assert a[0] == 0 and "1,4,2,true" in a[1]
    g2 = "field 32003\ngenerators x y\nrelations\n[g2]\nx*y\n[gd]\ny^3\n"
    path = tmp_path / "mono.pres"
    path.write_text(g2)
    outs = [run(capsys, "modres", path, "--method", m, "--jmax", "8")[1] for m in ("graph", "linear")]
    assert outs[0] == outs[1]


def test_freeprod(capsys):
    code, out, _ = run(capsys, "freeprod", DATA / "nfg_A.pres", DATA / "z4.pres",
                       "--verify", "--imax", "5", "--jmax", "10")
    data = json.loads(out)
    assert code == 0 and data["hilbert_identity"] and data["betti_prediction_matches"]
    code, out, _ = run(capsys, "freeprod", DATA / "z4.pres", DATA / "z4.pres")
    assert "generators z z'" in out


def test_certify_quartic(capsys):
    code, out, _ = run(capsys, "certify-k2", DATA / "quartic.pres", "--d", "4", "--imax", "4", "--jmax", "8")
    data = json.loads(out)
    assert code == 2 and "not a Gröbner basis" in data["notes"][0]


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.pres"
    bad.write_text("generators x\nrelations\nx*q\n")
    code, _, err = run(capsys, "betti", bad)
    assert code == 4 and "line 3, column 3" in err
    assert run(capsys, "betti", tmp_path / "missing.pres")[0] == 4


def test_undecided_exit(capsys):
    code, out, _ = run(capsys, "betti", DATA / "quartic.pres", "--method", "cobar", "--budget", "100",
                       "--imax", "3", "--jmax", "5", "--json")
    assert code == 3 and {"i": 3, "j": 5} in json.loads(out)["undecided"]


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "nckoszul", "betti", str(DATA / "z4.pres"), "--imax", "2"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and "2,4,1,true" in r.stdout
