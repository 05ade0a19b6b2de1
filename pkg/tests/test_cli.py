import json
import subprocess
import sys

import pytest

from oideal.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_height(capsys):
    code, out, _ = run(capsys, "height", "--ring", "QQ[a,b,c,d]", "--ideal", "a,b,c,d")
    assert code == 0 and json.loads(out) == {"height": 4}


def test_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "ex3.10", "--alpha", "2")
    assert code == 0 and json.loads(out)["status"] == "PASS"


@pytest.fixture
def module_file(tmp_path):
    path = tmp_path / "N.json"
    path.write_text(json.dumps({
        "ring": "QQ[a,b,c,d]", "generators": 4,
        "relations": [["b*c - a*d"], ["c^3 - b*d^2"], ["a*c^2 - b^2*d"], ["b^3 - a^2*c"]],
    }))
    return path


def test_order_ideal_both_routes(capsys, module_file):
    code, out, _ = run(capsys, "order-ideal", "--module", f"@{module_file}",
                       "--element", "[0,0,1,0]", "--route", "both")
    data = json.loads(out)
    assert code == 0 and data["agree"]
    assert sorted(data["ideal"]) == sorted(data["row_ideal"]) == ["a", "b", "c", "d"]
    assert data["height"] == 4


def test_order_ideal_request(capsys, module_file, tmp_path):
    req = tmp_path / "req.json"
    req.write_text(json.dumps({"module": f"@{module_file}", "element": ["0", "0", "1", "0"],
                               "route": "row_ideal"}))
    code, out, _ = run(capsys, "order-ideal", "--request", f"@{req}")
    assert code == 0 and json.loads(out)["route"] == "row_ideal"


@pytest.mark.parametrize("argv, key, expected", [
    (["gb", "--ring", "QQ[x,y]", "--ideal", "x,y"], "polys", ["y", "x"]),
    (["nf", "--ring", "QQ[x,y]", "--ideal", "x,y", "--poly", "1"], "normal_form", "1"),
    (["eliminate", "--ring", "QQ[x,y,z]", "--ideal", "y-x^2, z-x^3", "--k", "1"], "polys", ["y^3 - z^2"]),
    (["colon", "--ring", "QQ[x,y]", "--ideal", "x^2,x*y", "--by", "y"], "polys", ["x"]),
    (["radical-member", "--ring", "QQ[x,y]", "--ideal", "x^2", "--poly", "x"], "radical_member", True),
    (["dim", "--ring", "QQ[x,y,z]", "--ideal", "x*y"], "dim", 2),
    (["spread", "--ring", "QQ[x,y]", "--ideal", "x^2,x*y,y^2"], "analytic_spread", 2),
    (["fitting", "--ring", "QQ[x,y]", "--matrix", "[[x,0],[0,y]]", "--j", "0"], "polys", ["x*y"]),
    (["trace", "--ring", "QQ[x,y]", "--matrix", "[[x],[y]]"], "polys", ["y", "x"]),
])
def test_subcommands(capsys, argv, key, expected):
    code, out, _ = run(capsys, *argv)
    data = json.loads(out)
    assert code == 0
    if isinstance(expected, list):
        assert sorted(data[key]) == sorted(expected)
    else:
        assert data[key] == expected


def test_reduction_and_gs(capsys):
    code, out, _ = run(capsys, "reduction", "--ring", "QQ[x,y]", "--ideal", "x^2,x*y,y^2", "--sub", "x^2,y^2")
    assert json.loads(out) == {"reduction": {"confirmed": True, "n": 1}}
    code, out, _ = run(capsys, "gs-check", "--ring", "QQ[x,y]", "--ideal", "x,y")
    assert json.loads(out)["holds"]


def test_chern_range(capsys):
    code, out, _ = run(capsys, "chern", "--n", "2", "--to", "12")
    rows = json.loads(out)["chern"]
    assert [r["coefficient"] for r in rows] == [n % 2 for n in range(2, 13)]


def test_usage_errors(capsys):
    code, _, err = run(capsys, "gb", "--ring", "GF(4)[x]", "--ideal", "x")
    assert code == 2 and "non-prime" in err
    code, _, err = run(capsys, "height", "--ideal", "x")
    assert code == 2
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_resource_exit(capsys):
    code, out, _ = run(capsys, "gb", "--ring", "QQ[x,y,z]", "--ideal", "x^5*y-z^7, x*y^3-z^2, y^9-x",
                       "--max-pairs", "2")
    assert code == 3 and json.loads(out)["limit"] == "max_pairs"


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("OIDEAL_SEED", "7")
    code, out, _ = run(capsys, "verify", "intro-chern")
    assert code == 0 and json.loads(out)["seed"] == 7


def test_pretty_goes_to_stderr(capsys):
    code, out, err = run(capsys, "height", "--ring", "QQ[x,y]", "--ideal", "x", "--pretty")
    assert json.loads(out) == {"height": 1} and "height" in err


def test_verify_writes_report(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "post4.1", "--out", str(path))
    assert code == 0 and json.loads(path.read_text())["status"] == "PASS"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "oideal", "height", "--ring", "QQ[x,y]", "--ideal", "x,y"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"height": 2}


@pytest.mark.slow
def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "all", "--seed", "42")
    assert code == 0
