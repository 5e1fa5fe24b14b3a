import json

import pytest

from orbitforge.cli import EXIT_CHECK, EXIT_INPUT, EXIT_OK, main

WORKED = ["--alpha", "12pi/7,12pi/7,10pi/7,12pi/7"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_twist_worked_example(capsys):
    code, out, _ = run(capsys, "twist", *WORKED, "--beta", "pi", "--gamma", "3pi/4", "--word", "t(1,2)")
    assert code == EXIT_OK
    assert "algebraic:   (pi, 7pi/4)" in out and "geometric:   (pi, 7pi/4)" in out
    dev = float(out.split("deviation:")[1].split()[0])
    assert dev < 1e-9


def test_twist_table_convention_skips_geometric(capsys):
    code, out, _ = run(capsys, "twist", *WORKED, "--beta", "pi", "--gamma", "3pi/4",
                       "--word", "t(1,2)", "--convention", "table")
    assert code == EXIT_OK and "geometric" not in out


def test_orbit_and_outputs(capsys, tmp_path):
    code, out, _ = run(capsys, "orbit", *WORKED, "--beta", "pi", "--gamma", "3pi/4",
                       "--out", str(tmp_path / "o.json"), "--csv", str(tmp_path / "o.csv"),
                       "--figure", str(tmp_path / "o.png"))
    assert code == EXIT_OK
    assert out.startswith("Finite, 7 points")
    assert len(json.loads((tmp_path / "o.json").read_text())["points"]) == 7
    assert (tmp_path / "o.csv").read_text().count("\n") == 8
    assert (tmp_path / "o.png").stat().st_size > 0


def test_verify_good_table(capsys):
    code, out, _ = run(capsys, "orbit", "--verify", "jester")
    assert code == EXIT_OK
    assert "Finite, 40 points" in out and "OK: 40/40" in out


def test_verify_table_with_misprints(capsys):
    code, out, _ = run(capsys, "orbit", "--verify", "bat")
    assert code == EXIT_CHECK
    assert "row 44" in out


def test_require_finite(capsys):
    code, out, _ = run(capsys, "orbit", "--alpha", "11pi/6,11pi/6,11pi/6,11pi/6", "--beta", "pi",
                       "--gamma", "0.3", "--max-points", "40", "--require-finite")
    assert code == EXIT_CHECK
    assert out.startswith("Exhausted")


@pytest.mark.parametrize("argv", [
    ["orbit", "--alpha", "12pi/7,12pi/7,12pi/7,12pi/7,12pi/7,10pi/7"],
    ["orbit", "--alpha", "12pi/7,12pi/7,10pi/7"],
    ["orbit", *WORKED, "--beta", "0.1", "--gamma", "0"],
    ["twist", *WORKED, "--word", "t(1,5)"],
    ["trigfield", "--N", "2"],
    ["fricke", "--traces", "3,0,0,0"],
    ["fricke", "--traces", "1,1"],
    ["orbit", "--verify", "no_such_table"],
])
def test_bad_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_INPUT
    assert err.startswith("error:")


def test_missing_alpha_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["twist"])
    assert exc.value.code == 2


def test_trigfield(capsys):
    code, out, _ = run(capsys, "trigfield", "--N", "7")
    assert code == EXIT_OK
    assert "degree 3, 9 angles" in out
    assert run(capsys, "trigfield", "--N", "7", "--check", "12pi/7")[1].rstrip().endswith("in Q(cos(pi/7))")
    assert "not in" in run(capsys, "trigfield", "--N", "7", "--check", "1/9")[1]


def test_fricke_traces(capsys):
    code, out, _ = run(capsys, "fricke", "--traces", "0,0,0,0")
    assert code == EXIT_OK
    assert "A B C D = 0 0 0 4" in out


def test_fricke_boundary_trace(capsys):
    code, out, _ = run(capsys, "fricke", "--traces", "2,0,0,0")
    assert code == EXIT_OK and "undefined" in out


def test_fricke_theta_file(capsys, tmp_path):
    f = tmp_path / "t.json"
    f.write_text(json.dumps([{"name": "11pi/6 x4", "theta": ["11/12", "11/12", "11/12", "1/12"]}]))
    code, out, _ = run(capsys, "fricke", "--theta-file", str(f))
    assert code == EXIT_OK and "11pi/6,11pi/6,11pi/6,11pi/6" in out


@pytest.mark.parametrize("model", ["halfplane", "disk"])
def test_render(capsys, tmp_path, model):
    path = tmp_path / "c.svg"
    code, out, _ = run(capsys, "render", *WORKED, "--model", model, "--out", str(path))
    assert code == EXIT_OK
    assert path.read_text().count('class="triangle"') == 2
