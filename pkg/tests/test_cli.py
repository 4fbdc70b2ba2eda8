import io
import json
import subprocess
import sys

import pytest

from hgl.lab.cli import characteristic_warning, main, read_sequence_csv
from hgl.growth import FitError, LengthSequence, fit_quasipolynomial


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_list():
    code, out = run(["list"])
    assert code == 0 and "veronese-ext2" in out.split()


def test_scenario_csv():
    code, out = run(["scenario", "kodiyalam-tor"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,length"
    assert lines[1:9] == [f"{n},{n + 1}" for n in range(1, 9)]
    assert any(l.startswith("# fitted: period=1 degree=1") for l in lines)


def test_json_is_byte_identical():
    a = run(["scenario", "placekeeper-tor", "--format", "json"])[1]
    b = run(["scenario", "placekeeper-tor", "--format", "json"])[1]
    assert a == b
    d = json.loads(a)
    assert list(d) == sorted(d)
    assert d["fit"]["normalized_leading_coefficient"] == "1/1"
    assert "timing" not in d
    assert "timing" in json.loads(run(["scenario", "placekeeper-tor", "--format", "json",
                                       "--timing"])[1])


def test_run_file(tmp_path):
    f = tmp_path / "s.hgl"
    f.write_text("ring R vars x y\nideal m = x, y\n"
                 "functor tor i=0 first=quotient(m^n) second=R\nrange 1 8\n")
    code, out = run(["run", str(f), "--format", "json"])
    assert code == 0
    d = json.loads(out)
    assert d["sequence"]["values"] == [n * (n + 1) // 2 for n in range(1, 9)]
    assert d["fit"]["degree"] == 2


def test_run_infinite_length_is_an_error(tmp_path, capsys):
    f = tmp_path / "s.hgl"
    f.write_text("ring R vars x y\nideal I = x\n"
                 "functor tor i=0 first=quotient(I^n) second=R\nrange 1 4\n")
    code, _ = run(["run", str(f)])
    assert code != 0
    assert "n = 1" in capsys.readouterr().err


def test_run_syntax_error(tmp_path, capsys):
    f = tmp_path / "s.hgl"
    f.write_text("")
    assert run(["run", str(f)])[0] != 0
    assert "1:1" in capsys.readouterr().err


def test_fit_csv(tmp_path):
    f = tmp_path / "v.csv"
    vals = [1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36]
    f.write_text("n,length\n" + "".join(f"{n},{v}\n" for n, v in zip(range(2, 13), vals)))
    code, out = run(["fit", str(f), "--max-degree", "2"])
    assert code == 0
    assert "period=2 degree=2 normalized_leading_coefficient=1/2" in out


def test_fit_no_fit_still_succeeds(tmp_path):
    f = tmp_path / "e.csv"
    f.write_text("".join(f"{n},{2 ** n}\n" for n in range(1, 16)))
    code, out = run(["fit", str(f), "--max-period", "2"])
    assert code == 0 and "NO_FIT" in out


def test_fit_csv_errors():
    with pytest.raises(FitError):
        read_sequence_csv("1,2\n3,4\n")
    with pytest.raises(FitError):
        read_sequence_csv("n,length\n1,x\n")


def test_gb(tmp_path):
    f = tmp_path / "g.hgl"
    f.write_text("ring R vars x y z\nideal J = x^2 - y, x^3 - z\n")
    code, out = run(["gb", str(f)])
    assert code == 0
    assert out.splitlines()[0] == "J:"
    assert "  y^2 - x*z" in out.splitlines()


def test_characteristic_warning():
    rep = fit_quasipolynomial(LengthSequence(1, [n * (n + 1) // 2 for n in range(1, 12)]))
    assert characteristic_warning(3, rep) is None
    assert characteristic_warning(0, rep) is None
    quarter = fit_quasipolynomial(LengthSequence(2, [1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36]),
                                  6, 2)
    assert characteristic_warning(3, quarter) is None
    assert characteristic_warning(5, quarter) is None
    assert "characteristic" in characteristic_warning(
        3, fit_quasipolynomial(LengthSequence(1, [n ** 3 for n in range(1, 13)])))


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hgl", "list"], capture_output=True, text=True)
    assert r.returncode == 0 and "top-soc" in r.stdout
