import json

import pytest

from syzygy.cli import main

PENTAGON = """\
vars: w x y z
w^2 - x*z
w*x - y*z
x^2 - w*y
x*y - z^2
y^2 - w*z
"""

NOT_A_BASIS = """\
vars: x y
x^2 - y
x
"""

MATRIX_FILE = """\
vars: x y z w
rows: 0 0
x, y, 0
0, x, z
"""


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


def test_gb_complete_and_check(tmp_path, capsys):
    f = write(tmp_path, "pentagon.txt", PENTAGON)
    assert main(["gb", f, "--check-only"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["is_groebner"] is True
    assert payload["divisions"] == 6

    out = tmp_path / "gb.json"
    assert main(["gb", f, "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert len(data["basis"]) == 5
    assert data["colon_table"][3] == ["w", "x"]


def test_gb_check_only_failure_exit_code(tmp_path):
    f = write(tmp_path, "bad.txt", NOT_A_BASIS)
    assert main(["gb", f, "--check-only", "--order", "lex", "--field", "q"]) == 1


def test_divide_command(tmp_path, capsys):
    f = write(tmp_path, "dividend.txt", "vars: x y z\nx^2*y\n")
    by = write(tmp_path, "divisors.txt", "vars: x y z\nx^2 - z\ny - 1\n")
    rc = main(["divide", f, "--by", by, "--order", "lex", "--field", "q"])
    assert rc == 0
    text = capsys.readouterr().out
    assert "rem    : z" in text


def test_resolve_command_polynomials(tmp_path, capsys):
    f = write(tmp_path, "pentagon.txt", PENTAGON)
    out = tmp_path / "res.json"
    assert main(["resolve", f, "--minimal", "--betti", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["ranks"] == [1, 5, 5, 1]
    assert data["numerator"] == [1, 0, -5, 5, 0, -1]


def test_resolve_command_matrix(tmp_path):
    f = write(tmp_path, "matrix.txt", MATRIX_FILE)
    out = tmp_path / "res.json"
    assert main(["resolve", f, "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["ranks"][0] == 2


def test_hilbert_command(tmp_path, capsys):
    f = write(tmp_path, "pentagon.txt", PENTAGON)
    rc = main(["hilbert", f, "--function", "0..6", "--polynomial"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["numerator"] == [1, 0, -5, 5, 0, -1]
    assert payload["function"] == [[n, v] for n, v in
                                   zip(range(7), [1, 4, 5, 5, 5, 5, 5])]
    assert payload["degree_genus"] is None


def test_examples_command(capsys):
    assert main(["examples", "--id", "all"]) == 0
    out = capsys.readouterr().out
    assert "5gon: ok" in out and "minors35: ok" in out


def test_gorenstein_command_byte_identical(tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert main(["gorenstein", "--g", "5", "--trials", "25", "--seed", "7",
                 "--out", str(out1)]) == 0
    assert main(["gorenstein", "--g", "5", "--trials", "25", "--seed", "7",
                 "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert (tmp_path / "a.csv").exists()
    assert (tmp_path / "a.png").exists()
    csv_text = (tmp_path / "a.csv").read_text()
    assert csv_text.splitlines()[0] == "cubic_generators,occurrences"


def test_curve_command_writes_report_files(tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = main(["curve", "--d", "11", "--g", "10", "--seed", "1",
               "--attempts", "2", "--out", str(out)])
    assert rc == 0
    data = json.loads(out.read_text())
    assert data["report"]["degree"] == 11
    assert data["report"]["genus"] == 10
    assert (tmp_path / "report.csv").exists()
    assert (tmp_path / "report.png").exists()
    assert (tmp_path / "report_betti.png").exists()
    header = (tmp_path / "report.csv").read_text().splitlines()[0]
    assert header == "n,h1_ideal,h0_curve,h0_ambient,h0_ideal"


def test_curve_command_usage_error():
    assert main(["curve", "--d", "9", "--g", "9"]) == 2


def test_curve_command_exhaustion_exit_code():
    # zero attempts exhausts immediately and deterministically
    assert main(["curve", "--d", "11", "--g", "10", "--attempts", "0"]) == 3


def test_missing_file_is_usage_error(tmp_path):
    assert main(["gb", str(tmp_path / "nope.txt")]) == 2


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
