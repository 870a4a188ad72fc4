import json

import pytest

from zschur.cli import main
from zschur.orbits import parse_matrix


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_dims(capsys):
    status, out, _ = run(capsys, "dims", "3", "5")
    assert status == 0
    assert out.strip() == "dim=1287 dim_I=1242 dim_quotient=45 classes=11"


def test_product_prints_a_parseable_matrix_or_zero(capsys):
    status, out, _ = run(capsys, "product", "3", "5", "0,2,0;2,1,0;0,0,0", "1,1,0;0,2,1;0,0,0")
    assert status == 0
    text = out.strip()
    if text != "0":
        A = parse_matrix(text)
        assert sum(map(sum, A)) == 5
    status, out, _ = run(capsys, "product", "2", "2", "1,1;0,0", "1,0;0,1")
    assert out.strip() == "1,1;0,0"


def test_decompose(capsys):
    status, out, _ = run(capsys, "decompose", "4", "7", "2,0,3,2")
    assert out.strip() == "P[2,3,2] + P[5,2] + P[2,5] + P[7]"


def test_homdim(capsys):
    assert run(capsys, "homdim", "3", "5", "1,2,2", "1,3,1")[1].strip() == "8"
    assert run(capsys, "homdim", "3", "5", "1,2,2", "1,3,1", "--indec")[1].strip() == "2"


def test_cartan_csv_and_json(capsys):
    status, out, _ = run(capsys, "--format", "csv", "cartan", "3", "5")
    lines = out.splitlines()
    assert status == 0 and lines[0].startswith("class,")
    assert len(lines) == 11
    status, out, _ = run(capsys, "--format", "json", "cartan", "3", "5")
    data = json.loads(out)
    assert set(data) == {"command", "params", "results", "failures"}
    assert data["failures"] == []


def test_quiver_dot(capsys, tmp_path):
    path = tmp_path / "q.dot"
    status, _, _ = run(capsys, "quiver", "3", "5", "--dot", str(path))
    text = path.read_text()
    assert status == 0 and text.startswith("digraph")
    assert "style=dashed" in text


def test_output_is_deterministic(capsys):
    first = run(capsys, "ext", "3", "4")[1]
    assert run(capsys, "ext", "3", "4")[1] == first


def test_threads_do_not_change_output(capsys, monkeypatch):
    plain = run(capsys, "cartan", "3", "4")[1]
    monkeypatch.setenv("ZSCHUR_THREADS", "2")
    assert run(capsys, "cartan", "3", "4")[1] == plain


def test_verify_bundled(capsys):
    status, out, _ = run(capsys, "verify", "3", "2", "--relations", "s32")
    assert status == 0 and out.strip().endswith("ok")
    status, out, _ = run(capsys, "verify", "3", "5", "--relations", "b35")
    assert status == 1 and "no global rescaling" in out


def test_verify_rejects_wrong_size(capsys):
    status, _, err = run(capsys, "verify", "3", "4", "--relations", "s32")
    assert status == 2 and "zschur: error" in err


def test_check_small(capsys):
    status, out, _ = run(capsys, "check", "1", "3")
    assert status == 0
    status, out, _ = run(capsys, "--format", "json", "check", "3", "2")
    data = json.loads(out)
    assert status == 0 and data["failures"] == []


@pytest.mark.parametrize("argv", [
    ["product", "2", "2", "1,1;0", "1,0;0,1"],
    ["product", "2", "3", "1,1;0,0", "1,0;0,1"],
    ["homdim", "3", "5", "1,2", "1,3,1"],
    ["decompose", "3", "5", "x,1"],
])
def test_bad_input_exits_with_two(capsys, argv):
    status, _, err = run(capsys, *argv)
    assert status == 2 and err.startswith("zschur: error:")


def test_unknown_command_and_format_mismatch(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["--format", "dot", "dims", "3", "5"])


def test_size_cap(capsys):
    status, _, err = run(capsys, "--cap", "10", "dims", "3", "5")
    assert status == 2 and "cap" in err


def test_output_file(capsys, tmp_path):
    path = tmp_path / "d.txt"
    run(capsys, "-o", str(path), "dims", "2", "2")
    assert path.read_text().startswith("dim=")
