import json
import subprocess
import sys

import pytest

from egkeyring.cli import main
from egkeyring.generators import clique, cycle, wheel
from egkeyring.graph import format_edge_list


@pytest.fixture
def k7(tmp_path):
    path = tmp_path / "k7.txt"
    path.write_text(format_edge_list(clique(7)))
    return str(path)


@pytest.fixture
def c5(tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text(format_edge_list(cycle(5)))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_extract_json(capsys, k7):
    code, out, _ = run(capsys, "extract", "-i", k7, "-k", "6", "-r", "3", "--json")
    assert code == 0
    cert = json.loads(out)
    assert cert["kind"] == "keyring" and cert["verified"]
    assert (cert["center"], cert["cycle"], cert["leaves"]) == (0, [0, 1, 2], [3, 4, 5])


def test_extract_text(capsys, k7):
    code, out, _ = run(capsys, "extract", "-i", k7, "-k", "6", "-r", "3")
    assert code == 0 and "leaves: 3 4 5" in out and "edges: 6" in out


@pytest.mark.parametrize("args, expected", [
    (["-k", "6", "-r", "2"], 1),
    (["-k", "5", "-r", "2"], 1),
])
def test_extract_preconditions(capsys, k7, args, expected):
    assert run(capsys, "extract", "-i", k7, *args)[0] == expected


def test_extract_not_dense(capsys, c5):
    code, _, err = run(capsys, "extract", "-i", c5, "-k", "6", "-r", "3")
    assert code == 1 and "precondition" in err


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 0\n")
    assert run(capsys, "extract", "-i", str(bad), "-k", "6", "-r", "3")[0] == 2
    assert run(capsys, "extract", "-i", str(tmp_path / "missing"), "-k", "6", "-r", "3")[0] == 2
    assert run(capsys, "extract", "-i", str(bad))[0] == 2


def test_verify_roundtrip(capsys, k7, tmp_path):
    _, out, _ = run(capsys, "extract", "-i", k7, "-k", "6", "-r", "3", "--json")
    cert = tmp_path / "cert.json"
    cert.write_text(out)
    assert run(capsys, "verify", "-i", k7, "--cert", str(cert)) == (0, "valid\n", "")
    data = json.loads(out)
    data["leaves"] = [3, 4, 6, 1]
    cert.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "-i", k7, "--cert", str(cert))
    assert code == 1 and out.startswith("invalid")
    cert.write_text("[]")
    assert run(capsys, "verify", "-i", k7, "--cert", str(cert))[0] == 2
    assert run(capsys, "verify", "-i", k7, "--cert", str(tmp_path / "nope.json"))[0] == 2


def test_lemma(capsys, k7, tmp_path):
    code, out, _ = run(capsys, "lemma", "-i", k7, "-k", "6", "--json")
    assert code == 0
    cert = json.loads(out)
    assert cert["kind"] == "heavy-cycle" and cert["center"] == 0 and cert["r"] is None
    path = tmp_path / "w.json"
    path.write_text(out)
    assert run(capsys, "verify", "-i", k7, "--cert", str(path))[0] == 0


def test_oracle(capsys, k7, c5):
    code, out, _ = run(capsys, "oracle", "-i", k7, "-k", "6", "-r", "1")
    assert code == 0 and "cycle: 0 1 2 3 4" in out
    assert run(capsys, "oracle", "-i", c5, "-k", "6", "-r", "1")[0] == 1


def test_gen(capsys, tmp_path):
    out = tmp_path / "w.txt"
    assert run(capsys, "gen", "--kind", "wheel", "-p", "7", "-o", str(out))[0] == 0
    assert out.read_text() == format_edge_list(wheel(7))
    assert run(capsys, "gen", "--kind", "clique", "-n", "7", "-o", str(out))[0] == 0
    assert out.read_text() == format_edge_list(clique(7))
    code, text, _ = run(capsys, "gen", "--kind", "random_dense", "-n", "10", "-k", "6",
                        "--seed", "1", "-o", "-")
    assert code == 0 and text.startswith("n 10\n")
    assert run(capsys, "gen", "--kind", "random_dense", "-n", "6", "-k", "6", "-o", "-")[0] == 1
    assert run(capsys, "gen", "--kind", "random_dense", "-o", "-")[0] == 2
    assert run(capsys, "gen", "--kind", "nonsense", "-o", "-")[0] == 2


def test_stress(capsys):
    code, out, _ = run(capsys, "stress", "--trials", "5", "-n", "9", "-k", "6", "-r", "3",
                       "--seed", "2", "--json")
    report = json.loads(out)
    assert code == 0 and report["trials"] == 5 and report["failures"] == 0
    code, out, _ = run(capsys, "stress", "--trials", "2", "-n", "9", "-k", "6", "-r", "3",
                       "--seed", "2", "--timing")
    assert code == 0 and "max seconds" in out


def test_module_entry_point(k7):
    proc = subprocess.run([sys.executable, "-m", "egkeyring", "lemma", "-i", k7, "-k", "6"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "kind: heavy-cycle" in proc.stdout
