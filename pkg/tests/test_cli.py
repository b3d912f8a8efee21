import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from dnasets.cli import main
from dnasets.setfile import format_code, format_set, parse_code, parse_set

GOLDEN = Path(__file__).parent / "golden" / "table2.txt"


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "dnasets", *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


# ---------------------------------------------------------------- set files

def test_set_file_roundtrip():
    text = format_set({"ACGT", "TTTT", "AAAA"}, 4, 4)
    assert text == "#q=4 L=4 M=3\nAAAA\nACGT\nTTTT\n"
    S, q, L = parse_set(text)
    assert (q, L) == (4, 4) and format_set(S, q, L) == text


@given(st.sets(st.text("01", min_size=5, max_size=5), min_size=1, max_size=8))
def test_set_file_property(S):
    text = format_set(S, 2, 5)
    assert parse_set(text)[0] == frozenset(S)
    assert format_set(parse_set(text)[0], 2, 5) == text


def test_set_file_errors():
    from dnasets.core import ParameterError
    for bad in ["#q=2 L=3 M=2\n000\n", "#q=2 L=3 M=1\n000", "#q=3 L=3 M=1\n000\n",
                "#q=2 L=3 M=1\n0A0\n", "#q=2 L=3 M=2\n000\n000\n"]:
        with pytest.raises(ParameterError):
            parse_set(bad)
    with pytest.raises(ParameterError):
        parse_set("#q=2 L=3 M=1\n00\n")
    assert parse_set("#q=2 L=3 M=1\n00\n", strict=False)[0] == {"00"}


def test_unsorted_input_accepted():
    S, _, _ = parse_set("#q=2 L=2 M=2\n11\n00\n")
    assert S == {"00", "11"}


def test_code_file_roundtrip():
    code = [frozenset({"00", "11"}), frozenset({"01", "10"})]
    text = format_code(code, 2, 2, 2)
    assert text == "#q=2 L=2 M=2\n00\n11\n\n01\n10\n"
    parsed, q, L, M = parse_code(text)
    assert parsed == code and format_code(parsed, q, L, M) == text


# ---------------------------------------------------------------- commands

def test_encode_decode_roundtrip(tmp_path):
    info = tmp_path / "info.bin"
    info.write_bytes(b"\x01\x02\x03")
    out = tmp_path / "set.txt"
    back = tmp_path / "back.bin"
    args = ["--construction", "c1", "--M", "8", "--L", "10"]
    assert main(["encode", *args, "--in", str(info), "--out", str(out)]) == 0
    S, q, L = parse_set(out.read_text())
    assert len(S) == 8 and L == 10
    assert main(["decode", *args, "--in", str(out), "--out", str(back), "--nbytes", "3"]) == 0
    assert back.read_bytes() == b"\x01\x02\x03"


def test_encode_c5(tmp_path):
    info = tmp_path / "info.bin"
    info.write_bytes(b"\x42")
    out = tmp_path / "set.txt"
    assert main(["encode", "--construction", "c5", "--M", "3", "--L", "8", "--a", "0",
                 "--in", str(info), "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "#q=2 L=8 M=3" and len(set(lines[1:])) == 3


def test_decode_failure_exit_code(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("#q=2 L=8 M=2\n00000000\n00000001\n")
    out = tmp_path / "o.bin"
    assert main(["decode", "--construction", "c5", "--M", "3", "--L", "8",
                 "--in", str(bad), "--out", str(out)]) == 3


def test_infeasible_exit_code(tmp_path):
    info = tmp_path / "info.bin"
    info.write_bytes(b"\x00")
    assert main(["encode", "--construction", "c3", "--M", "16", "--L", "12", "--c", "1/3",
                 "--in", str(info), "--out", str(tmp_path / "o")]) == 2
    info.write_bytes(b"\xff" * 64)
    assert main(["encode", "--construction", "c1", "--M", "4", "--L", "6",
                 "--in", str(info), "--out", str(tmp_path / "o")]) == 2


def test_usage_exit_code():
    code, _, err = run("encode", "--construction", "c9")
    assert code == 1 and "error" in err
    code, _, _ = run("simulate", "--construction", "c1", "--M", "4", "--L", "6",
                     "--channel", "1,1")
    assert code == 1


def test_simulate_json_and_determinism():
    args = ["simulate", "--construction", "c1", "--M", "8", "--L", "10", "--delta", "4",
            "--channel", "2,1,2,L", "--trials", "100", "--seed", "3"]
    c1, out1, _ = run(*args)
    c2, out2, _ = run(*args)
    assert c1 == c2 == 0 and out1 == out2
    data = json.loads(out1)
    assert data["schema"] == "dnasets.simulate/1"
    assert data["success_rate"] == 1.0 and data["failures"] == []


def test_simulate_zero_trials():
    _, out, _ = run("simulate", "--construction", "c6", "--M", "2", "--L", "7",
                    "--channel", "0,2,1,ID", "--trials", "0")
    assert json.loads(out)["success_rate"] is None


def test_bounds_command():
    code, out, _ = run("bounds", "--M", "3", "--L", "4", "--s", "0", "--t", "1", "--type", "L")
    assert code == 0
    entries = {e["theorem"]: e for e in json.loads(out)["entries"]}
    assert entries["gv-arbitrary"]["value_bits"] == pytest.approx(0.6374, abs=1e-4)
    assert entries["sp-arbitrary"]["value_bits"] == pytest.approx(3.844, abs=1e-3)
    code, out, _ = run("bounds", "--M", "3", "--L", "2", "--s", "0", "--t", "2")
    entries = {e["theorem"]: e for e in json.loads(out)["entries"]}
    assert entries["sp-arbitrary"]["status"] == "inapplicable"


def test_bounds_asymptotic():
    code, out, _ = run("bounds", "--M", "4", "--L", "8", "--s", "0", "--t", "1", "--eps", "1",
                       "--type", "S", "--asymptotic")
    assert code == 0
    kinds = {e["kind"] for e in json.loads(out)["entries"]}
    assert "asymptotic-leading-term" in kinds


def test_table2_command():
    code, out, _ = run("table2")
    assert code == 0 and out == GOLDEN.read_text()
    code, out, _ = run("table2", "--json")
    assert len(json.loads(out)["rows"]) == 10


def test_verify_command(tmp_path):
    f = tmp_path / "code.txt"
    f.write_text(format_code([frozenset({"000"}), frozenset({"111"})], 2, 3, 1))
    code, out, _ = run("verify", "--code", str(f), "--channel", "0,1,1,S")
    assert code == 0 and json.loads(out)["correcting"] is True
    f.write_text(format_code([frozenset({"000", "111"}), frozenset({"001", "111"})], 2, 3, 2))
    code, out, _ = run("verify", "--code", str(f), "--channel", "0,1,1,S")
    assert code == 3 and json.loads(out)["witness"] is not None


def test_counterexample_command():
    code, out, _ = run("counterexample")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "D-correcting=true" and lines[1] == "I-correcting=false"
    data = json.loads("\n".join(lines[2:]))
    assert data["known_witness_in_intersection"] is True
