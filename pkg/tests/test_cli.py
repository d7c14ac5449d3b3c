"""Command-line interface: params/synth/verify/table, exit codes, files."""

import pytest

from gf2synth.circuits import Circuit, cnot, emit, parse, toffoli
from gf2synth.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- params -----------------------------------------------------------------


def test_params_ghost_degree(capsys):
    code, out, _ = run(capsys, "params", "-m", "4")
    assert code == 0
    assert "ghost_bit=yes" in out
    assert "gnb_type=1" in out
    assert "gnb_p=5" in out


def test_params_gnb_only_degree(capsys):
    code, out, _ = run(capsys, "params", "-m", "7")
    assert code == 0
    assert "ghost_bit=no" in out
    assert "gnb_type=4" in out


def test_params_unsupported_degree(capsys):
    code, out, _ = run(capsys, "params", "-m", "8")
    assert code == 2
    assert "ghost_bit=no" in out
    assert "gnb_type=none" in out


def test_params_scoped_to_one_rep(capsys):
    code, out, _ = run(capsys, "params", "-m", "8", "--rep", "gbb")
    assert code == 2
    assert "gnb" not in out
    code, out, _ = run(capsys, "params", "-m", "7", "--rep", "gnb")
    assert code == 0
    assert "ghost_bit" not in out


# -- synth ------------------------------------------------------------------


def test_synth_mult_summary(capsys):
    code, out, _ = run(capsys, "synth", "mult", "-m", "4", "--rep", "gbb")
    assert code == 0
    for line in ("command=mult", "rep=gbb", "m=4", "toffoli=25", "depth=5", "qubits=15"):
        assert line in out


def test_synth_gnb_type_line(capsys):
    code, out, _ = run(capsys, "synth", "mult", "-m", "5", "--rep", "gnb")
    assert code == 0
    assert "t=2" in out
    assert "toffoli=45" in out
    assert "depth=9" in out


def test_synth_writes_parseable_netlist(capsys, tmp_path):
    path = tmp_path / "mult.qc"
    code, out, _ = run(
        capsys, "synth", "mult", "-m", "4", "--rep", "gbb", "--out", str(path)
    )
    assert code == 0
    assert f"out={path}" in out
    c = parse(path.read_text())
    assert c.width == 15
    assert set(c.registers) == {"input_a", "input_b", "output"}
    # the summary is computed from the file just written
    assert "toffoli=25" in out


def test_synth_deterministic_bytes(capsys, tmp_path):
    a, b = tmp_path / "a.qc", tmp_path / "b.qc"
    run(capsys, "synth", "invert", "-m", "7", "--rep", "gnb", "--out", str(a))
    run(capsys, "synth", "invert", "-m", "7", "--rep", "gnb", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_synth_selfmult_needs_exponent(capsys):
    code, _, err = run(capsys, "synth", "selfmult", "-m", "4", "--rep", "gbb")
    assert code == 2
    assert "-r" in err


def test_synth_t_rejected_for_ghost(capsys):
    code, _, err = run(capsys, "synth", "mult", "-m", "4", "--rep", "gbb", "-t", "1")
    assert code == 2
    assert "gnb" in err


def test_synth_t_override(capsys):
    code, out, _ = run(capsys, "synth", "mult", "-m", "4", "--rep", "gnb", "-t", "3")
    assert code == 0
    assert "t=3" in out
    assert "toffoli=60" in out


def test_synth_unsupported_degree(capsys):
    code, _, err = run(capsys, "synth", "mult", "-m", "8", "--rep", "gnb")
    assert code == 2
    assert "error" in err


# -- verify -----------------------------------------------------------------


def test_verify_mult_auto_exhaustive(capsys):
    code, out, _ = run(capsys, "verify", "mult", "-m", "4", "--rep", "gbb")
    assert code == 0
    assert "mode=exhaustive" in out
    assert "inputs=1024" in out
    assert "result=pass" in out
    assert "seed=" not in out


def test_verify_auto_random_when_large(capsys):
    code, out, _ = run(capsys, "verify", "add", "-m", "12", "--rep", "gbb")
    assert code == 0
    assert "mode=random" in out
    assert "inputs=100" in out
    assert "seed=0xB10F" in out


def test_verify_random_sample_count(capsys):
    code, out, _ = run(
        capsys, "verify", "selfmult", "-m", "11", "--rep", "gnb", "-r", "3",
        "--random", "17", "--seed", "0x5",
    )
    assert code == 0
    assert "inputs=17" in out
    assert "seed=0x5" in out


def test_verify_exhaustive_cap(capsys):
    code, _, err = run(
        capsys, "verify", "selfmult", "-m", "28", "--rep", "gbb", "-r", "1",
        "--exhaustive",
    )
    assert code == 2
    assert "cap" in err


def test_verify_invert_roundtrip_through_file(capsys, tmp_path):
    path = tmp_path / "inv.qc"
    run(capsys, "synth", "invert", "-m", "5", "--rep", "gnb", "--out", str(path))
    code, out, _ = run(
        capsys, "verify", "invert", "-m", "5", "--rep", "gnb", "--in", str(path)
    )
    assert code == 0
    assert "result=pass" in out


def tamper(path):
    """Move one Toffoli target to a different wire and rewrite the file."""
    c = parse(path.read_text())
    gates = list(c.gates)
    for i, g in enumerate(gates):
        if len(g) == 3:
            a, b, t = g
            for nt in range(c.width):
                if nt not in (a, b, t):
                    gates[i] = toffoli(a, b, nt)
                    path.write_text(emit(Circuit(c.width, tuple(gates), c.registers)))
                    return
    raise AssertionError("no Toffoli found to tamper with")


def test_verify_detects_tampered_netlist(capsys, tmp_path):
    path = tmp_path / "inv.qc"
    run(capsys, "synth", "invert", "-m", "5", "--rep", "gnb", "--out", str(path))
    tamper(path)
    code, out, _ = run(
        capsys, "verify", "invert", "-m", "5", "--rep", "gnb", "--in", str(path)
    )
    assert code == 1
    assert "result=fail" in out
    assert "counterexample=" in out


def test_verify_detects_tampered_mult(capsys, tmp_path):
    path = tmp_path / "mult.qc"
    run(capsys, "synth", "mult", "-m", "5", "--rep", "gnb", "--out", str(path))
    tamper(path)
    code, out, _ = run(
        capsys, "verify", "mult", "-m", "5", "--rep", "gnb", "--in", str(path)
    )
    assert code == 1
    assert "result=fail" in out


def test_verify_width_mismatch(capsys, tmp_path):
    path = tmp_path / "wrong.qc"
    run(capsys, "synth", "mult", "-m", "4", "--rep", "gbb", "--out", str(path))
    code, _, err = run(
        capsys, "verify", "mult", "-m", "10", "--rep", "gbb", "--in", str(path)
    )
    assert code == 2
    assert "wires" in err


def test_verify_malformed_netlist(capsys, tmp_path):
    path = tmp_path / "bad.qc"
    path.write_text("qubits 15\ncx 0 99\n")
    code, _, err = run(
        capsys, "verify", "mult", "-m", "4", "--rep", "gbb", "--in", str(path)
    )
    assert code == 3
    assert "line 2" in err


def test_verify_missing_file(capsys, tmp_path):
    code, _, err = run(
        capsys, "verify", "mult", "-m", "4", "--rep", "gbb",
        "--in", str(tmp_path / "nope.qc"),
    )
    assert code == 3
    assert "error" in err


# -- table ------------------------------------------------------------------


def test_table_lists_both_reps(capsys):
    code, out, _ = run(capsys, "table", "-m", "4,5")
    assert code == 0
    lines = out.splitlines()
    assert any("gbb" in ln and "mult" in ln for ln in lines)
    assert any("gnb" in ln and "invert" in ln for ln in lines)
    assert any("extended Euclid" in ln for ln in lines)


def test_table_rep_filter(capsys):
    code, out, _ = run(capsys, "table", "-m", "4,5", "--rep", "gbb")
    assert code == 0
    body = [ln for ln in out.splitlines() if " gnb " in ln]
    assert not body


def test_table_no_supported_degrees(capsys):
    code, _, err = run(capsys, "table", "-m", "8")
    assert code == 2
    assert "no supported representation" in err


# -- misc -------------------------------------------------------------------


def test_no_subcommand_shows_usage(capsys):
    code, _, _ = run(capsys)
    assert code == 2


def test_help_exits_zero(capsys):
    code, _, _ = run(capsys, "--help")
    assert code == 0


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "gf2synth", "params", "-m", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "ghost_bit=yes" in proc.stdout
