import json
import math
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from maglap.certificates import sweep_constant_potential, sweep_single_chord
from maglap.cli import run_command
from maglap.dml import cycle_spectra_closed_form
from maglap.errors import DuplicateEdge, LoopEdge, ParseError, VertexOutOfRange
from maglap.io import (
    emit_sweep_csv,
    format_graph_file,
    format_number,
    parse_angle,
    parse_graph_file,
    read_graph_file,
)
from maglap.magnetic import angles_close

from conftest import FIXTURES, magnetic_graphs


def fx(name):
    return str(FIXTURES / name)


@pytest.mark.parametrize(
    "text, value",
    [
        ("0", 0.0),
        ("1.5", 1.5),
        ("pi", math.pi),
        ("pi/2", math.pi / 2),
        ("3pi/2", 3 * math.pi / 2),
        ("-2*pi/3", -2 * math.pi / 3),
        ("PI", math.pi),
    ],
)
def test_parse_angle(text, value):
    assert parse_angle(text) == pytest.approx(value)


@pytest.mark.parametrize("text", ["", "tau", "pi/", "2pie"])
def test_parse_angle_rejects(text):
    with pytest.raises(ValueError):
        parse_angle(text)


def test_parse_k2():
    G, pot = parse_graph_file("2 1\n0 1")
    assert G.n == 2 and G.edges == ((0, 1),) and pot is None


def test_parse_fixture_with_pi(square_pendants):
    G, pot = read_graph_file(fx("square_pendants_pi.graph"))
    assert G == square_pendants
    assert pot.values[G.find_edge(2, 4)] == pytest.approx(math.pi)
    assert sum(pot.values) == pytest.approx(math.pi)


def test_value_applies_to_arc_as_written():
    _, pot = parse_graph_file("2 1\n1 0 0.5\n")
    assert angles_close(pot.values[0], -0.5)


def test_missing_values_default_to_zero():
    _, pot = parse_graph_file("3 2\n0 1 pi\n1 2\n")
    assert pot.values == pytest.approx((math.pi, 0.0))


@pytest.mark.parametrize(
    "text, exc, line",
    [
        ("3 1\n0 0", LoopEdge, 2),
        ("3 2\n0 1\n1 0", DuplicateEdge, 3),
        ("3 1\n0 5", VertexOutOfRange, 2),
        ("3 2\n0 1", ParseError, 2),
        ("3\n0 1", ParseError, 1),
        ("3 1\n0 x", ParseError, 2),
        ("3 1\n0 1 nope", ParseError, 2),
        ("3 1\n0 1 2 3", ParseError, 2),
        ("# only a comment\n", ParseError, 1),
    ],
)
def test_parse_errors(text, exc, line):
    with pytest.raises(exc, match=f"line {line}"):
        parse_graph_file(text)


def test_comments_and_blank_lines():
    G, _ = parse_graph_file("# header\n\n3 2  # n m\n0 1\n\n1 2 # tail\n")
    assert G.edges == ((0, 1), (1, 2))


@given(magnetic_graphs(min_n=1, max_n=9, connected=False))
def test_round_trip(mg):
    G, pot = mg
    H, back = parse_graph_file(format_graph_file(G, pot))
    assert H == G
    # an edgeless file has nowhere to store values, and the empty potential reads back as None
    assert back == pot or (G.m == 0 and back is None)
    H, none = parse_graph_file(format_graph_file(G))
    assert H == G and none is None


def test_format_number():
    assert format_number(1e-14) == "0"
    assert format_number(-1e-13) == "0"
    assert format_number(2.0) == "2"
    assert format_number(math.pi) == "3.14159265359"


def test_k2_csv(k2):
    text = emit_sweep_csv(sweep_constant_potential(k2, 4))
    lines = text.splitlines()
    assert lines[0] == "t,lambda_1,lambda_2"
    assert len(lines) == 5
    assert all(line.endswith(",0,2") for line in lines[1:])


def test_csv_is_deterministic(hexagon_chords):
    a = emit_sweep_csv(sweep_constant_potential(hexagon_chords, 64))
    b = emit_sweep_csv(sweep_constant_potential(hexagon_chords, 64))
    assert a == b


def test_csv_shows_the_dip(square_pendants):
    rows = emit_sweep_csv(sweep_single_chord(square_pendants, 8)).splitlines()[1:]
    lam4 = [float(r.split(",")[4]) for r in rows]
    assert lam4[0] == 2.0 and all(x < 2 for x in lam4[1:])


def test_paired_csv_crossing(hexagon_chords):
    g = emit_sweep_csv(sweep_constant_potential(hexagon_chords, 8)).splitlines()[1:]
    lam_g = np.array([float(r.split(",")[1]) for r in g])
    t = np.array([float(r.split(",")[0]) for r in g])
    lam_c = cycle_spectra_closed_form(6, 6 * t)[:, 0]
    above = lam_c > lam_g + 1e-6
    assert above[2] and above[6] and not above[0] and not above[4]


# --- command line -----------------------------------------------------------


def test_cli_spectrum():
    code, out = run_command(["spectrum", fx("square_pendants.graph")])
    assert code == 0
    vals = [float(x) for x in out.split()]
    assert vals == pytest.approx([0, 3 - math.sqrt(5), 1, 2, 3, 3 + math.sqrt(5)], abs=1e-10)
    code, out = run_command(["spectrum", fx("k2.graph"), "--t", "pi/2"])
    assert code == 0 and out.split() == ["0", "2"]


def test_cli_spectrum_reads_stored_potential():
    code, out = run_command(["spectrum", fx("square_pendants_pi.graph")])
    assert code == 0
    assert float(out.split()[3]) == pytest.approx(1.63667, abs=1e-5)


def test_cli_certify_matchable():
    code, out = run_command(["certify", "matchable", fx("square_pendants.graph")])
    assert code == 0
    cert = json.loads(out)
    assert cert["kind"] == "NonMatchable" and cert["index"] == 4
    assert cert["lhs"] < 2 - 1e-6
    assert sum(cert["witness_potential"]) == pytest.approx(math.pi)


def test_cli_certify_nothing_found(tmp_path):
    assert run_command(["certify", "matchable", fx("c6.graph")])[0] == 1
    assert run_command(["certify", "hamiltonian", fx("k4.graph"), "--mode", "robust"])[0] == 1
    # odd order: the matching route does not apply
    c5 = tmp_path / "c5.graph"
    c5.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    assert run_command(["certify", "matchable", str(c5)])[0] == 1


def test_cli_certify_hamiltonian():
    code, out = run_command(["certify", "hamiltonian", fx("square_pendants.graph")])
    assert code == 0 and json.loads(out)["kind"] == "NonHamiltonian-ViaMatching"
    code, out = run_command(["certify", "hamiltonian", fx("hexagon_chords.graph"), "--mode", "paper"])
    assert code == 0
    cert = json.loads(out)
    assert cert["kind"] == "NonHamiltonian-ViaCycleComparison" and cert["mode"] == "paper"


def test_cli_oracles():
    code, out = run_command(["oracle", "hamilton", fx("c6.graph")])
    assert code == 0 and out.split() == ["0", "1", "2", "3", "4", "5"]
    code, out = run_command(["oracle", "hamilton", fx("hexagon_chords.graph")])
    assert code == 1 and out.strip() == "none"
    code, out = run_command(["oracle", "matching", fx("square_pendants.graph")])
    assert code == 0
    assert out.splitlines()[:2] == ["matching_number 2", "perfect no"]


def test_cli_sweep(tmp_path):
    dest = tmp_path / "s.csv"
    code, _ = run_command(["sweep", fx("square_pendants.graph"), "--family", "single-chord", "--grid", "16", "--out", str(dest)])
    assert code == 0
    first = dest.read_text()
    run_command(["sweep", fx("square_pendants.graph"), "--family", "single-chord", "--grid", "16", "--out", str(dest)])
    assert dest.read_text() == first
    code, out = run_command(["sweep", fx("hexagon_chords.graph"), "--family", "chord", "--grid", "4"])
    assert code == 0
    assert out.splitlines()[0].startswith("t_1,t_2,t_3,lambda_1")
    assert len(out.splitlines()) == 1 + 64


def test_cli_gauge(tmp_path):
    other = tmp_path / "other.graph"
    other.write_text("6 6\n0 4\n4 5\n1 2\n1 3 pi\n2 4\n3 4\n")
    assert run_command(["gauge", fx("square_pendants_pi.graph"), str(other)]) == (0, "equivalent\n")
    assert run_command(["gauge", fx("square_pendants.graph"), str(other)]) == (1, "not equivalent\n")


def test_cli_verify():
    code, out = run_command(["verify", "--seed", "1", "--trials", "4", "--potentials", "1"])
    assert code == 0
    assert json.loads(out)["seed"] == 1


def test_cli_errors(tmp_path, capsys):
    bad = tmp_path / "bad.graph"
    bad.write_text("3 1\n0 0\n")
    assert run_command(["spectrum", str(bad)])[0] == 2
    assert "line 2" in capsys.readouterr().err
    assert run_command(["spectrum", str(tmp_path / "missing.graph")])[0] == 2
    assert run_command(["bogus"])[0] == 2
    assert run_command(["spectrum", fx("k2.graph"), "--t", "tau"])[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "maglap.cli", "oracle", "matching", fx("k2.graph")],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("matching_number 1")
