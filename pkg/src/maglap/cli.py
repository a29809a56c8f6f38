"""Command line interface.

Exit status: 0 when the requested result was computed (and, for ``certify``,
a certificate was found), 1 when no certificate / cycle / equivalence was
found, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import logging
import sys

from . import certificates as cert_mod
from .combinatorics import find_hamiltonian_cycle, maximum_matching
from .dml import spectrum_of
from .errors import Disconnected, MaglapError, NotApplicable, TooLarge
from .io import certificate_json, emit_sweep_csv, format_number, parse_angle, read_graph_file
from .magnetic import MagneticGraph, constant_potential, is_gauge_equivalent, zero_potential
from .theorems import verify_theorem_suite

log = logging.getLogger("maglap")


def _angle(text: str) -> float:
    try:
        return parse_angle(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("grid must be at least 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maglap", description="Magnetic Laplacian spectra and obstructions.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", help="print the spectrum, one eigenvalue per line")
    s.add_argument("file")
    s.add_argument("--t", type=_angle, help="constant potential (radians; 'pi/2' etc. accepted)")

    s = sub.add_parser("sweep", help="write a sweep as CSV")
    s.add_argument("file")
    s.add_argument("--family", choices=["const", "chord", "single-chord"], default="const")
    s.add_argument("--grid", type=_positive, default=256)
    s.add_argument("--chord", type=int, help="edge id of the chord for single-chord sweeps")
    s.add_argument("--budget", type=int, default=100_000)
    s.add_argument("--out", help="output path (stdout when omitted)")

    s = sub.add_parser("certify", help="search for a spectral obstruction")
    s.add_argument("property", choices=["matchable", "hamiltonian"])
    s.add_argument("file")
    s.add_argument("--mode", choices=list(cert_mod.MODES), default="robust")
    s.add_argument("--grid", type=_positive, help="grid points per swept angle")
    s.add_argument("--budget", type=int, default=100_000)

    s = sub.add_parser("oracle", help="exact combinatorial answer")
    s.add_argument("problem", choices=["matching", "hamilton"])
    s.add_argument("file")

    s = sub.add_parser("verify", help="randomized verification of the eigenvalue bounds")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--potentials", type=int, default=8)

    s = sub.add_parser("gauge", help="are two potentials on one graph gauge-equivalent?")
    s.add_argument("file_a")
    s.add_argument("file_b")
    return p


def _cmd_spectrum(args) -> int:
    G, pot = read_graph_file(args.file)
    if args.t is not None:
        pot = constant_potential(G, args.t)
    for x in spectrum_of(G, pot):
        print(format_number(x))
    return 0


def _cmd_sweep(args) -> int:
    G, _ = read_graph_file(args.file)
    if args.family == "const":
        S = cert_mod.sweep_constant_potential(G, args.grid, name=args.file)
    elif args.family == "single-chord":
        S = cert_mod.sweep_single_chord(G, args.grid, args.chord, name=args.file)
    else:
        S = cert_mod.sweep_chord_fluxes(G, args.grid, budget=args.budget, name=args.file)
    text = emit_sweep_csv(S)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_certify(args) -> int:
    G, _ = read_graph_file(args.file)
    strategy = cert_mod.Strategy(grid_size=args.grid or 64, budget=args.budget)
    found = None
    if args.property == "matchable":
        try:
            found = cert_mod.certify_nonmatchable(G, strategy)
        except NotApplicable as exc:
            print(f"no certificate: {exc}", file=sys.stderr)
            return 1
    else:
        if G.n % 2 == 0 and G.n > 3:
            found = cert_mod.certify_nonhamiltonian_via_matching(G, strategy)
        if found is None:
            try:
                found = cert_mod.certify_nonhamiltonian_via_cycle(G, args.grid or 256, args.mode)
            except (Disconnected, NotApplicable) as exc:
                print(f"cycle comparison skipped: {exc}", file=sys.stderr)
    if found is None:
        print("no certificate found", file=sys.stderr)
        return 1
    print(certificate_json(found))
    return 0


def _cmd_oracle(args) -> int:
    G, _ = read_graph_file(args.file)
    if args.problem == "matching":
        M = sorted(maximum_matching(G))
        print(f"matching_number {len(M)}")
        print(f"perfect {'yes' if 2 * len(M) == G.n else 'no'}")
        for e in M:
            print(*G.edges[e])
        return 0
    try:
        cycle = find_hamiltonian_cycle(G)
    except TooLarge as exc:
        print(f"unknown: {exc}")
        return 2
    if cycle is None:
        print("none")
        return 1
    print(" ".join(map(str, cycle)))
    return 0


def _cmd_verify(args) -> int:
    report = verify_theorem_suite(args.seed, args.trials, args.potentials)
    print(json.dumps(report.to_dict(), sort_keys=True))
    return 0 if report.ok else 1


def _cmd_gauge(args) -> int:
    Ga, pa = read_graph_file(args.file_a)
    Gb, pb = read_graph_file(args.file_b)
    a = MagneticGraph(Ga, pa if pa is not None else zero_potential(Ga))
    b = MagneticGraph(Gb, pb if pb is not None else zero_potential(Gb))
    same = is_gauge_equivalent(a, b)
    print("equivalent" if same else "not equivalent")
    return 0 if same else 1


COMMANDS = {
    "spectrum": _cmd_spectrum,
    "sweep": _cmd_sweep,
    "certify": _cmd_certify,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
    "gauge": _cmd_gauge,
}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (MaglapError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def run_command(argv) -> tuple[int, str]:
    """Run the CLI in-process and return ``(exit status, stdout text)``."""
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
