"""Randomized numerical verification of the eigenvalue bounds the certificates rely on.

Every check is an exact inequality between eigenvalues and the constant 2,
or a spectral preorder between a graph and a subgraph. Non-strict
inequalities get DELTA_CERT of slack; strict ones must clear DELTA_CERT.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .combinatorics import maximum_matching, matching_number
from .dml import EPS_SPEC, Spectrum, cycle_spectrum_closed_form, spectrum
from .generators import planted_hamiltonian_graph, random_connected_graph, random_potential, random_tree
from .graph import Graph, spanning_tree_containing_matching, walk_from_vertices
from .magnetic import MagneticGraph, flux
from .preorder import DELTA_CERT, check_deletion_chain, check_deletion_interlacing

TREE_BOUNDS = "tree_matching_bounds"
MATCHABLE_TREE_TWO = "matchable_tree_eigenvalue_two"
MATCHABLE_TREE_GAP = "matchable_tree_strict_gap"
UNMATCHED_TREE_STRICT = "unmatched_tree_strict_bounds"
EDGE_INTERLACING = "edge_deletion_interlacing"
TREE_REDUCTION = "spanning_tree_deletion_chain"
CONNECTED_BOUNDS = "connected_matching_bounds"
CONNECTED_STRICT = "connected_matching_strict_bounds"
CYCLE_SANDWICH = "hamiltonian_cycle_sandwich"
PLANTED_CLOSED_FORM = "planted_cycle_closed_form"
HAMILTONIAN_BOUNDS = "hamiltonian_eigenvalue_bounds"

CHECKS = (
    TREE_BOUNDS,
    MATCHABLE_TREE_TWO,
    MATCHABLE_TREE_GAP,
    UNMATCHED_TREE_STRICT,
    EDGE_INTERLACING,
    TREE_REDUCTION,
    CONNECTED_BOUNDS,
    CONNECTED_STRICT,
    CYCLE_SANDWICH,
    PLANTED_CLOSED_FORM,
    HAMILTONIAN_BOUNDS,
)


@dataclass
class TheoremReport:
    seed: int
    trials: int
    passed: Counter = field(default_factory=Counter)
    failed: Counter = field(default_factory=Counter)
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def record(self, name: str, ok: bool, G: Graph, potential, detail: str = "") -> None:
        if ok:
            self.passed[name] += 1
            return
        self.failed[name] += 1
        self.counterexamples.append(
            {
                "check": name,
                "n": G.n,
                "edges": [list(e) for e in G.edges],
                "potential": list(potential.values) if potential is not None else None,
                "detail": detail,
            }
        )

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "checks": {c: {"passed": self.passed[c], "failed": self.failed[c]} for c in CHECKS},
            "counterexamples": self.counterexamples,
        }

    def lines(self) -> list[str]:
        return [
            f"{c:36s} passed={self.passed[c]:5d} failed={self.failed[c]:3d}" for c in CHECKS
        ]


def _lam(spec: Spectrum, k: int) -> float | None:
    """lambda_k, or None when k falls outside 1..n (the bound is then vacuous)."""
    return spec.lam(k) if 1 <= k <= len(spec) else None


def _le2(x):  # x <= 2 with slack
    return x is None or x <= 2.0 + DELTA_CERT


def _ge2(x):
    return x is None or x >= 2.0 - DELTA_CERT


def _lt2(x):  # strictly below 2, clearing the margin
    return x is None or x < 2.0 - DELTA_CERT


def _gt2(x):
    return x is None or x > 2.0 + DELTA_CERT


def check_tree(report: TheoremReport, T: Graph, potential) -> None:
    n = T.n
    mu = matching_number(T)
    s = spectrum(MagneticGraph(T, potential))
    lo, hi = _lam(s, mu + 1), _lam(s, n - mu + 1)
    report.record(TREE_BOUNDS, _le2(lo) and _ge2(hi), T, potential, f"mu={mu} spec={s}")
    if n == 2 * mu:
        mid = s.lam(n // 2 + 1)
        report.record(MATCHABLE_TREE_TWO, abs(mid - 2.0) <= EPS_SPEC, T, potential, f"spec={s}")
        ok = _lt2(_lam(s, n // 2)) and _gt2(_lam(s, n // 2 + 2))
        report.record(MATCHABLE_TREE_GAP, ok, T, potential, f"spec={s}")
    else:
        report.record(UNMATCHED_TREE_STRICT, _lt2(lo) and _gt2(hi), T, potential, f"mu={mu} spec={s}")


def check_connected(report: TheoremReport, G: Graph, potential, rng: np.random.Generator, M=None) -> None:
    n, m = G.n, G.m
    if M is None:
        M = maximum_matching(G)
    mu = len(M)
    MG = MagneticGraph(G, potential)
    s = spectrum(MG)

    e = int(rng.integers(m))
    below, above = check_deletion_interlacing(MG, e)
    report.record(EDGE_INTERLACING, below.holds and above.holds, G, potential, f"edge {e}: {below} {above}")

    D = spanning_tree_containing_matching(G, M)
    below, above = check_deletion_chain(MG, D.chords)
    report.record(TREE_REDUCTION, below.holds and above.holds, G, potential, f"chords {D.chords}: {below} {above}")

    lo, hi = _lam(s, mu + n - m), _lam(s, n - mu + 1)
    report.record(CONNECTED_BOUNDS, _le2(lo) and _ge2(hi), G, potential, f"mu={mu} spec={s}")
    if n > 2 * mu:
        ok = _lt2(lo) and _gt2(hi)
    else:
        ok = _lt2(_lam(s, 3 * n // 2 - m - 1)) and _gt2(_lam(s, n // 2 + 2))
    report.record(CONNECTED_STRICT, ok, G, potential, f"mu={mu} spec={s}")


def check_planted(report: TheoremReport, G: Graph, cycle: list[int], potential) -> None:
    n = G.n
    walk = walk_from_vertices(G, cycle + [cycle[0]])
    on_cycle = set(walk.edge_ids())
    MG = MagneticGraph(G, potential)
    below, above = check_deletion_chain(MG, [e for e in range(G.m) if e not in on_cycle])
    report.record(CYCLE_SANDWICH, below.holds and above.holds, G, potential, f"cycle {cycle}: {below} {above}")

    # the planted cycle alone is a cycle graph threaded by the potential's flux around it
    keep = sorted(on_cycle)
    cyc_graph = Graph(n, tuple(G.edges[e] for e in keep))
    s_cyc = spectrum(MagneticGraph(cyc_graph, potential.restrict(keep)))
    expected = cycle_spectrum_closed_form(n, flux(potential, walk))
    report.record(PLANTED_CLOSED_FORM, s_cyc.allclose(expected), G, potential, f"{s_cyc} vs {expected}")

    s = spectrum(MG)
    if n % 2 == 0:
        ok = _ge2(s.lam(n // 2 + 1)) and _gt2(_lam(s, n // 2 + 2))
    else:
        ok = _gt2(_lam(s, (n + 1) // 2 + 1))
    report.record(HAMILTONIAN_BOUNDS, ok, G, potential, f"spec={s}")


def verify_theorem_suite(
    seed: int,
    trials: int = 200,
    potentials: int = 8,
    tree_sizes: tuple[int, int] = (2, 14),
    graph_sizes: tuple[int, int] = (4, 12),
) -> TheoremReport:
    """Run every check on ``trials`` random trees, ``trials`` random connected
    graphs (``potentials`` potentials each) and ``trials // 2`` graphs with a
    planted Hamiltonian cycle."""
    rng = np.random.default_rng(seed)
    report = TheoremReport(seed, trials)
    for _ in range(trials):
        T = random_tree(rng, int(rng.integers(tree_sizes[0], tree_sizes[1] + 1)))
        check_tree(report, T, random_potential(rng, T.m))
    for _ in range(trials):
        G = random_connected_graph(rng, int(rng.integers(graph_sizes[0], graph_sizes[1] + 1)))
        M = maximum_matching(G)
        for _ in range(potentials):
            check_connected(report, G, random_potential(rng, G.m), rng, M)
    for _ in range(trials // 2):
        G, cycle = planted_hamiltonian_graph(rng, int(rng.integers(max(4, graph_sizes[0]), graph_sizes[1] + 1)))
        for _ in range(potentials):
            check_planted(report, G, cycle, random_potential(rng, G.m))
    return report
