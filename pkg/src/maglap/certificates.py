"""Spectral obstructions to perfect matchings and Hamiltonian cycles.

Certificates are found by sweeping magnetic potentials and looking for an
eigenvalue inequality that no matchable (or Hamiltonian) graph can satisfy.
Each emitted certificate is cross-checked against the exact oracles in
:mod:`maglap.combinatorics` when the graph is small enough.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .combinatorics import N_EXACT, find_hamiltonian_cycle, is_matchable
from .dml import EPS_SPEC, cycle_spectra_closed_form, spectra_batch, spectrum_of
from .errors import BudgetExceeded, Disconnected, NotApplicable, SoundnessViolation
from .graph import Graph, SpanningTreeDecomposition, is_connected, spanning_tree
from .magnetic import TWO_PI, MagneticPotential
from .preorder import DELTA_CERT

log = logging.getLogger(__name__)

NON_MATCHABLE = "NonMatchable"
NON_HAMILTONIAN_MATCHING = "NonHamiltonian-ViaMatching"
NON_HAMILTONIAN_CYCLE = "NonHamiltonian-ViaCycleComparison"

FAMILIES = ("const", "single-chord", "chord")
MODES = ("paper", "robust")
CHUNK = 4096


def angle_grid(grid_size: int) -> np.ndarray:
    if grid_size < 2:
        raise ValueError(f"grid_size must be >= 2, got {grid_size}")
    return TWO_PI * np.arange(grid_size) / grid_size


def _spectra(G: Graph, potentials: np.ndarray) -> np.ndarray:
    if potentials.shape[0] == 0:
        return np.zeros((0, G.n))
    out = [spectra_batch(G, potentials[i : i + CHUNK]) for i in range(0, len(potentials), CHUNK)]
    return np.concatenate(out, axis=0)


@dataclass(frozen=True, eq=False)
class SweepResult:
    """Spectra over a grid of potentials.

    ``params[i]`` holds the sweep coordinates of point ``i``: the constant
    angle ``t`` for the const family, the swept chord flux for single-chord,
    one flux per chord for the full torus.
    """

    graph: Graph
    family: str
    grid: np.ndarray
    params: np.ndarray
    potentials: np.ndarray
    spectra: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.spectra)

    def column(self, k: int) -> np.ndarray:
        """lambda_k at every point (1-based k)."""
        return self.spectra[:, k - 1]

    def potential(self, i: int) -> MagneticPotential:
        return MagneticPotential(tuple(self.potentials[i].tolist()))


def sweep_constant_potential(G: Graph, grid_size: int, name: str | None = None) -> SweepResult:
    """Constant potential ``t`` on every reference arc, ``t = 2 pi j / grid_size``."""
    grid = angle_grid(grid_size)
    pots = np.repeat(grid[:, None], G.m, axis=1)
    return SweepResult(
        G, "const", grid, grid[:, None], pots, _spectra(G, pots), {"graph": name, "grid_size": grid_size}
    )


def _chord_potentials(G: Graph, D: SpanningTreeDecomposition, fluxes: np.ndarray) -> np.ndarray:
    pots = np.zeros((fluxes.shape[0], G.m))
    if D.chords:
        pots[:, list(D.chords)] = fluxes
    return pots


def sweep_single_chord(
    G: Graph, grid_size: int, chord: int | None = None, name: str | None = None
) -> SweepResult:
    """Sweep one chord's flux with every other edge at zero.

    ``chord`` is an edge id among the BFS-tree chords; defaults to the first.
    A tree gives the single zero-potential point.
    """
    D = spanning_tree(G)
    if not D.chords:
        return sweep_chord_fluxes(G, grid_size, name=name)
    if chord is None:
        chord = D.chords[0]
    if chord not in D.chords:
        raise ValueError(f"edge {chord} is not a chord; chords are {list(D.chords)}")
    grid = angle_grid(grid_size)
    pots = np.zeros((grid_size, G.m))
    pots[:, chord] = grid
    meta = {"graph": name, "grid_size": grid_size, "chord": chord, "chord_edge": G.edges[chord]}
    return SweepResult(G, "single-chord", grid, grid[:, None], pots, _spectra(G, pots), meta)


def sweep_chord_fluxes(
    G: Graph, grid_size: int, budget: int = 100_000, name: str | None = None
) -> SweepResult:
    """Full product grid over the chord fluxes of the BFS spanning tree."""
    D = spanning_tree(G)
    c = len(D.chords)
    grid = angle_grid(grid_size)
    if c and grid_size**c > budget:
        raise BudgetExceeded(f"{grid_size}^{c} points exceeds budget {budget}")
    if c:
        mesh = np.meshgrid(*([grid] * c), indexing="ij")
        fluxes = np.stack([x.ravel() for x in mesh], axis=1)
    else:
        fluxes = np.zeros((1, 0))
    pots = _chord_potentials(G, D, fluxes)
    meta = {"graph": name, "grid_size": grid_size, "chords": [G.edges[e] for e in D.chords]}
    return SweepResult(G, "chord", grid, fluxes, pots, _spectra(G, pots), meta)


@dataclass(frozen=True)
class Strategy:
    """Which sweep families to try, in order, and how hard."""

    families: tuple[str, ...] = FAMILIES
    grid_size: int = 64
    budget: int = 100_000
    n_exact: int = N_EXACT


@dataclass(frozen=True, eq=False)
class Certificate:
    kind: str
    witness_potential: MagneticPotential
    index: int
    lhs: float
    rhs: float
    margin: float
    mode: str | None = None
    family: str | None = None
    parameter: tuple[float, ...] = ()
    oracle: str = "skipped"  # "agrees", "contradicts" or "skipped"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "index": self.index,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "mode": self.mode,
            "family": self.family,
            "parameter": list(self.parameter),
            "witness_potential": list(self.witness_potential.values),
            "oracle": self.oracle,
        }


def _sweeps(G: Graph, strategy: Strategy):
    """Yield sweeps in strategy order, never exceeding the point budget."""
    left = strategy.budget
    connected = is_connected(G)
    for fam in strategy.families:
        if left <= 0:
            return
        if fam == "const":
            g = min(strategy.grid_size, left)
            if g >= 2:
                left -= g
                yield sweep_constant_potential(G, g)
        elif fam == "single-chord":
            if not connected:
                continue
            for c in spanning_tree(G).chords:
                g = min(strategy.grid_size, left)
                if g < 2:
                    return
                left -= g
                yield sweep_single_chord(G, g, c)
        elif fam == "chord":
            if not connected:
                continue
            c = len(spanning_tree(G).chords)
            if c == 0:
                continue
            g = strategy.grid_size
            while g >= 2 and g**c > left:
                g -= 1
            if g < 2:
                continue
            left -= g**c
            yield sweep_chord_fluxes(G, g, budget=left + g**c)
        else:
            raise ValueError(f"unknown sweep family {fam!r}")


def _matching_obstruction(G: Graph, strategy: Strategy, kind: str) -> Certificate | None:
    """Search for a potential with lambda_{n/2+1} < 2 - DELTA_CERT."""
    k = G.n // 2 + 1
    for sweep in _sweeps(G, strategy):
        col = sweep.column(k)
        if not np.any(col < 2.0 - DELTA_CERT):
            continue
        i = int(np.argmin(col))
        lhs = float(col[i])
        return Certificate(
            kind=kind,
            witness_potential=sweep.potential(i),
            index=k,
            lhs=lhs,
            rhs=2.0,
            margin=2.0 - lhs,
            family=sweep.family,
            parameter=tuple(float(x) for x in sweep.params[i]),
        )
    return None


def certify_nonmatchable(G: Graph, strategy: Strategy | None = None) -> Certificate | None:
    """Certificate that ``G`` has no perfect matching, or None if none was found.

    Fires on a potential with ``lambda_{n/2+1} < 2``; every matchable graph has
    ``lambda_{n/2+1} >= 2`` for all potentials.
    """
    strategy = strategy or Strategy()
    if G.n % 2:
        raise NotApplicable("non-matchability certificates need an even vertex count")
    cert = _matching_obstruction(G, strategy, NON_MATCHABLE)
    if cert is None:
        return None
    oracle = "skipped"
    if G.n <= strategy.n_exact:
        if is_matchable(G):
            raise SoundnessViolation(f"certificate {cert.to_dict()} on a matchable graph {G}")
        oracle = "agrees"
    return _with(cert, oracle=oracle)


def certify_nonhamiltonian_via_matching(G: Graph, strategy: Strategy | None = None) -> Certificate | None:
    """Even-order non-Hamiltonicity from ``lambda_{n/2+1} < 2`` (a Hamiltonian
    graph of even order is matchable)."""
    strategy = strategy or Strategy()
    if G.n % 2 or G.n <= 3:
        raise NotApplicable("this route needs an even vertex count n > 3")
    cert = _matching_obstruction(G, strategy, NON_HAMILTONIAN_MATCHING)
    if cert is None:
        return None
    oracle = "skipped"
    if G.n <= strategy.n_exact:
        if find_hamiltonian_cycle(G) is not None:
            raise SoundnessViolation(f"certificate {cert.to_dict()} on a Hamiltonian graph {G}")
        oracle = "agrees"
    return _with(cert, oracle=oracle)


def achievable_cycle_fluxes(n: int, t) -> np.ndarray:
    """Fluxes ``(n - 2q) t`` a Hamiltonian cycle can pick up from a constant potential.

    ``q`` counts the cycle edges traversed against their reference orientation.
    Shape ``(len(t), n + 1)``.
    """
    t = np.atleast_1d(np.asarray(t, dtype=float))
    q = np.arange(n + 1)
    return np.mod((n - 2 * q)[None, :] * t[:, None], TWO_PI)


def cycle_comparison_values(n: int, t, mode: str) -> np.ndarray:
    """Cycle eigenvalues a constant-``t`` graph is compared against, shape ``(len(t), n)``.

    ``"paper"``: the cycle with flux ``n t``, as if the cycle followed every
    reference orientation. ``"robust"``: for each k the minimum of
    ``lambda_k`` over all achievable fluxes, which no orientation can beat.
    """
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if mode == "paper":
        return cycle_spectra_closed_form(n, np.mod(n * t, TWO_PI))
    if mode == "robust":
        phis = achievable_cycle_fluxes(n, t)
        spec = cycle_spectra_closed_form(n, phis.ravel()).reshape(len(t), n + 1, n)
        return spec.min(axis=1)
    raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def certify_nonhamiltonian_via_cycle(
    G: Graph, grid_size: int = 256, mode: str = "robust", n_exact: int = N_EXACT
) -> Certificate | None:
    """Compare constant-potential spectra of ``G`` against the n-cycle.

    A certificate needs some t and k with the cycle's ``lambda_k`` above
    ``G``'s by more than DELTA_CERT. Only robust mode is a proof; a
    ``"paper"``-mode certificate that the oracle refutes is logged and
    flagged, not raised.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if G.n < 3:
        raise NotApplicable("cycle comparison needs n >= 3")
    if not is_connected(G):
        raise Disconnected("cycle comparison needs a connected graph")
    sweep = sweep_constant_potential(G, grid_size)
    cyc = cycle_comparison_values(G.n, sweep.grid, mode)
    diff = cyc - sweep.spectra
    i, k0 = np.unravel_index(int(np.argmax(diff)), diff.shape)
    if diff[i, k0] <= DELTA_CERT:
        return None
    t = float(sweep.grid[i])
    cert = Certificate(
        kind=NON_HAMILTONIAN_CYCLE,
        witness_potential=sweep.potential(i),
        index=int(k0) + 1,
        lhs=float(cyc[i, k0]),
        rhs=float(sweep.spectra[i, k0]),
        margin=float(diff[i, k0]),
        mode=mode,
        family="const",
        parameter=(t,),
    )
    oracle = "skipped"
    if G.n <= n_exact:
        ham = find_hamiltonian_cycle(G)
        if ham is None:
            oracle = "agrees"
        elif mode == "robust":
            raise SoundnessViolation(f"robust certificate {cert.to_dict()} on Hamiltonian graph {G}")
        else:
            oracle = "contradicts"
            log.warning(
                "cycle comparison in mode 'paper' fired on a Hamiltonian graph (cycle %s, t=%.6g, k=%d)",
                ham, t, cert.index,
            )
    return _with(cert, oracle=oracle)


def cycle_comparison_at(G: Graph, t: float, mode: str = "paper"):
    """Spectrum of ``G`` at constant ``t`` and the cycle values it is compared to."""
    graph_vals = spectra_batch(G, np.full((1, G.m), float(t)))[0]
    return graph_vals, cycle_comparison_values(G.n, [t], mode)[0]


def _with(cert: Certificate, **changes) -> Certificate:
    d = {f: getattr(cert, f) for f in cert.__dataclass_fields__}
    d.update(changes)
    return Certificate(**d)


def verify_certificate(G: Graph, cert: Certificate, tol: float = EPS_SPEC) -> bool:
    """Recompute a certificate's inequality from its stored witness potential."""
    k = cert.index
    if not 1 <= k <= G.n:
        return False
    graph_value = spectrum_of(G, cert.witness_potential).lam(k)
    stored = cert.rhs if cert.kind == NON_HAMILTONIAN_CYCLE else cert.lhs
    if abs(graph_value - stored) > tol:
        return False
    if cert.kind in (NON_MATCHABLE, NON_HAMILTONIAN_MATCHING):
        return G.n % 2 == 0 and k == G.n // 2 + 1 and cert.lhs < 2.0 - DELTA_CERT
    if cert.kind == NON_HAMILTONIAN_CYCLE:
        vals = set(cert.witness_potential.values)
        if len(vals) > 1:
            return False
        t = vals.pop() if vals else 0.0
        cyc = cycle_comparison_values(G.n, [t], cert.mode)[0]
        return abs(cyc[k - 1] - cert.lhs) <= tol and cert.lhs > cert.rhs + DELTA_CERT
    return False
