"""Magnetic potentials as angle-valued edge cochains, gauges and fluxes."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import GraphMismatch, NotClosed, SizeMismatch
from .graph import Graph, SignedWalk, SpanningTreeDecomposition, spanning_tree

TWO_PI = 2.0 * math.pi
EPS_ANGLE = 1e-9


def normalize_angle(x: float) -> float:
    """Reduce to [0, 2pi); values within EPS_ANGLE below 2pi snap to 0."""
    y = math.fmod(float(x), TWO_PI)
    if y < 0:
        y += TWO_PI
    if abs(y - TWO_PI) < EPS_ANGLE or y >= TWO_PI:
        return 0.0
    return y + 0.0


def normalize_angles(x) -> np.ndarray:
    y = np.mod(np.asarray(x, dtype=float), TWO_PI)
    y[np.abs(y - TWO_PI) < EPS_ANGLE] = 0.0
    return y


def angle_distance(a: float, b: float) -> float:
    """Distance between two angles on the circle."""
    d = normalize_angle(a - b)
    return min(d, TWO_PI - d)


def angles_close(a: float, b: float, eps: float = EPS_ANGLE) -> bool:
    return angle_distance(a, b) < eps


@dataclass(frozen=True)
class MagneticPotential:
    """Angle on the reference arc of every edge; the reverse arc carries the negation."""

    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(normalize_angle(v) for v in self.values))

    def __len__(self):
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)

    def arc_value(self, e: int, sign: int) -> float:
        return self.values[e] if sign > 0 else normalize_angle(-self.values[e])

    def restrict(self, keep: Sequence[int]) -> MagneticPotential:
        return MagneticPotential(tuple(self.values[e] for e in keep))


@dataclass(frozen=True)
class Gauge:
    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(normalize_angle(v) for v in self.values))


@dataclass(frozen=True)
class FluxVector:
    fluxes: tuple[float, ...]
    decomposition: SpanningTreeDecomposition

    def __post_init__(self):
        object.__setattr__(self, "fluxes", tuple(normalize_angle(v) for v in self.fluxes))
        if len(self.fluxes) != len(self.decomposition.chords):
            raise SizeMismatch(
                f"{len(self.fluxes)} fluxes for {len(self.decomposition.chords)} chords"
            )


@dataclass(frozen=True)
class MagneticGraph:
    graph: Graph
    potential: MagneticPotential

    def __post_init__(self):
        if len(self.potential) != self.graph.m:
            raise SizeMismatch(
                f"potential has {len(self.potential)} values, graph has {self.graph.m} edges"
            )

    @classmethod
    def zero(cls, G: Graph) -> MagneticGraph:
        return cls(G, constant_potential(G, 0.0))


def zero_potential(G: Graph) -> MagneticPotential:
    return MagneticPotential((0.0,) * G.m)


def constant_potential(G: Graph, t: float) -> MagneticPotential:
    """``t`` on every reference arc (so ``-t`` on every reversed arc)."""
    return MagneticPotential((float(t),) * G.m)


def coboundary(G: Graph, xi: Gauge | Sequence[float]) -> MagneticPotential:
    vals = xi.values if isinstance(xi, Gauge) else tuple(xi)
    if len(vals) != G.n:
        raise SizeMismatch(f"gauge has {len(vals)} values, graph has {G.n} vertices")
    return MagneticPotential(tuple(vals[v] - vals[u] for u, v in G.edges))


def gauge_transform(G: Graph, alpha: MagneticPotential, xi: Gauge | Sequence[float]) -> MagneticPotential:
    """``alpha + coboundary(xi)``."""
    if len(alpha) != G.m:
        raise SizeMismatch(f"potential has {len(alpha)} values, graph has {G.m} edges")
    d = coboundary(G, xi)
    return MagneticPotential(tuple(a + b for a, b in zip(alpha.values, d.values)))


def flux(alpha: MagneticPotential, cycle: SignedWalk) -> float:
    """Signed sum of the potential around a closed walk, in [0, 2pi)."""
    if not cycle.is_closed:
        raise NotClosed("flux is only defined on closed walks")
    total = math.fsum(s * alpha.values[e] for e, s in cycle.arcs)
    return normalize_angle(total)


def chord_fluxes(MG: MagneticGraph, D: SpanningTreeDecomposition | None = None) -> FluxVector:
    """Flux through the fundamental cycle of each chord.

    Uses the BFS spanning tree of the graph unless ``D`` is given.
    """
    if D is None:
        D = spanning_tree(MG.graph)
    elif D.graph != MG.graph:
        raise GraphMismatch("decomposition belongs to a different graph")
    cycles = D.fundamental_cycles
    return FluxVector(tuple(flux(MG.potential, cycles[c]) for c in D.chords), D)


def potential_from_chord_fluxes(
    G: Graph, D: SpanningTreeDecomposition, f: FluxVector | Sequence[float]
) -> MagneticPotential:
    """Zero on tree edges and the requested flux on each chord."""
    fl = f.fluxes if isinstance(f, FluxVector) else tuple(f)
    if len(fl) != len(D.chords):
        raise SizeMismatch(f"{len(fl)} fluxes for {len(D.chords)} chords")
    vals = [0.0] * G.m
    for c, phi in zip(D.chords, fl):
        vals[c] = phi
    return MagneticPotential(tuple(vals))


def trivializing_gauge(G: Graph, alpha: MagneticPotential, D: SpanningTreeDecomposition | None = None) -> Gauge:
    """Gauge that makes ``alpha`` vanish on every tree edge of ``D``.

    After the transform only the chords carry values, and those equal the
    chord fluxes.
    """
    if D is None:
        D = spanning_tree(G)
    xi = [0.0] * G.n
    order = sorted(range(G.n), key=lambda v: D.depth[v])
    for v in order:
        p = D.parent[v]
        if p < 0:
            continue
        e = D.parent_edge[v]
        # want alpha_e + xi(head) - xi(tail) = 0 on the reference arc
        u, w = G.edges[e]
        if u == p:
            xi[v] = xi[p] - alpha.values[e]
        else:
            xi[v] = xi[p] + alpha.values[e]
    return Gauge(tuple(xi))


def is_gauge_equivalent(MG1: MagneticGraph, MG2: MagneticGraph, eps: float = EPS_ANGLE) -> bool:
    if MG1.graph != MG2.graph:
        raise GraphMismatch("gauge equivalence needs a common underlying graph")
    D = spanning_tree(MG1.graph)
    f1 = chord_fluxes(MG1, D).fluxes
    f2 = chord_fluxes(MG2, D).fluxes
    return all(angles_close(a, b, eps) for a, b in zip(f1, f2))
