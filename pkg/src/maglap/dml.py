"""Discrete magnetic Laplacian: dense Hermitian construction and spectra.

Eigenvalue indices are 1-based everywhere in the public API, so ``lam(1)``
is the smallest eigenvalue.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CycleTooSmall, EigenSolverFailure, SizeMismatch
from .graph import Graph, from_edge_list
from .magnetic import TWO_PI, MagneticGraph, MagneticPotential, normalize_angle

EPS_EIG = 1e-10  # relative eigenpair residual
EPS_SPEC = 1e-8  # spectrum-vs-spectrum comparisons


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ascending eigenvalues repeated by multiplicity."""

    eigenvalues: np.ndarray

    def __post_init__(self):
        vals = np.sort(np.asarray(self.eigenvalues, dtype=float))
        vals.setflags(write=False)
        object.__setattr__(self, "eigenvalues", vals)

    def lam(self, k: int) -> float:
        """k-th smallest eigenvalue, 1-based."""
        if not 1 <= k <= len(self.eigenvalues):
            raise IndexError(f"eigenvalue index {k} outside 1..{len(self.eigenvalues)}")
        return float(self.eigenvalues[k - 1])

    def __len__(self):
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues.tolist())

    def __repr__(self):
        return f"Spectrum({np.array2string(self.eigenvalues, precision=6)})"

    def allclose(self, other, atol: float = EPS_SPEC) -> bool:
        other = other.eigenvalues if isinstance(other, Spectrum) else np.asarray(other, float)
        return other.shape == self.eigenvalues.shape and bool(
            np.all(np.abs(self.eigenvalues - other) <= atol)
        )


@dataclass(frozen=True)
class EigenReport:
    max_residual: float
    orthogonality_defect: float
    trace_defect: float
    scale: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance and self.orthogonality_defect <= self.tolerance


def _edge_arrays(G: Graph):
    if G.m == 0:
        return np.zeros(0, int), np.zeros(0, int)
    e = np.asarray(G.edges, dtype=int)
    return e[:, 0], e[:, 1]


def build_dml(MG: MagneticGraph) -> np.ndarray:
    """Dense Hermitian matrix of the magnetic Laplacian.

    Diagonal entries are vertex degrees; the entry for the arc ``u -> v`` of
    edge ``e`` is ``-exp(i alpha_e)`` and the opposite entry its conjugate.
    """
    return build_dml_batch(MG.graph, MG.potential.as_array()[None, :])[0]


def build_dml_batch(G: Graph, potentials) -> np.ndarray:
    """Stack of magnetic Laplacians, one per row of ``potentials`` (shape ``(N, m)``)."""
    alpha = np.asarray(potentials, dtype=float)
    if alpha.ndim != 2 or alpha.shape[1] != G.m:
        raise SizeMismatch(f"expected potentials of shape (N, {G.m}), got {alpha.shape}")
    N = alpha.shape[0]
    H = np.zeros((N, G.n, G.n), dtype=complex)
    diag = np.arange(G.n)
    H[:, diag, diag] = np.asarray(G.degrees, dtype=float)
    u, v = _edge_arrays(G)
    phase = np.exp(1j * alpha)
    H[:, u, v] = -phase
    H[:, v, u] = -np.conj(phase)
    return H


def verify_eigenpairs(H: np.ndarray, eigenvalues, eigenvectors, m: int | None = None) -> EigenReport:
    """Residual and orthogonality check of eigenpairs of a Hermitian matrix.

    Tolerance is ``EPS_EIG * max(||H||_2, 1)``; the floor keeps the edgeless
    graph (``H = 0``) from demanding exact zeros.
    """
    H = np.asarray(H)
    w = np.asarray(eigenvalues, dtype=float)
    V = np.asarray(eigenvectors)
    n = H.shape[-1]
    scale = max(float(np.max(np.abs(w))) if w.size else 0.0, 1.0)
    resid = np.linalg.norm(H @ V - V * w[..., None, :], axis=-2)
    gram = np.swapaxes(V.conj(), -1, -2) @ V - np.eye(n)
    trace_def = 0.0
    if m is not None:
        trace_def = float(np.max(np.abs(w.sum(axis=-1) - 2 * m)))
    return EigenReport(
        max_residual=float(np.max(resid)) if resid.size else 0.0,
        orthogonality_defect=float(np.max(np.abs(gram))) if gram.size else 0.0,
        trace_defect=trace_def,
        scale=scale,
        tolerance=EPS_EIG * scale,
    )


def _eigh_checked(H: np.ndarray, m: int) -> np.ndarray:
    try:
        w, V = np.linalg.eigh(H)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverFailure(str(exc)) from exc
    report = verify_eigenpairs(H, w, V, m)
    n = H.shape[-1]
    if not report.passed or report.trace_defect > n * report.tolerance:
        raise EigenSolverFailure(f"eigenpair self-check failed: {report}")
    return w


def spectrum(MG: MagneticGraph) -> Spectrum:
    return Spectrum(_eigh_checked(build_dml(MG), MG.graph.m))


def spectrum_of(G: Graph, potential: MagneticPotential | None = None) -> Spectrum:
    if potential is None:
        potential = MagneticPotential((0.0,) * G.m)
    return spectrum(MagneticGraph(G, potential))


def spectra_batch(G: Graph, potentials) -> np.ndarray:
    """Eigenvalues (ascending per row) for many potentials on one graph."""
    H = build_dml_batch(G, potentials)
    return _eigh_checked(H, G.m)


def cycle_graph(n: int) -> Graph:
    """The cycle 0-1-...-(n-1)-0."""
    if n < 3:
        raise CycleTooSmall(f"a simple cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def cycle_potential_with_flux(n: int, phi: float) -> MagneticPotential:
    """Potential on ``cycle_graph(n)`` whose flux along 0 -> 1 -> ... -> 0 is ``phi``."""
    vals = [0.0] * n
    vals[0] = phi  # edge (0, 1) traversed forwards
    return MagneticPotential(tuple(vals))


def cycle_spectrum_closed_form(n: int, flux: float) -> Spectrum:
    """Spectrum of the n-cycle threaded by ``flux``: 2 - 2cos((2 pi k + flux)/n)."""
    if n < 3:
        raise CycleTooSmall(f"a simple cycle needs n >= 3, got {n}")
    k = np.arange(n)
    return Spectrum(2.0 - 2.0 * np.cos((TWO_PI * k + normalize_angle(flux)) / n))


def cycle_spectra_closed_form(n: int, fluxes) -> np.ndarray:
    """Vectorised closed form; row ``i`` is the ascending spectrum at ``fluxes[i]``."""
    if n < 3:
        raise CycleTooSmall(f"a simple cycle needs n >= 3, got {n}")
    phi = np.mod(np.asarray(fluxes, dtype=float), TWO_PI)
    k = np.arange(n)
    return np.sort(2.0 - 2.0 * np.cos((TWO_PI * k[None, :] + phi[:, None]) / n), axis=1)


def gershgorin_bound(G: Graph) -> float:
    return 2.0 * G.max_degree


def is_bipartite(G: Graph) -> bool:
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in G.neighbors[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True
