"""Spectral preorder with shift and eigenvalue interlacing under edge deletion."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .dml import Spectrum, spectrum
from .errors import BadShift, SizeMismatch
from .graph import delete_edges
from .magnetic import MagneticGraph

DELTA_CERT = 1e-6


@dataclass(frozen=True)
class PreorderVerdict:
    holds: bool
    failing_index: int | None  # 1-based k with lam_k(A) > lam_{k+r}(B) + slack
    margin: float  # min_k lam_{k+r}(B) - lam_k(A); +inf when no k is compared
    shift: int

    def __bool__(self):
        return self.holds


def _values(s) -> np.ndarray:
    return s.eigenvalues if isinstance(s, Spectrum) else np.asarray(s, dtype=float)


def spectrally_less(A, B, r: int = 0, slack: float = DELTA_CERT) -> PreorderVerdict:
    """Does ``lam_k(A) <= lam_{k+r}(B) + slack`` hold for every ``1 <= k <= n - r``?

    ``slack`` is on the permissive side, suitable for checking theorems that
    state non-strict inequalities.
    """
    a, b = _values(A), _values(B)
    if a.shape != b.shape:
        raise SizeMismatch(f"spectra of different sizes: {a.size} vs {b.size}")
    n = a.size
    if not 0 <= r <= n:
        raise BadShift(f"shift {r} outside 0..{n}")
    if n - r == 0:
        return PreorderVerdict(True, None, float("inf"), r)
    gaps = b[r:] - a[: n - r]
    bad = np.flatnonzero(gaps < -slack)
    failing = int(bad[0]) + 1 if bad.size else None
    return PreorderVerdict(failing is None, failing, float(gaps.min()), r)


def check_deletion_chain(MG: MagneticGraph, edge_ids: Iterable[int], slack: float = DELTA_CERT):
    """Verdicts for ``G - F <= G`` and ``G <=_r G - F`` with ``r = |F|``.

    The deleted graph keeps the potential on its surviving edges.
    """
    G = MG.graph
    drop = sorted({G.check_edge(e) for e in edge_ids})
    keep = [e for e in range(G.m) if e not in set(drop)]
    smaller = MagneticGraph(delete_edges(G, drop), MG.potential.restrict(keep))
    s_small, s_big = spectrum(smaller), spectrum(MG)
    return (
        spectrally_less(s_small, s_big, 0, slack),
        # a shift of n or more compares nothing
        spectrally_less(s_big, s_small, min(len(drop), G.n), slack),
    )


def check_deletion_interlacing(MG: MagneticGraph, e: int, slack: float = DELTA_CERT):
    """Single-edge interlacing ``G - e <= G <=_1 G - e``; returns both verdicts."""
    return check_deletion_chain(MG, [e], slack)
