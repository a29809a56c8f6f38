"""Discrete magnetic Laplacian spectra with spectral obstructions to
perfect matchings and Hamiltonian cycles."""

from .certificates import (
    Certificate,
    Strategy,
    SweepResult,
    certify_nonhamiltonian_via_cycle,
    certify_nonhamiltonian_via_matching,
    certify_nonmatchable,
    sweep_chord_fluxes,
    sweep_constant_potential,
    sweep_single_chord,
    verify_certificate,
)
from .combinatorics import find_hamiltonian_cycle, is_matchable, matching_number, maximum_matching
from .dml import (
    Spectrum,
    build_dml,
    cycle_graph,
    cycle_spectrum_closed_form,
    spectrum,
    spectrum_of,
    verify_eigenpairs,
)
from .graph import (
    Graph,
    delete_edge,
    from_edge_list,
    fundamental_cycle,
    is_connected,
    spanning_tree,
    spanning_tree_containing_matching,
)
from .magnetic import (
    Gauge,
    MagneticGraph,
    MagneticPotential,
    chord_fluxes,
    coboundary,
    constant_potential,
    flux,
    gauge_transform,
    is_gauge_equivalent,
    potential_from_chord_fluxes,
)
from .preorder import PreorderVerdict, check_deletion_interlacing, spectrally_less
from .theorems import verify_theorem_suite

__version__ = "0.1.0"
