"""Fairness-constrained exact label recovery on graphs via SDP relaxations."""

from .bounds import (
    BoundReport,
    epsilon1,
    epsilon2,
    lemma1_bound,
    recovery_probability_bound,
    weyl_bound,
)
from .graphs import (
    CheegerResult,
    Graph,
    complement_join,
    complete,
    edge_expansion,
    erdos_renyi,
    grid,
    laplacian,
    star,
)
from .model import (
    Instance,
    Observation,
    alpha,
    observe,
    sample_fair_attributes,
    sample_labels,
)
from .solver import (
    CertificateReport,
    SdpConfig,
    SdpSolution,
    brute_force,
    check_exact_recovery,
    dual_certificate,
    round_solution,
    solve_sdp,
)
from .spectral import (
    Spectrum,
    algebraic_multiplicity,
    eig_sym,
    fiedler_vector,
    grid_spectrum_closed_form,
    laplacian_gap_delta,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CertificateReport",
    "CheegerResult",
    "Graph",
    "Instance",
    "Observation",
    "SdpConfig",
    "SdpSolution",
    "Spectrum",
    "algebraic_multiplicity",
    "alpha",
    "brute_force",
    "check_exact_recovery",
    "complement_join",
    "complete",
    "dual_certificate",
    "edge_expansion",
    "eig_sym",
    "epsilon1",
    "epsilon2",
    "erdos_renyi",
    "fiedler_vector",
    "grid",
    "grid_spectrum_closed_form",
    "laplacian",
    "laplacian_gap_delta",
    "lemma1_bound",
    "observe",
    "recovery_probability_bound",
    "round_solution",
    "sample_fair_attributes",
    "sample_labels",
    "solve_sdp",
    "star",
    "weyl_bound",
]
