"""Normalized distance Laplacian spectra of connected graphs.

Thin python layer over the C++ core: graph construction and graph6 parsing,
all-pairs distances, the normalized distance Laplacian and its spectrum,
Rayleigh-quotient objectives, exhaustive verification and barbell sweeps.
"""

from ._ndl import (  # noqa: F401
    BarbellParams,
    BoundAuditReport,
    ConditionCheck,
    DiameterReportRow,
    DisconnectedGraphError,
    DistanceData,
    EnumerationSummary,
    Graph,
    HarmonicVector,
    HillClimbResult,
    ObjectiveReport,
    ParseError,
    SignPartition,
    Spectrum,
    SweepMode,
    SweepRecord,
    SymmetricMatrix,
    __version__,
    all_pairs_distances,
    barbell_sweep,
    bound_audit,
    build_ndl,
    condition_check,
    diameter_lower_bound_report,
    eigen_decompose,
    encode_graph6,
    enumerate_verify,
    evaluate_objectives,
    fit_gap_constant,
    harmonic,
    hill_climb,
    kernel_residual,
    make_barbell,
    make_complete,
    make_cycle,
    make_kpk,
    make_path,
    ndl_spectrum,
    obj0,
    obj1,
    obj2,
    obj3,
    pair_sum_closed_form,
    pair_sum_direct,
    paper_family_params,
    parse_edge_list,
    parse_graph6,
    partial_transmissions,
    random_connected,
    rayleigh_sos,
    sign_partition,
    verify_graphs,
)
