"""Disjoint covers of two-coloured random hypergraphs.

A red/blue pair of k-uniform hypergraphs on a shared vertex set admits
disjoint covers when one vertex 2-colouring simultaneously hits every red
edge with a Red vertex and every blue edge with a Blue one.  The package
bundles samplers, exact solvers (incremental k=2 with witnesses, DPLL, brute
force), the list-colouring reduction, threshold analytics, and a Monte Carlo
experiment harness.
"""

from .core import (
    Assignment,
    BLUE,
    Colour,
    DchParseError,
    Edge,
    ListScheme,
    MODE_REPLACEMENT,
    MODE_SIMPLE,
    MODES,
    OddBicycleCertificate,
    RED,
    TwoColouredHypergraph,
    ValidationReport,
    build,
    canonicalize,
    read_instance,
    relabel,
    swap_colours,
    validate,
    verify_assignment,
    with_extra_edge,
    write_instance,
)
from .sampler import (
    SampleConfig,
    derive_seed,
    edge_sequence,
    sample,
    sample_lists,
    sample_pair_m,
    sample_pair_p,
)
from .solvergen import Decision, brute_force, count_all_covers, dpll, weighted_balanced_X
from .solver2 import (
    AuxiliaryDigraph,
    Decision2,
    GreedyResult,
    build_auxiliary_digraph,
    check_certificate,
    count_alternating_cycles,
    decide2,
    format_certificate,
    greedy_peel,
    has_even_alternating_cycle,
    parse_certificate,
)
from .reduction import (
    ListColouring,
    covers_to_colouring,
    export_dimacs,
    lists_to_hypergraphs,
    verify_list_colouring,
)
from .analytics import (
    FirstMomentRate,
    LaplaceReport,
    MomentParams,
    ThresholdConstants,
    alt_cycle_free_lower_bound,
    bicycle_expectation_bound,
    constants,
    expected_weighted_X,
    f_alpha,
    find_gamma,
    first_moment_rate,
    g_alpha,
    laplace_check,
    psi,
    second_moment_ratio,
)
from .experiments import (
    ExperimentConfig,
    FkgReport,
    LocateResult,
    MomentReport,
    ThresholdRecord,
    WidthRecord,
    estimate_probability,
    fkg_experiment,
    format_csv,
    locate_threshold,
    moment_validation,
    scan,
    sharpness_width,
    wilson_interval,
    write_csv,
)

__version__ = "0.1.0"
