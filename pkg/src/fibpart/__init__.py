"""Fibonacci partition counts, synchronized product automata, certified
growth constants, and generalized spectral radius experiments."""

from .automata import (
    Dfa,
    StateClass,
    accessible,
    accessible_product,
    berstel,
    berstel_step_matrices,
    classify_state,
    count_accepted,
    count_accepted_series,
    export_dot,
    is_aperiodic,
    is_strongly_connected,
    minimize,
    product,
    to_json_dict,
    transition_matrix,
    verify_block_structure,
    verify_transition_claims,
)
from .exactlin import (
    CertifiedRoot,
    ConvergenceError,
    InsufficientDataError,
    IntMatrix,
    IntPolynomial,
    NoRealRootError,
    SparseIntMatrix,
    char_poly,
    fit_annihilator,
    greatest_real_root,
    kron,
    kron_power,
    mat_vec,
    poly_divides,
    spectral_norm_2x2,
    spectral_radius_float,
    vec_mat,
)
from .gsr import (
    GsrEstimate,
    MatrixFamily,
    TrendSeries,
    berstel_family,
    kronecker_radius,
    rho_k,
    sqrt_phi,
    theorem2_trend,
    verify_word_bound,
    verify_z_bounds,
    word_product,
    z_matrix,
)
from .numeration import (
    canonical,
    count_partitions,
    count_partitions_transfer,
    cutoff_index,
    eval_f,
    fib,
    fib_upto,
    is_canonical,
    is_padded_canonical,
    partition_count_table,
    transfer_count_table,
)
from .powersums import (
    GOLDEN_RATIO,
    PowerSumSeries,
    power_sum_automaton,
    power_sum_direct,
    scaling_series,
    squeeze_check,
)
from .report import CheckResult, Report
from .spectral import (
    REFERENCE_GROWTH,
    LambdaRecord,
    compute_lambda,
    count_sequence,
    reference_polynomial,
    verify_rho_consistency,
    verify_table1,
)

__version__ = "0.1.0"
