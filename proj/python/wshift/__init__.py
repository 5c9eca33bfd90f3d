"""Similarity of bilateral weighted shifts to normal operators."""

from ._wshift import (
    InvalidSequence,
    ParseError,
    WeightSequence,
    analyze,
    basis_decay_profile,
    candidate_c,
    decide_similarity,
    dichotomy_check,
    inverse_power_norm_exact,
    is_bounded,
    is_normal_shift,
    lemma1_harness,
    log_window_product,
    normality_residual,
    operator_norm,
    parse_sequence,
    power_norm_exact,
    run_cli,
    scaled_window_stats,
    stab_normal_diag,
    stab_similarity_consistency,
    sznagy_check,
    truncation,
    verify_similarity,
    window_product,
    wrap,
    wrap_spectrum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
