//! Floating-point side: the conformal map, the Bessel-type limit function,
//! simultaneous complex root finding, limit predictions for the zeros and
//! the comparison with the limiting zero density.

mod checks;
mod density;
mod eval;
mod limits;
mod phi;
mod roots;
mod special;

pub use checks::{
    check_mehler_heine, check_outer_asymptotic, check_ratio_limit, eval_gaussian, GaussianRational,
    MehlerHeineReport, MehlerHeineRow, OuterPoint, OuterReport, RatioCheck,
};
pub use density::{density_compare, density_mass, integrate, limit_density, DensityReport};
pub use eval::{ComboEvaluator, MonomialEvaluator, Scaled};
pub use limits::{
    companion_zeros, non_real_outside_unit_disk, predict_zero_limits, verify_zero_limits,
    AsymptoticPrediction, CompanionZeros, LimitOutcome, LimitSample, PredictionKind, RealCount,
    Scaling, StructuralFailure, ZeroLimitReport, DEFAULT_LEFTMOST, DISK_MARGIN,
};
pub use phi::{outer_limit, phi_inverse, phi_map};
pub use roots::{
    aberth, approx_real_zeros, combo_roots, complex_roots, cross_validate, density_quantile, initial_guesses,
    nearly_real, sort_lex, validated_roots, AberthOptions,
};
pub use special::{bessel_zero_scaled, hyper01};

/// Double-precision complex number.
pub type ComplexF = num_complex::Complex64;
