//! Certified real-root isolation and counting, interlacing, explicit
//! thresholds and the real-rootedness preservation tester.

mod certify;
mod claims;
mod interlace;
mod isolate;
mod preservation;
mod report;
mod squarefree;
mod sturm;
mod thresholds;
mod window;

pub use certify::{certified_report, certify_by_sign_changes, SignCertificate};
pub use interlace::{
    check_interlace, check_interlace_sets, count_gaps_with_zero, interlace_from_reports, is_real_rooted,
    merge_real_zeros, obreshkov_sample, InterlaceVerdict, InterlaceWitness, Side,
};
pub use isolate::{isolate_real_roots, rational_roots, refine_root, simplest_between, RootInterval};
pub use report::{analyze_zeros, CutCount, RealRoot, ZeroReport};
pub use squarefree::{square_free_decompose, square_free_part};
pub use sturm::{sturm_count, sturm_count_all, SturmChain};
pub use thresholds::{
    desk_verifiable, k0_sign_failures, monic_thresholds, standard_value_at_zero, threshold_real_simple,
    threshold_k0, threshold_monic,
};
pub use preservation::{
    apply_laguerre_map, test_real_rooted_preservation, PreservationReport, ViolatorOutcome,
};
pub use window::{onset, scan_window, scan_window_with, WindowRecord};
pub use claims::{
    applicable_claims, evaluate_claim, prop_holds, Claim, ClaimKind, ClaimOutcome, Onset, Prop,
    Requirement, RequirementOutcome,
};
