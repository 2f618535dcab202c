//! Critical values of the linearly perturbed Brieskorn–Pham polynomial and
//! numerical continuation of critical points in the asymptotic family.

mod family;
mod values;

pub use family::{
    continue_critical_points, lambda_crit, separated_critical_points, verify_largest,
    Continuation, ContinuationFailure, CriticalPoint, GParams, LargestReport,
};
pub use values::{
    brute_force_values, closed_form_values, multisets_match, pencil_roots, verify_circles,
    verify_hl_match, verify_root_of_unity_invariance, CircleReport, CriticalValueTable,
    HLParams, InvarianceReport, MatchReport, TableEntry, CANONICAL_RATIO,
};
