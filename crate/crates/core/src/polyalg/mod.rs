//! Exact sparse polynomial arithmetic over ℤ: resultants, discriminants,
//! squarefree parts, the Weierstrass slice experiment and the symbolic
//! critical-value check.

mod critval;
mod poly;
mod resultant;
mod slice;
pub mod univariate;

pub use critval::{
    critical_value_ideal_check, critical_value_ideal_check_with, family_variables, IdealCheck,
};
pub use poly::{grlex, SparsePoly, Term};
pub use resultant::{discriminant, squarefree_part, sylvester_matrix, sylvester_resultant};
pub use slice::{
    sample_slice, slice_polynomial, slice_zdegree_for, weierstrass_slice_zdegree, SliceReport,
    SAMPLE_RANGE,
};
