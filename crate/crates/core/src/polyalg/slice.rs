//! The z-pencil on the Weierstrass slice: `Δ(x, z) = 4B³ + 27(C + z·x^{3d})²`
//! for one-variable `B` of degree `2d` and `C` of degree `3d`.
//!
//! `disc_x(Δ)` vanishes wherever `B` and `C + z·x^{3d}` share a root, even
//! though the curve is smooth there; that contributes `Res_x(B, C + z·x^{3d})³`.
//! The report carries the raw degree, the degree after removing that factor,
//! and the degree of the squarefree part.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::poly::SparsePoly;
use super::resultant::{discriminant, squarefree_part, sylvester_resultant};
use crate::error::{Error, Result};

const VARS: [&str; 2] = ["x", "z"];
const X: usize = 0;
const Z: usize = 1;

/// Coefficient range for sampled `B` and `C`.
pub const SAMPLE_RANGE: i64 = 9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SliceReport {
    pub d: u32,
    pub seed: Option<u64>,
    /// Coefficients of `B`, constant term first.
    pub b: Vec<i64>,
    pub c: Vec<i64>,
    /// `None` when `disc_x(Δ)` is identically zero.
    pub raw_z_degree: Option<u32>,
    /// z-degree of `Res_x(B, C + z·x^{3d})`.
    pub contact_z_degree: Option<u32>,
    /// z-degree of `disc_x(Δ) / Res_x(B, C + z·x^{3d})³`.
    pub z_degree: Option<u32>,
    pub squarefree_z_degree: Option<u32>,
    /// Leading z-coefficient of the corrected polynomial.
    #[serde(with = "crate::util::bigint_option")]
    pub leading_coefficient: Option<BigInt>,
    pub discriminant: SparsePoly,
}

/// Samples `B` and `C` with nonzero leading coefficients from `seed`.
pub fn sample_slice(d: u32, seed: u64) -> (Vec<i64>, Vec<i64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |deg: u32| -> Vec<i64> {
        let mut c: Vec<i64> = (0..=deg)
            .map(|_| rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE))
            .collect();
        while c[deg as usize] == 0 {
            c[deg as usize] = rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE);
        }
        c
    };
    let b = draw(2 * d);
    let c = draw(3 * d);
    (b, c)
}

fn in_x(coeffs: &[i64]) -> SparsePoly {
    let vars: Vec<String> = VARS.iter().map(|s| s.to_string()).collect();
    let c: Vec<BigInt> = coeffs.iter().map(|&k| BigInt::from(k)).collect();
    SparsePoly::from_univariate(&vars, X, &c)
}

/// `Δ(x, z)` for the given coefficient lists.
pub fn slice_polynomial(d: u32, b: &[i64], c: &[i64]) -> SparsePoly {
    let bp = in_x(b);
    let pencil = &in_x(c) + &SparsePoly::monomial(&VARS, vec![3 * d, 1], 1);
    &(&SparsePoly::constant(&VARS, 4) * &bp.pow(3)) + &(&SparsePoly::constant(&VARS, 27) * &pencil.pow(2))
}

/// The slice experiment on explicit `B`, `C`.
pub fn slice_zdegree_for(d: u32, b: &[i64], c: &[i64]) -> Result<SliceReport> {
    if d == 0 || d % 2 == 1 {
        return Err(Error::Domain(format!("the Weierstrass slice needs even d ≥ 2 (got {d})")));
    }
    let delta = slice_polynomial(d, b, c);
    let disc = discriminant(&delta, X)?;
    let mut report = SliceReport {
        d,
        seed: None,
        b: b.to_vec(),
        c: c.to_vec(),
        raw_z_degree: disc.degree_in(Z),
        contact_z_degree: None,
        z_degree: None,
        squarefree_z_degree: None,
        leading_coefficient: None,
        discriminant: disc.clone(),
    };
    if disc.is_zero() {
        return Ok(report);
    }
    report.squarefree_z_degree = squarefree_part(&disc, Z)?.degree_in(Z);

    let bp = in_x(b);
    if bp.is_zero() {
        return Ok(report);
    }
    let pencil = &in_x(c) + &SparsePoly::monomial(&VARS, vec![3 * d, 1], 1);
    let contact = sylvester_resultant(&bp, &pencil, X)?;
    report.contact_z_degree = contact.degree_in(Z);
    if let Ok(corrected) = disc.div_exact(&contact.pow(3)) {
        report.z_degree = corrected.degree_in(Z);
        report.leading_coefficient = corrected
            .coefficients_in(Z)
            .last()
            .map(|lc| lc.coefficient(&[0, 0]));
    }
    Ok(report)
}

/// Samples `B`, `C` from `seed` and runs the slice experiment.
pub fn weierstrass_slice_zdegree(d: u32, seed: u64) -> Result<SliceReport> {
    if d == 0 || d % 2 == 1 {
        return Err(Error::Domain(format!("the Weierstrass slice needs even d ≥ 2 (got {d})")));
    }
    let (b, c) = sample_slice(d, seed);
    let mut r = slice_zdegree_for(d, &b, &c)?;
    r.seed = Some(seed);
    Ok(r)
}

impl SliceReport {
    pub fn is_degenerate(&self) -> bool {
        self.discriminant.is_zero()
    }

    pub fn raw_matches_correction(&self) -> bool {
        match (self.raw_z_degree, self.contact_z_degree, self.z_degree) {
            (Some(raw), Some(contact), Some(z)) => raw == z + 3 * contact,
            _ => false,
        }
    }
}
