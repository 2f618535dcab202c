//! Euler numbers of projective spaces, hypersurfaces and complete
//! intersections, the discriminant degree formulas built on them, and the
//! stratification identities tying the two together.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::util::bigint_value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EulerKind {
    /// `ℙⁿ`.
    #[serde(rename = "pn")]
    ProjectiveSpace,
    /// Smooth degree-`d` hypersurface in `ℙⁿ`.
    #[serde(rename = "hyp")]
    Hypersurface,
    /// Smooth complete intersection of two degree-`d` hypersurfaces.
    #[serde(rename = "ci")]
    CompleteIntersection,
    /// Smooth member of `|3σ₀|`, a triple cover of `ℙⁿ` branched along degree `3d`.
    #[serde(rename = "H")]
    TripleCover,
    /// Smooth intersection of two members of `|3σ₀|`.
    #[serde(rename = "HH")]
    TripleCoverIntersection,
}

impl FromStr for EulerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pn" => Ok(EulerKind::ProjectiveSpace),
            "hyp" => Ok(EulerKind::Hypersurface),
            "ci" => Ok(EulerKind::CompleteIntersection),
            "H" | "h" => Ok(EulerKind::TripleCover),
            "HH" | "hh" => Ok(EulerKind::TripleCoverIntersection),
            other => Err(Error::Domain(format!("unknown Euler number kind `{other}`"))),
        }
    }
}

fn int(k: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(k.into())
}

fn e_pn(n: u32) -> BigRational {
    int(n + 1)
}

fn e_hyp(n: u32, d: u32) -> BigRational {
    let one_minus_d = int(1 - d as i64);
    e_pn(n) + (Pow::pow(&one_minus_d, n + 1) - int(1)) / int(d)
}

fn e_ci(n: u32, d: u32) -> BigRational {
    let t = Pow::pow(&int(1 - d as i64), n);
    e_pn(n) + int(n as i64 - 1) * &t + int(2) * (t - int(1)) / int(d)
}

/// Exact Euler number. The triple-cover kinds use the branch degree `3d`.
pub fn euler(kind: EulerKind, n: u32, d: u32) -> Result<BigRational> {
    if d == 0 {
        return Err(Error::Domain("Euler numbers need d ≥ 1".into()));
    }
    Ok(match kind {
        EulerKind::ProjectiveSpace => e_pn(n),
        EulerKind::Hypersurface => e_hyp(n, d),
        EulerKind::CompleteIntersection => e_ci(n, d),
        EulerKind::TripleCover => int(3) * e_pn(n) - int(2) * e_hyp(n, 3 * d),
        EulerKind::TripleCoverIntersection => int(3) * e_hyp(n, 3 * d) - int(2) * e_ci(n, 3 * d),
    })
}

/// Degrees of the discriminant `p`, of its z-discriminant `q`, and of the
/// pieces of `q` used in the bifurcation analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub n: u32,
    pub d: u32,
    pub deg_p: BigInt,
    pub deg_z_p: BigInt,
    pub deg_q: BigInt,
    pub wdeg_p: BigInt,
    pub wdeg_q: BigInt,
    pub deg_v_q: BigInt,
    pub deg_c: BigInt,
}

impl Serialize for DegreeReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_json::json!({
            "n": self.n,
            "d": self.d,
            "deg_p": bigint_value(&self.deg_p),
            "deg_z_p": bigint_value(&self.deg_z_p),
            "deg_q": bigint_value(&self.deg_q),
            "wdeg_p": bigint_value(&self.wdeg_p),
            "wdeg_q": bigint_value(&self.wdeg_q),
            "deg_v_q": bigint_value(&self.deg_v_q),
            "deg_c": bigint_value(&self.deg_c),
        })
        .serialize(s)
    }
}

impl fmt::Display for DegreeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} d={} deg_p={} deg_z_p={} deg_q={} wdeg_p={} wdeg_q={} deg_v_q={} deg_c={}",
            self.n,
            self.d,
            self.deg_p,
            self.deg_z_p,
            self.deg_q,
            self.wdeg_p,
            self.wdeg_q,
            self.deg_v_q,
            self.deg_c
        )
    }
}

pub fn degrees(n: u32, d: u32) -> Result<DegreeReport> {
    if n == 0 {
        return Err(Error::Domain(
            "degree formulas are not asserted at n = 0".into(),
        ));
    }
    if d == 0 {
        return Err(Error::Domain("degree formulas need d ≥ 1".into()));
    }
    let base = BigInt::from(3 * d - 1);
    let pow_n = Pow::pow(&base, n);
    let pow_n1 = Pow::pow(&base, n - 1);
    let two = BigInt::from(2);
    let six_d = BigInt::from(6 * d);
    let deg_z_p = &two * &pow_n;
    let tail = &deg_z_p - BigInt::one();
    Ok(DegreeReport {
        n,
        d,
        deg_p: BigInt::from(n + 1) * &deg_z_p,
        deg_q: BigInt::from(2 * n + 1) * &deg_z_p * &tail,
        wdeg_p: &six_d * &pow_n,
        wdeg_q: &six_d * &pow_n * &tail,
        deg_v_q: &six_d * &pow_n1 * &tail,
        deg_c: (BigInt::from(2 * n) * &base - BigInt::one()) * &two * &pow_n1 * &tail,
        deg_z_p,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalanceViolation {
    pub n: u32,
    pub d: u32,
    pub identity: &'static str,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    pub n_max: u32,
    pub d_max: u32,
    pub checks: usize,
    pub violations: Vec<BalanceViolation>,
}

impl BalanceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, for every `1 ≤ n ≤ n_max` and `1 ≤ d ≤ d_max`, that the degree
/// formulas agree with the Euler-number stratifications and with each other.
pub fn verify_balance(n_max: u32, d_max: u32) -> Result<BalanceReport> {
    if n_max == 0 || d_max == 0 {
        return Err(Error::Domain("balance bounds must be at least 1".into()));
    }
    let mut report = BalanceReport {
        n_max,
        d_max,
        checks: 0,
        violations: Vec::new(),
    };
    let mut check = |n: u32, d: u32, identity: &'static str, lhs: BigRational, rhs: BigRational| {
        report.checks += 1;
        if lhs != rhs {
            report.violations.push(BalanceViolation {
                n,
                d,
                identity,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    };
    for n in 1..=n_max {
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        for d in 1..=d_max {
            let r = degrees(n, d)?;
            let e = |k| euler(k, n, 3 * d);
            let e_n = euler(EulerKind::ProjectiveSpace, n, d)?;
            let e_n1 = euler(EulerKind::ProjectiveSpace, n - 1, d)?;
            let e_hyp = e(EulerKind::Hypersurface)?;
            let e_hyp1 = euler(EulerKind::Hypersurface, n - 1, 3 * d)?;
            let e_ci = e(EulerKind::CompleteIntersection)?;

            let by_euler = &sign * (int(2) * &e_n - int(4) * &e_hyp + int(2) * &e_ci);
            check(n, d, "deg_p_stratification", by_euler, int(r.deg_p.clone()));

            let by_euler =
                &sign * (int(2) * &e_n - int(2) * &e_n1 - int(2) * &e_hyp + int(2) * &e_hyp1);
            check(n, d, "deg_z_p_stratification", by_euler, int(r.deg_z_p.clone()));

            let one = BigInt::one();
            let q = (&r.deg_z_p - &one) * (BigInt::from(2) * &r.deg_p - &r.deg_z_p);
            check(n, d, "deg_q_product", int(q), int(r.deg_q.clone()));

            let wq = &r.wdeg_p * (&r.deg_z_p - &one);
            check(n, d, "wdeg_q_product", int(wq), int(r.wdeg_q.clone()));

            check(n, d, "deg_c_difference", int(&r.deg_q - &r.deg_v_q), int(r.deg_c.clone()));

            if n >= 2 {
                let lower = degrees(n - 1, d)?;
                let lead = BigInt::from(3 * d - 1) * &lower.deg_p;
                check(n, d, "leading_coefficient_degree", int(&r.deg_p - &r.deg_z_p), int(lead));
            }
        }
    }
    Ok(report)
}
