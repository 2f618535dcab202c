//! Symbolic replay of the critical-value identity for the family
//!
//! ```text
//! f = y³ − 3λ₀y + Σ_i (x_i^{3d} − 3dλ_i x_i) + x_n^{3d} − 3dλ_n x_n
//!     − (3d/(3d−1)) λ_n′ x_n^{3d−1} − 3λ(λ₀ y x_n^{2d} + d Σ_i λ_i x_i x_n^{3d−1})
//! ```
//!
//! with `i` ranging over `1..n−1`. On the critical locus
//! `f = −2λ₀y − (3d−1)λ_n x_n − λ_n′x_n^{3d−1}/(3d−1) − (3d−1)Σλ_i x_i`.
//! The check rewrites the difference with the three critical-point rules
//! until it vanishes or the step budget runs out.

use serde::Serialize;

use super::poly::SparsePoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum IdealCheck {
    Verified { steps: usize },
    Unresolved { steps: usize, residue: SparsePoly },
}

impl IdealCheck {
    pub fn is_verified(&self) -> bool {
        matches!(self, IdealCheck::Verified { .. })
    }
}

struct Family {
    n: usize,
    d: u32,
    names: Vec<String>,
}

impl Family {
    fn new(n: usize, d: u32) -> Self {
        let mut names = vec!["λ".to_string(), "λ0".to_string()];
        names.extend((1..n).map(|i| format!("λ{i}")));
        names.push(format!("λ{n}"));
        names.push(format!("λ{n}'"));
        names.push("y".into());
        names.extend((1..=n).map(|i| format!("x{i}")));
        Family { n, d, names }
    }

    fn vars(&self) -> Vec<&str> {
        self.names.iter().map(String::as_str).collect()
    }

    fn lam(&self) -> usize {
        0
    }

    fn lam0(&self) -> usize {
        1
    }

    /// `λ_i` for `1 ≤ i ≤ n−1`.
    fn lam_i(&self, i: usize) -> usize {
        1 + i
    }

    fn lam_n(&self) -> usize {
        self.n + 1
    }

    fn lam_n_prime(&self) -> usize {
        self.n + 2
    }

    fn y(&self) -> usize {
        self.n + 3
    }

    /// `x_i` for `1 ≤ i ≤ n`.
    fn x(&self, i: usize) -> usize {
        self.n + 3 + i
    }

    fn mono(&self, factors: &[(usize, u32)], c: i64) -> SparsePoly {
        let mut e = vec![0; self.names.len()];
        for &(v, k) in factors {
            e[v] += k;
        }
        SparsePoly::monomial(&self.vars(), e, c)
    }

    /// `(3d−1)·(f − value)` with the coefficient of `λ₀y` in the value
    /// expression set to `y_coefficient` (2 is the true identity).
    fn cleared_difference(&self, y_coefficient: i64) -> SparsePoly {
        let n = self.n;
        let d = self.d;
        let k = 3 * d as i64 - 1;
        let (e3d, e3d1, e2d) = (3 * d, 3 * d - 1, 2 * d);
        let xn = self.x(n);
        let mut f = self.mono(&[(self.y(), 3)], 1) + self.mono(&[(self.lam0(), 1), (self.y(), 1)], -3);
        for i in 1..n {
            f = f
                + self.mono(&[(self.x(i), e3d)], 1)
                + self.mono(&[(self.lam_i(i), 1), (self.x(i), 1)], -3 * d as i64);
        }
        f = f
            + self.mono(&[(xn, e3d)], 1)
            + self.mono(&[(self.lam_n(), 1), (xn, 1)], -3 * d as i64)
            + self.mono(&[(self.lam(), 1), (self.lam0(), 1), (self.y(), 1), (xn, e2d)], -3);
        for i in 1..n {
            f = f + self.mono(
                &[(self.lam(), 1), (self.lam_i(i), 1), (self.x(i), 1), (xn, e3d1)],
                -3 * d as i64,
            );
        }
        let mut e = self.mono(&[], k) * f
            + self.mono(&[(self.lam_n_prime(), 1), (xn, e3d1)], -3 * d as i64);

        e = e
            + self.mono(&[(self.lam0(), 1), (self.y(), 1)], k * y_coefficient)
            + self.mono(&[(self.lam_n(), 1), (xn, 1)], k * k)
            + self.mono(&[(self.lam_n_prime(), 1), (xn, e3d1)], 1);
        for i in 1..n {
            e = e + self.mono(&[(self.lam_i(i), 1), (self.x(i), 1)], k * k);
        }
        e
    }

    /// Leading power and replacement for each rewriting rule.
    fn rules(&self) -> Vec<(usize, u32, SparsePoly)> {
        let n = self.n;
        let d = self.d;
        let k = 3 * d as i64 - 1;
        let (e3d1, e3d2, e2d) = (3 * d - 1, 3 * d - 2, 2 * d);
        let xn = self.x(n);
        let mut rules = vec![(
            self.y(),
            2,
            self.mono(&[(self.lam0(), 1)], 1)
                + self.mono(&[(self.lam0(), 1), (self.lam(), 1), (xn, e2d)], 1),
        )];
        for i in 1..n {
            rules.push((
                self.x(i),
                e3d1,
                self.mono(&[(self.lam_i(i), 1)], 1)
                    + self.mono(&[(self.lam_i(i), 1), (self.lam(), 1), (xn, e3d1)], 1),
            ));
        }
        let mut last = self.mono(&[(self.lam_n(), 1)], 1)
            + self.mono(&[(self.lam_n_prime(), 1), (xn, e3d2)], 1)
            + self.mono(
                &[(self.lam(), 1), (self.lam0(), 1), (self.y(), 1), (xn, e2d - 1)],
                2,
            );
        for i in 1..n {
            last = last
                + self.mono(
                    &[(self.lam(), 1), (self.lam_i(i), 1), (self.x(i), 1), (xn, e3d2)],
                    k,
                );
        }
        rules.push((xn, e3d1, last));
        rules
    }
}

fn rewrite(
    family: &Family,
    mut expr: SparsePoly,
    max_steps: usize,
) -> IdealCheck {
    let rules = family.rules();
    let lam = family.lam();
    let mut steps = 0;
    loop {
        if expr.is_zero() {
            return IdealCheck::Verified { steps };
        }
        let pick = expr
            .terms()
            .filter_map(|(e, c)| {
                rules
                    .iter()
                    .position(|(v, k, _)| e[*v] >= *k)
                    .map(|r| (e.clone(), c.clone(), r))
            })
            .min_by(|a, b| {
                a.0[lam]
                    .cmp(&b.0[lam])
                    .then_with(|| super::poly::grlex(&b.0, &a.0))
            });
        let Some((e, c, r)) = pick else {
            return IdealCheck::Unresolved { steps, residue: expr };
        };
        if steps >= max_steps {
            return IdealCheck::Unresolved { steps, residue: expr };
        }
        let (v, k, rhs) = &rules[r];
        let mut rest = e.clone();
        rest[*v] -= k;
        let vars = family.vars();
        let old = SparsePoly::monomial(&vars, e, c.clone());
        let new = &SparsePoly::monomial(&vars, rest, c) * rhs;
        expr = &(&expr - &old) + &new;
        steps += 1;
    }
}

fn check_domain(n: usize, d: u32) -> Result<()> {
    if n == 0 || d == 0 {
        return Err(Error::Domain(format!(
            "critical-value check needs n ≥ 1 and d ≥ 1 (got n = {n}, d = {d})"
        )));
    }
    Ok(())
}

/// Rewrites `(3d−1)(f − value)` to zero using the critical-point equations.
pub fn critical_value_ideal_check(n: usize, d: u32, max_steps: usize) -> Result<IdealCheck> {
    critical_value_ideal_check_with(n, d, max_steps, 2)
}

/// As [`critical_value_ideal_check`] with a chosen coefficient of `λ₀y` in
/// the value expression.
pub fn critical_value_ideal_check_with(
    n: usize,
    d: u32,
    max_steps: usize,
    y_coefficient: i64,
) -> Result<IdealCheck> {
    check_domain(n, d)?;
    let family = Family::new(n, d);
    let expr = family.cleared_difference(y_coefficient);
    Ok(rewrite(&family, expr, max_steps))
}

/// Variable names of the symbolic family, in exponent order.
pub fn family_variables(n: usize) -> Vec<String> {
    Family::new(n, 1).names
}
