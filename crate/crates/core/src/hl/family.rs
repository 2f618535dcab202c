//! The one-parameter family
//!
//! ```text
//! f = y³ − 3λ₀y + Σ_i (x_i^{3d} − 3dλ_i x_i) + x_n^{3d} − 3dλ_n x_n
//!     − (3d/(3d−1)) λ_n′ x_n^{3d−1} − 3λ(λ₀ y x_n^{2d} + d Σ_i λ_i x_i x_n^{3d−1})
//! ```
//!
//! Critical points are tracked from `λ = 0`, where the system separates, by
//! Newton continuation on the scaled gradient
//!
//! ```text
//! G_y = y² − λ₀(1 + λx_n^{2d})
//! G_i = x_i^{3d−1} − λ_i(1 + λx_n^{3d−1})
//! G_n = x_n^{3d−1} − λ_n − λ_n′x_n^{3d−2} − λ(2λ₀ y x_n^{2d−1} + (3d−1)Σλ_i x_i x_n^{3d−2})
//! ```

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

const NEWTON_TOL: f64 = 1e-12;
const ACCEPT_TOL: f64 = 1e-10;
const MAX_NEWTON: usize = 40;
const MAX_HALVINGS: usize = 30;
const STEPS_PER_CRIT: f64 = 200.0;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GParams {
    pub n: usize,
    pub d: u32,
    /// Deformation parameter `λ`.
    pub lambda: f64,
    pub lambda0: f64,
    /// `λ_1, …, λ_{n−1}`.
    pub lambda_i: Vec<f64>,
    pub lambda_n: f64,
    pub lambda_n_prime: f64,
}

impl GParams {
    pub fn new(
        n: usize,
        d: u32,
        lambda0: f64,
        lambda_i: Vec<f64>,
        lambda_n: f64,
        lambda_n_prime: f64,
    ) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::Domain(format!(
                "the family needs n ≥ 1 and d ≥ 1 (got n = {n}, d = {d})"
            )));
        }
        if lambda_i.len() != n - 1 {
            return Err(Error::DimensionMismatch(format!(
                "{} middle coefficients for n = {n}",
                lambda_i.len()
            )));
        }
        Ok(GParams {
            n,
            d,
            lambda: 0.0,
            lambda0,
            lambda_i,
            lambda_n,
            lambda_n_prime,
        })
    }

    /// Positive parameters drawn from `seed`: `λ₀, λ_i, λ_n ∈ [0.5, 2]` and
    /// `λ_n′ ∈ [0, 0.5]`.
    pub fn sample(n: usize, d: u32, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lambda0 = rng.gen_range(0.5..=2.0);
        let lambda_i = (1..n).map(|_| rng.gen_range(0.5..=2.0)).collect();
        let lambda_n = rng.gen_range(0.5..=2.0);
        let lambda_n_prime = rng.gen_range(0.0..=0.5);
        GParams::new(n, d, lambda0, lambda_i, lambda_n, lambda_n_prime)
    }

    pub fn with_lambda(&self, lambda: f64) -> Self {
        GParams {
            lambda,
            ..self.clone()
        }
    }

    fn m(&self) -> i32 {
        3 * self.d as i32 - 1
    }

    /// `1 − 2λ^{3/2}λ₀^{3/2} − (3d−1)λ^{3d/(3d−1)} Σ_i λ_i^{3d/(3d−1)}`.
    pub fn leading_factor(&self, lambda: f64) -> f64 {
        let m = self.m() as f64;
        let e = 3.0 * self.d as f64 / m;
        let s: f64 = self.lambda_i.iter().map(|l| l.powf(e)).sum();
        1.0 - 2.0 * lambda.powf(1.5) * self.lambda0.powf(1.5) - m * lambda.powf(e) * s
    }

    /// `f` at a point `(y, x_1, …, x_n)`.
    pub fn value(&self, p: &[Complex64]) -> Complex64 {
        let (n, d) = (self.n, self.d);
        let d3 = (3 * d) as f64;
        let (y, xn) = (p[0], p[n]);
        let mut f = y.powu(3) - 3.0 * self.lambda0 * y;
        let mut mixed = self.lambda0 * y * xn.powu(2 * d);
        for (&x, &l) in p[1..n].iter().zip(&self.lambda_i) {
            f += x.powu(3 * d) - d3 * l * x;
            mixed += d as f64 * l * x * xn.powu(3 * d - 1);
        }
        f + xn.powu(3 * d)
            - d3 * self.lambda_n * xn
            - d3 / (d3 - 1.0) * self.lambda_n_prime * xn.powu(3 * d - 1)
            - 3.0 * self.lambda * mixed
    }

    /// The critical-value expression `−2λ₀y − (3d−1)λ_n x_n − λ_n′x_n^{3d−1}/(3d−1) − (3d−1)Σλ_i x_i`.
    pub fn value_by_identity(&self, p: &[Complex64]) -> Complex64 {
        let m = self.m() as f64;
        let xn = p[self.n];
        let mut v = -2.0 * self.lambda0 * p[0]
            - m * self.lambda_n * xn
            - self.lambda_n_prime * xn.powu(3 * self.d - 1) / m;
        for (&x, &l) in p[1..self.n].iter().zip(&self.lambda_i) {
            v -= m * l * x;
        }
        v
    }

    /// Scaled gradient `(G_y, G_1, …, G_n)`.
    pub fn gradient(&self, p: &[Complex64]) -> Vec<Complex64> {
        let (n, d) = (self.n, self.d);
        let m = self.m() as f64;
        let lam = self.lambda;
        let (y, xn) = (p[0], p[n]);
        let mut g = Vec::with_capacity(n + 1);
        g.push(y * y - self.lambda0 * (1.0 + lam * xn.powu(2 * d)));
        let mut coupling = 2.0 * self.lambda0 * y * xn.powu(2 * d - 1);
        for (&x, &l) in p[1..n].iter().zip(&self.lambda_i) {
            g.push(x.powu(3 * d - 1) - l * (1.0 + lam * xn.powu(3 * d - 1)));
            coupling += m * l * x * xn.powu(3 * d - 2);
        }
        g.push(
            xn.powu(3 * d - 1)
                - self.lambda_n
                - self.lambda_n_prime * xn.powu(3 * d - 2)
                - lam * coupling,
        );
        g
    }

    pub fn jacobian(&self, p: &[Complex64]) -> DMatrix<Complex64> {
        let (n, d) = (self.n, self.d);
        let m = self.m() as f64;
        let lam = self.lambda;
        let (y, xn) = (p[0], p[n]);
        let mut j = DMatrix::from_element(n + 1, n + 1, Complex64::new(0.0, 0.0));
        j[(0, 0)] = 2.0 * y;
        j[(0, n)] = -lam * self.lambda0 * (2 * d) as f64 * xn.powu(2 * d - 1);
        let mut dn = m * xn.powu(3 * d - 2)
            - (m - 1.0) * self.lambda_n_prime * xn.powu(3 * d - 3)
            - lam * 2.0 * self.lambda0 * y * (2 * d - 1) as f64 * xn.powu(2 * d - 2);
        for i in 1..n {
            let l = self.lambda_i[i - 1];
            j[(i, i)] = m * p[i].powu(3 * d - 2);
            j[(i, n)] = -lam * l * m * xn.powu(3 * d - 2);
            j[(n, i)] = -lam * m * l * xn.powu(3 * d - 2);
            dn -= lam * m * (m - 1.0) * l * p[i] * xn.powu(3 * d - 3);
        }
        j[(n, 0)] = -2.0 * lam * self.lambda0 * xn.powu(2 * d - 1);
        j[(n, n)] = dn;
        j
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Smallest positive root of [`GParams::leading_factor`], by bisection.
pub fn lambda_crit(g: &GParams) -> Result<f64> {
    if g.lambda0 < 0.0 || g.lambda_i.iter().any(|&l| l < 0.0) {
        return Err(Error::Precondition(
            "λ₀ and λ_i must be nonnegative reals".into(),
        ));
    }
    let mut hi = 1.0;
    while g.leading_factor(hi) > 0.0 {
        hi *= 2.0;
        if hi > 1e12 {
            return Err(Error::NoSignChange { lo: 0.0, hi });
        }
    }
    let mut lo = 0.0;
    while hi - lo > 1e-12 * hi {
        let mid = 0.5 * (lo + hi);
        if g.leading_factor(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Roots of `x^{m} − a·x^{m−1} − b` from the companion matrix, polished by Newton.
fn last_coordinate_roots(m: usize, a: f64, b: f64) -> Vec<Complex64> {
    let mut c = DMatrix::<f64>::zeros(m, m);
    for i in 1..m {
        c[(i, i - 1)] = 1.0;
    }
    c[(0, m - 1)] = b;
    c[(m - 1, m - 1)] = a;
    let poly = |x: Complex64| x.powu(m as u32) - a * x.powu(m as u32 - 1) - b;
    let dpoly = |x: Complex64| {
        m as f64 * x.powu(m as u32 - 1)
            - if m > 1 { a * (m - 1) as f64 * x.powu(m as u32 - 2) } else { Complex64::new(0.0, 0.0) }
    };
    c.complex_eigenvalues()
        .iter()
        .map(|&z0| {
            let mut z = z0;
            for _ in 0..5 {
                let dz = poly(z) / dpoly(z);
                if !dz.is_finite() {
                    break;
                }
                z -= dz;
            }
            z
        })
        .collect()
}

fn roots_of(v: f64, m: u32) -> Vec<Complex64> {
    let r = v.abs().powf(1.0 / m as f64);
    let theta = if v < 0.0 { std::f64::consts::PI } else { 0.0 };
    (0..m)
        .map(|k| {
            Complex64::from_polar(r, (theta + 2.0 * std::f64::consts::PI * k as f64) / m as f64)
        })
        .collect()
}

/// Critical points at `λ = 0`; the first one is the all-positive point when
/// the parameters are positive.
pub fn separated_critical_points(g: &GParams) -> Vec<Vec<Complex64>> {
    let m = 3 * g.d - 1;
    let mut ys = roots_of(g.lambda0, 2);
    ys.sort_by(|a, b| b.re.total_cmp(&a.re));
    let mut lasts = last_coordinate_roots(m as usize, g.lambda_n_prime, g.lambda_n);
    lasts.sort_by(|a, b| b.re.total_cmp(&a.re).then(a.im.abs().total_cmp(&b.im.abs())));
    let mut points: Vec<Vec<Complex64>> = ys.into_iter().map(|y| vec![y]).collect();
    for i in 1..g.n {
        let xs = roots_of(g.lambda_i[i - 1], m);
        points = points
            .into_iter()
            .flat_map(|p| {
                xs.iter().map(move |&x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    points
        .into_iter()
        .flat_map(|p| {
            lasts.iter().map(move |&x| {
                let mut q = p.clone();
                q.push(x);
                q
            })
        })
        .collect()
}

fn newton(g: &GParams, start: &[Complex64]) -> Option<Vec<Complex64>> {
    let mut p = start.to_vec();
    for _ in 0..MAX_NEWTON {
        let r = g.gradient(&p);
        if norm(&r) < NEWTON_TOL {
            return Some(p);
        }
        let rhs = DVector::from_iterator(r.len(), r.into_iter().map(|z| -z));
        let step = g.jacobian(&p).lu().solve(&rhs)?;
        for (x, dx) in p.iter_mut().zip(step.iter()) {
            *x += dx;
        }
        if p.iter().any(|z| !z.is_finite()) {
            return None;
        }
    }
    (norm(&g.gradient(&p)) < ACCEPT_TOL).then_some(p)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalPoint {
    pub seed: usize,
    #[serde(with = "crate::util::complex_list")]
    pub coordinates: Vec<Complex64>,
    #[serde(with = "crate::util::complex")]
    pub value: Complex64,
    #[serde(with = "crate::util::complex")]
    pub value_by_identity: Complex64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContinuationFailure {
    pub seed: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Continuation {
    pub lambda: f64,
    pub lambda_crit: f64,
    pub seeds: usize,
    pub points: Vec<CriticalPoint>,
    pub failures: Vec<ContinuationFailure>,
}

impl Continuation {
    pub fn all_succeeded(&self) -> bool {
        self.failures.is_empty() && self.points.len() == self.seeds
    }

    /// Largest `|f(p) − value_by_identity(p)|` over the continued points.
    pub fn identity_error(&self) -> f64 {
        self.points
            .iter()
            .map(|p| (p.value - p.value_by_identity).norm())
            .fold(0.0, f64::max)
    }
}

fn track(g: &GParams, seed: &[Complex64], target: f64, h0: f64) -> std::result::Result<Vec<Complex64>, String> {
    let mut p = seed.to_vec();
    let mut lam = 0.0;
    let mut h = h0;
    let mut halvings = 0;
    while lam < target {
        let next = (lam + h).min(target);
        match newton(&g.with_lambda(next), &p) {
            Some(q) => {
                p = q;
                lam = next;
                h = h0;
                halvings = 0;
            }
            None => {
                halvings += 1;
                if halvings > MAX_HALVINGS {
                    return Err(format!("Newton diverged near λ = {lam:.6e}"));
                }
                h *= 0.5;
            }
        }
    }
    newton(&g.with_lambda(target), &p).ok_or_else(|| "final refinement failed".to_string())
}

/// Tracks every separated critical point from `λ = 0` to `target`.
pub fn continue_critical_points(g: &GParams, target: f64) -> Result<Continuation> {
    let crit = lambda_crit(g)?;
    if !(0.0..0.9 * crit).contains(&target) {
        return Err(Error::Precondition(format!(
            "λ = {target} must lie in [0, 0.9·λ_crit) = [0, {:.6})",
            0.9 * crit
        )));
    }
    let seeds = separated_critical_points(g);
    let h0 = crit / STEPS_PER_CRIT;
    let at = g.with_lambda(target);
    let mut points = Vec::new();
    let mut failures = Vec::new();
    for (k, seed) in seeds.iter().enumerate() {
        match track(g, seed, target, h0) {
            Ok(c) => {
                let residual = norm(&at.gradient(&c));
                points.push(CriticalPoint {
                    seed: k,
                    value: at.value(&c),
                    value_by_identity: at.value_by_identity(&c),
                    residual,
                    coordinates: c,
                });
            }
            Err(reason) => failures.push(ContinuationFailure { seed: k, reason }),
        }
    }
    Ok(Continuation {
        lambda: target,
        lambda_crit: crit,
        seeds: seeds.len(),
        points,
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LargestReport {
    pub holds: bool,
    /// The distinguished point stays in the positive real orthant.
    pub positive: bool,
    /// Its pencil root `−f` has the largest real part.
    pub largest_real_part: bool,
    /// Its critical value has the largest modulus.
    pub largest_modulus: bool,
    #[serde(with = "crate::util::complex")]
    pub distinguished_value: Complex64,
    /// Smallest gap `−f(p*) − max Re(−f(p))` over the other points.
    pub margin: f64,
    pub continuation: Continuation,
}

/// Continues all critical points and compares the one seeded at the
/// all-positive point with the rest.
pub fn verify_largest(g: &GParams, target: f64, tol: f64) -> Result<LargestReport> {
    if !(g.lambda0 > 0.0
        && g.lambda_n > 0.0
        && g.lambda_n_prime >= 0.0
        && g.lambda_i.iter().all(|&l| l > 0.0))
    {
        return Err(Error::Precondition(
            "needs λ₀, λ_i, λ_n positive and λ_n′ nonnegative".into(),
        ));
    }
    let continuation = continue_critical_points(g, target)?;
    if !continuation.all_succeeded() {
        let f = &continuation.failures[0];
        return Err(Error::Continuation {
            point: f.seed,
            reason: f.reason.clone(),
        });
    }
    let star = continuation
        .points
        .iter()
        .find(|p| p.seed == 0)
        .expect("seed 0 continued");
    let positive = star
        .coordinates
        .iter()
        .all(|z| z.re > 0.0 && z.im.abs() <= tol * z.re.max(1.0));
    let top = -star.value;
    let others = continuation.points.iter().filter(|p| p.seed != 0);
    let margin = others
        .clone()
        .map(|p| top.re - (-p.value).re)
        .fold(f64::INFINITY, f64::min);
    let largest_real_part = margin >= -tol;
    let largest_modulus = others
        .map(|p| p.value.norm())
        .all(|r| star.value.norm() >= r - tol);
    Ok(LargestReport {
        holds: positive && largest_real_part && largest_modulus,
        positive,
        largest_real_part,
        largest_modulus,
        distinguished_value: star.value,
        margin,
        continuation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple() -> GParams {
        GParams::new(1, 1, 1.0, vec![], 1.0, 0.1).unwrap()
    }

    #[test]
    fn critical_parameter_closed_forms() {
        let g = simple();
        let crit = lambda_crit(&g).unwrap();
        assert!((crit - 0.5f64.powf(2.0 / 3.0)).abs() < 1e-10);

        for d in [1u32, 2] {
            let h = GParams::new(2, d, 0.0, vec![1.0], 1.0, 0.1).unwrap();
            let m = (3 * d - 1) as f64;
            let want = (1.0 / m).powf(m / (3.0 * d as f64));
            assert!((lambda_crit(&h).unwrap() - want).abs() < 1e-10);
        }

        let bigger = GParams::new(1, 1, 4.0, vec![], 1.0, 0.1).unwrap();
        assert!(lambda_crit(&bigger).unwrap() < crit);

        let none = GParams::new(1, 1, 0.0, vec![], 1.0, 0.1).unwrap();
        assert!(matches!(lambda_crit(&none), Err(Error::NoSignChange { .. })));
    }

    #[test]
    fn zero_target_returns_seeds() {
        let g = simple();
        let c = continue_critical_points(&g, 0.0).unwrap();
        let seeds = separated_critical_points(&g);
        assert!(c.all_succeeded());
        for p in &c.points {
            assert!(norm(
                &p.coordinates
                    .iter()
                    .zip(&seeds[p.seed])
                    .map(|(a, b)| a - b)
                    .collect::<Vec<_>>()
            ) < 1e-12);
        }
    }

    #[test]
    fn continuation_preserves_count_and_identity() {
        let g = simple();
        let c = continue_critical_points(&g, 0.1).unwrap();
        assert!(c.all_succeeded());
        assert_eq!(c.points.len(), 4);
        assert!(c.identity_error() < 1e-8);
        assert!(c.points.iter().all(|p| p.residual < 1e-10));
    }

    #[test]
    fn jacobian_matches_finite_differences() {
        let g = GParams::new(2, 2, 0.7, vec![0.4], 0.9, 0.3).unwrap().with_lambda(0.05);
        let p = vec![
            Complex64::new(0.8, 0.1),
            Complex64::new(0.6, -0.2),
            Complex64::new(1.1, 0.3),
        ];
        let j = g.jacobian(&p);
        let h = 1e-7;
        for col in 0..3 {
            let mut q = p.clone();
            q[col] += h;
            let (a, b) = (g.gradient(&q), g.gradient(&p));
            for row in 0..3 {
                let fd = (a[row] - b[row]) / h;
                assert!((fd - j[(row, col)]).norm() < 1e-5, "({row},{col})");
            }
        }
    }

    #[test]
    fn gradient_matches_scaled_derivative_of_value() {
        let g = GParams::new(2, 1, 0.7, vec![0.4], 0.9, 0.3).unwrap().with_lambda(0.05);
        let p = vec![
            Complex64::new(0.8, 0.1),
            Complex64::new(0.6, -0.2),
            Complex64::new(1.1, 0.3),
        ];
        let scale = [3.0, 3.0, 3.0];
        let h = 1e-7;
        let grad = g.gradient(&p);
        for k in 0..3 {
            let mut q = p.clone();
            q[k] += h;
            let fd = (g.value(&q) - g.value(&p)) / h;
            assert!((fd / scale[k] - grad[k]).norm() < 1e-5, "coordinate {k}");
        }
    }

    #[test]
    fn distinguished_point_is_largest() {
        let g = simple();
        let at_zero = verify_largest(&g, 0.0, 1e-9).unwrap();
        assert!(at_zero.holds);
        let crit = lambda_crit(&g).unwrap();
        let mid = verify_largest(&g, 0.5 * crit, 1e-9).unwrap();
        assert!(mid.holds, "{mid:?}");
        let bad = GParams::new(1, 1, 1.0, vec![], -1.0, 0.1).unwrap();
        assert!(matches!(verify_largest(&bad, 0.1, 1e-9), Err(Error::Precondition(_))));
    }

    #[test]
    fn target_out_of_regime_is_rejected() {
        let g = simple();
        let crit = lambda_crit(&g).unwrap();
        assert!(continue_critical_points(&g, 0.95 * crit).is_err());
    }

    #[test]
    fn sampled_parameters_satisfy_largest() {
        for n in [1, 2] {
            for seed in 0..5 {
                let g = GParams::sample(n, 1, seed).unwrap();
                let crit = lambda_crit(&g).unwrap();
                let r = verify_largest(&g, 0.5 * crit, 1e-9).unwrap();
                assert!(r.holds, "n = {n}, seed = {seed}: {r:?}");
                assert!(r.continuation.identity_error() < 1e-8);
            }
        }
    }
}
