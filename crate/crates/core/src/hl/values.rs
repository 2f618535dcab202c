use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{enumerate, MultiIndex, OrderTag};

/// Largest allowed ratio `|v_{κ+1}| / |v_κ|` in canonical mode.
pub const CANONICAL_RATIO: f64 = 0.01;

/// Linear perturbation coefficients `v₀, …, v_n` of
/// `y³ − 3v₀y + Σ_κ (x_κ^{3d} − 3d v_κ x_κ)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HLParams {
    pub n: usize,
    pub d: u32,
    #[serde(with = "crate::util::complex_list")]
    pub v: Vec<Complex64>,
}

impl HLParams {
    /// Arbitrary complex coefficients (brute-force evaluation only).
    pub fn new(n: usize, d: u32, v: Vec<Complex64>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("d must be at least 1".into()));
        }
        if v.len() != n + 1 {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for n = {n}",
                v.len()
            )));
        }
        Ok(HLParams { n, d, v })
    }

    /// Positive real coefficients with consecutive ratio at most
    /// [`CANONICAL_RATIO`].
    pub fn canonical_from(n: usize, d: u32, v: &[f64]) -> Result<Self> {
        if v.iter().any(|&x| !(x > 0.0 && x.is_finite())) {
            return Err(Error::Domain("canonical coefficients must be positive reals".into()));
        }
        if v.windows(2).any(|w| w[1] > CANONICAL_RATIO * w[0] * (1.0 + 1e-12)) {
            return Err(Error::Domain(format!(
                "canonical coefficients need ratio at most {CANONICAL_RATIO} between levels"
            )));
        }
        Self::new(n, d, v.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// `v_κ = 0.01^κ`.
    pub fn canonical(n: usize, d: u32) -> Result<Self> {
        let v: Vec<f64> = (0..=n).map(|k| CANONICAL_RATIO.powi(k as i32)).collect();
        Self::canonical_from(n, d, &v)
    }

    /// The same system without the last variable.
    pub fn truncated(&self) -> Option<HLParams> {
        (self.n > 0).then(|| HLParams {
            n: self.n - 1,
            d: self.d,
            v: self.v[..self.n].to_vec(),
        })
    }

    fn positive_reals(&self) -> Result<Vec<f64>> {
        self.v
            .iter()
            .map(|z| {
                if z.im == 0.0 && z.re > 0.0 {
                    Ok(z.re)
                } else {
                    Err(Error::Domain(format!(
                        "closed form needs positive real coefficients (got {z})"
                    )))
                }
            })
            .collect()
    }
}

/// Critical values keyed by multi-index, in `≺₀` order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalValueTable {
    pub n: usize,
    pub d: u32,
    pub entries: Vec<TableEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableEntry {
    pub index: MultiIndex,
    #[serde(with = "crate::util::complex")]
    pub value: Complex64,
}

impl CriticalValueTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn values(&self) -> Vec<Complex64> {
        self.entries.iter().map(|e| e.value).collect()
    }

    pub fn get(&self, index: &MultiIndex) -> Option<Complex64> {
        self.entries.iter().find(|e| &e.index == index).map(|e| e.value)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,re,im\n");
        for e in &self.entries {
            out.push_str(&format!("{},{:.17e},{:.17e}\n", e.index.dotted(), e.value.re, e.value.im));
        }
        out
    }
}

/// `2(−1)^{i₀}v₀^{3/2} + (3d−1) Σ_κ η^{i_κ} v_κ^{3d/(3d−1)}` with
/// `η = e^{2πi/(3d−1)}`.
pub fn closed_form_values(p: &HLParams) -> Result<CriticalValueTable> {
    let v = p.positive_reals()?;
    let k = (3 * p.d - 1) as f64;
    let eta = |j: u32| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / k);
    let entries = enumerate(p.n, p.d, OrderTag::REVERSE_LEX)?
        .into_iter()
        .map(|index| {
            let e = index.entries();
            let sign = if e[0] % 2 == 0 { 1.0 } else { -1.0 };
            let mut value = Complex64::new(2.0 * sign * v[0].powf(1.5), 0.0);
            for kappa in 1..=p.n {
                value += k * eta(e[kappa]) * v[kappa].powf(3.0 * p.d as f64 / k);
            }
            TableEntry { index, value }
        })
        .collect();
    Ok(CriticalValueTable {
        n: p.n,
        d: p.d,
        entries,
    })
}

/// All `m` complex roots of `x^m = v`.
fn roots_of(v: Complex64, m: u32) -> Vec<Complex64> {
    let r = v.norm().powf(1.0 / m as f64);
    let theta = v.arg();
    (0..m)
        .map(|k| Complex64::from_polar(r, (theta + 2.0 * PI * k as f64) / m as f64))
        .collect()
}

/// Critical values of the separated sum, one per combination of critical
/// points of the summands, each summand evaluated by substitution.
pub fn brute_force_values(p: &HLParams) -> Vec<Complex64> {
    let m = 3 * p.d - 1;
    let v0 = p.v[0];
    let mut values: Vec<Complex64> = roots_of(v0, 2)
        .into_iter()
        .map(|y| y * y * y - 3.0 * v0 * y)
        .collect();
    for kappa in 1..=p.n {
        let vk = p.v[kappa];
        let summands: Vec<Complex64> = roots_of(vk, m)
            .into_iter()
            .map(|x| x.powu(3 * p.d) - (3 * p.d) as f64 * vk * x)
            .collect();
        values = values
            .iter()
            .flat_map(|a| summands.iter().map(move |b| a + b))
            .collect();
    }
    values
}

/// Roots `z` of the pencil `f + z`, i.e. the negated critical values. This is
/// the convention of the closed form.
pub fn pencil_roots(p: &HLParams) -> Vec<Complex64> {
    brute_force_values(p).into_iter().map(|z| -z).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MatchReport {
    pub matched: bool,
    pub max_distance: f64,
    pub sizes: (usize, usize),
}

/// Greedy nearest-neighbour matching of two multisets; succeeds when the
/// sizes agree and every pair lies within `tol`.
pub fn multisets_match(a: &[Complex64], b: &[Complex64], tol: f64) -> MatchReport {
    let sizes = (a.len(), b.len());
    if a.len() != b.len() {
        return MatchReport {
            matched: false,
            max_distance: f64::INFINITY,
            sizes,
        };
    }
    let mut used = vec![false; b.len()];
    let mut max_distance: f64 = 0.0;
    for x in a {
        let best = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, y)| (j, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1));
        match best {
            Some((j, dist)) => {
                used[j] = true;
                max_distance = max_distance.max(dist);
            }
            None => max_distance = f64::INFINITY,
        }
    }
    MatchReport {
        matched: max_distance <= tol,
        max_distance,
        sizes,
    }
}

/// Closed form against the negated brute-force critical values.
pub fn verify_hl_match(p: &HLParams, tol: f64) -> Result<MatchReport> {
    let table = closed_form_values(p)?;
    Ok(multisets_match(&table.values(), &pencil_roots(p), tol))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvarianceReport {
    pub invariant: bool,
    pub max_distance: f64,
    pub rotations: usize,
}

/// Rotating `v₀` by third roots of unity or any `v_κ` by `3d`-th roots of
/// unity leaves the critical value multiset unchanged.
pub fn verify_root_of_unity_invariance(p: &HLParams, tol: f64) -> InvarianceReport {
    let base = brute_force_values(p);
    let mut max_distance: f64 = 0.0;
    let mut rotations = 0;
    for kappa in 0..=p.n {
        let order = if kappa == 0 { 3 } else { 3 * p.d };
        for j in 1..order {
            let mut q = p.clone();
            q.v[kappa] *= Complex64::from_polar(1.0, 2.0 * PI * j as f64 / order as f64);
            let r = multisets_match(&base, &brute_force_values(&q), tol);
            max_distance = max_distance.max(r.max_distance);
            rotations += 1;
        }
    }
    InvarianceReport {
        invariant: max_distance <= tol,
        max_distance,
        rotations,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CircleReport {
    pub on_circles: bool,
    pub radius: f64,
    pub max_residual: f64,
    /// Values found on each circle, in the order of the truncated values.
    pub per_circle: Vec<usize>,
}

/// Every critical value lies on a circle of radius `(3d−1)|v_n|^{3d/(3d−1)}`
/// around a critical value of the system without `x_n`.
pub fn verify_circles(p: &HLParams, tol: f64) -> Result<CircleReport> {
    let truncated = p
        .truncated()
        .ok_or_else(|| Error::Domain("circle structure needs n ≥ 1".into()))?;
    let centres = brute_force_values(&truncated);
    let m = (3 * p.d - 1) as f64;
    let radius = m * p.v[p.n].norm().powf(3.0 * p.d as f64 / m);
    let mut per_circle = vec![0; centres.len()];
    let mut max_residual: f64 = 0.0;
    for z in brute_force_values(p) {
        let (k, residual) = centres
            .iter()
            .map(|c| ((z - c).norm() - radius).abs())
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("at least two centres");
        per_circle[k] += 1;
        max_residual = max_residual.max(residual);
    }
    Ok(CircleReport {
        on_circles: max_residual <= tol,
        radius,
        max_residual,
        per_circle,
    })
}
