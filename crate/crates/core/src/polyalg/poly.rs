use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact polynomial over ℤ in a fixed, ordered list of named variables.
///
/// Arithmetic between two polynomials requires identical variable lists and
/// panics otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

/// One serialized term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exp: Vec<u32>,
    pub coef: String,
}

/// Graded lexicographic comparison of exponent vectors.
pub fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl SparsePoly {
    pub fn zero(vars: &[&str]) -> Self {
        SparsePoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn zero_like(&self) -> Self {
        SparsePoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        let k = vars.len();
        p.push(vec![0; k], c.into());
        p
    }

    fn constant_like(&self, c: impl Into<BigInt>) -> Self {
        let mut p = self.zero_like();
        p.push(vec![0; self.vars.len()], c.into());
        p
    }

    /// The variable `name` as a polynomial. Panics if `name` is not in `vars`.
    pub fn var(vars: &[&str], name: &str) -> Self {
        let i = vars
            .iter()
            .position(|v| *v == name)
            .unwrap_or_else(|| panic!("unknown variable `{name}`"));
        let mut exp = vec![0; vars.len()];
        exp[i] = 1;
        Self::monomial(vars, exp, 1)
    }

    pub fn monomial(vars: &[&str], exp: Vec<u32>, c: impl Into<BigInt>) -> Self {
        assert_eq!(exp.len(), vars.len(), "exponent length");
        let mut p = Self::zero(vars);
        p.push(exp, c.into());
        p
    }

    /// Univariate polynomial from coefficients, constant term first.
    pub fn from_coefficients<T: Into<BigInt> + Clone>(var: &str, coeffs: &[T]) -> Self {
        let mut p = Self::zero(&[var]);
        for (k, c) in coeffs.iter().enumerate() {
            p.push(vec![k as u32], c.clone().into());
        }
        p
    }

    fn push(&mut self, exp: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn require_var(&self, name: &str) -> Result<usize> {
        self.var_index(name)
            .ok_or_else(|| Error::Domain(format!("unknown variable `{name}`")))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Degree in variable `v`; `None` for the zero polynomial.
    pub fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[v]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Leading term under graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "polynomials over different variables");
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = self.constant_like(1);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self, v: usize) -> Self {
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            if e[v] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[v] -= 1;
            out.push(e2, c * BigInt::from(e[v]));
        }
        out
    }

    pub fn derivative_by(&self, name: &str) -> Result<Self> {
        Ok(self.derivative(self.require_var(name)?))
    }

    /// Full evaluation at integer values, one per variable.
    pub fn evaluate(&self, values: &[BigInt]) -> Result<BigInt> {
        if values.len() != self.vars.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} values for {} variables",
                values.len(),
                self.vars.len()
            )));
        }
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in values.iter().zip(e) {
                if k > 0 {
                    t *= Pow::pow(x, k);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Replaces variable `v` by an integer; the variable stays in the list
    /// with exponent zero everywhere.
    pub fn specialize(&self, v: usize, value: &BigInt) -> Self {
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = std::mem::take(&mut e2[v]);
            out.push(e2, c * Pow::pow(value, k));
        }
        out
    }

    /// Replaces variable `v` by the polynomial `q` (same variable list).
    pub fn substitute(&self, v: usize, q: &SparsePoly) -> Self {
        self.check_vars(q);
        let top = self.degree_in(v).unwrap_or(0);
        let mut powers = vec![self.constant_like(1)];
        for k in 1..=top as usize {
            powers.push(&powers[k - 1] * q);
        }
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = std::mem::take(&mut e2[v]) as usize;
            let m = SparsePoly {
                vars: self.vars.clone(),
                terms: BTreeMap::from([(e2, c.clone())]),
            };
            out = &out + &(&m * &powers[k]);
        }
        out
    }

    /// Coefficients in variable `v`, lowest power first; each coefficient is
    /// a polynomial over the same variables not involving `v`.
    pub fn coefficients_in(&self, v: usize) -> Vec<SparsePoly> {
        let deg = self.degree_in(v).map_or(0, |d| d as usize + 1);
        let mut out = vec![self.zero_like(); deg];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = std::mem::take(&mut e2[v]) as usize;
            out[k].push(e2, c.clone());
        }
        out
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(vars: &[String], v: usize, coeffs: &[SparsePoly]) -> Self {
        let mut out = SparsePoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        };
        for (k, c) in coeffs.iter().enumerate() {
            for (e, x) in &c.terms {
                let mut e2 = e.clone();
                e2[v] += k as u32;
                out.push(e2, x.clone());
            }
        }
        out
    }

    /// Dense coefficients of a polynomial that involves only variable `v`.
    pub fn to_univariate(&self, v: usize) -> Result<Vec<BigInt>> {
        let deg = self.degree_in(v).map_or(0, |d| d as usize + 1);
        let mut out = vec![BigInt::zero(); deg];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &k)| i != v && k > 0) {
                return Err(Error::Precondition(format!(
                    "polynomial is not univariate in `{}`",
                    self.vars[v]
                )));
            }
            out[e[v] as usize] = c.clone();
        }
        Ok(out)
    }

    pub fn from_univariate(vars: &[String], v: usize, coeffs: &[BigInt]) -> Self {
        let mut out = SparsePoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        };
        for (k, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[v] = k as u32;
            out.push(e, c.clone());
        }
        out
    }

    /// Exact division; fails unless `divisor` divides `self` in ℤ[vars].
    pub fn div_exact(&self, divisor: &SparsePoly) -> Result<SparsePoly> {
        self.check_vars(divisor);
        let (lead_e, lead_c) = divisor.leading_term().ok_or(Error::ZeroPolynomial)?;
        if divisor.terms.len() == 1 {
            let mut out = self.zero_like();
            for (e, c) in &self.terms {
                let (q, r) = c.div_rem(lead_c);
                if !r.is_zero() || e.iter().zip(lead_e).any(|(a, b)| a < b) {
                    return Err(Error::InexactDivision);
                }
                out.push(e.iter().zip(lead_e).map(|(a, b)| a - b).collect(), q);
            }
            return Ok(out);
        }
        let mut rem = self.clone();
        let mut quot = self.zero_like();
        while let Some((e, c)) = rem.leading_term() {
            let (q, r) = c.div_rem(lead_c);
            if !r.is_zero() || e.iter().zip(lead_e).any(|(a, b)| a < b) {
                return Err(Error::InexactDivision);
            }
            let qe: Vec<u32> = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let mut step = self.zero_like();
            step.push(qe, q);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Ok(quot)
    }

    /// Gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Terms in descending graded lexicographic order.
    pub fn to_terms(&self) -> Vec<Term> {
        let mut ts: Vec<(&Vec<u32>, &BigInt)> = self.terms.iter().collect();
        ts.sort_by(|a, b| grlex(b.0, a.0));
        ts.into_iter()
            .map(|(e, c)| Term {
                exp: e.clone(),
                coef: c.to_string(),
            })
            .collect()
    }

    pub fn from_terms(vars: &[&str], terms: &[Term]) -> Result<Self> {
        let mut p = Self::zero(vars);
        for t in terms {
            if t.exp.len() != vars.len() {
                return Err(Error::DimensionMismatch(format!(
                    "term with {} exponents over {} variables",
                    t.exp.len(),
                    vars.len()
                )));
            }
            let c: BigInt = t
                .coef
                .parse()
                .map_err(|_| Error::Domain(format!("bad coefficient `{}`", t.coef)))?;
            p.push(t.exp.clone(), c);
        }
        Ok(p)
    }
}

impl Serialize for SparsePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_terms().serialize(s)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut ts: Vec<(&Vec<u32>, &BigInt)> = self.terms.iter().collect();
        ts.sort_by(|a, b| grlex(b.0, a.0));
        for (k, (e, c)) in ts.into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let a = c.abs();
            let factors: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, v)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{a}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.push(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.push(e.clone(), -c);
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

fn exponent_product(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.check_vars(rhs);
        let mut out = self.zero_like();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.push(exponent_product(ea, eb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for SparsePoly {
            type Output = SparsePoly;
            fn $m(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
